/**
 * Copyright 2026 The su11 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "su11/output.hpp"

#include <json.hpp>

#include "su11/config_io.hpp"

namespace su11 {

namespace {

using ordered_json = nlohmann::ordered_json;

bool multi(const std::vector<SeriesResult>& series) { return series.size() > 1; }

bool reports_convention(const SweepSpec& spec) {
  return spec.has_metric(Metric::Dtheta2) || spec.has_metric(Metric::DbVsShotnoise);
}

const SweepSpec& lead_spec(const std::vector<SeriesResult>& series) {
  static const SweepSpec empty;
  return series.empty() ? empty : series.front().spec;
}

// One table row as (column, text) pairs; missing values are empty text.
std::vector<std::string> row_fields(const SeriesResult& s, const SweepRow& row, bool with_series) {
  std::vector<std::string> f;
  if (with_series) {
    f.push_back(s.name);
    f.push_back(to_string(s.spec.axis));
  }
  f.push_back(format_number(row.x));
  for (const auto& v : row.values) f.push_back(v ? format_number(*v) : "");
  if (reports_convention(s.spec)) f.push_back(metrics::to_string(s.spec.snl_convention));
  f.push_back(row.error);
  return f;
}

}  // namespace

std::string tool_version() { return SU11_VERSION; }

std::vector<std::pair<std::string, std::string>> conventions(const SweepSpec& spec) {
  return {
      {"quadratures", "x=(a+a^dagger)/sqrt(2), vacuum covariance I/2"},
      {"phase", "signal a -> a exp(-i theta)"},
      {"transmission", "config and axis values are power transmissions t^2"},
      {"axis_interpretation", spec.base ? (spec.axis_total ? "total" : "composed") : "direct"},
      {"working_point", spec.axis == Axis::Theta ? "axis value" : "optimal theta0 in (0,pi)"},
      {"snl_convention", metrics::to_string(spec.snl_convention)},
  };
}

std::vector<std::string> csv_columns(const std::vector<SeriesResult>& series) {
  const SweepSpec& spec = lead_spec(series);
  std::vector<std::string> cols;
  if (multi(series)) {
    cols = {"series", "axis", "x"};
  } else {
    cols.push_back(to_string(spec.axis));
  }
  for (const Metric m : spec.metrics) cols.push_back(to_string(m));
  if (reports_convention(spec)) cols.push_back("snl_convention");
  cols.push_back("error");
  return cols;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const OutputHeader& header, const std::vector<SeriesResult>& series) {
  for (std::size_t k = 1; k < series.size(); ++k) {
    if (series[k].spec.metrics != series.front().spec.metrics) {
      throw std::invalid_argument("all series in one table must request the same metrics");
    }
  }
  os << "# tool: su11 " << tool_version() << '\n';
  os << "# command: " << header.command << '\n';
  for (const auto& [k, v] : header.extra) os << "# " << k << ": " << v << '\n';
  for (const auto& [k, v] : conventions(lead_spec(series))) os << "# convention." << k << ": " << v << '\n';
  for (const auto& s : series) {
    os << "# series: " << s.name << '\n';
    const std::string cfg = serialize_config(s.spec);
    std::size_t pos = 0;
    while (pos < cfg.size()) {
      const auto nl = cfg.find('\n', pos);
      os << "#   " << cfg.substr(pos, nl - pos) << '\n';
      pos = nl + 1;
    }
  }

  const auto cols = csv_columns(series);
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << csv_field(cols[k]);
  os << '\n';
  for (const auto& s : series) {
    for (const auto& row : s.rows) {
      const auto fields = row_fields(s, row, multi(series));
      for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << csv_field(fields[k]);
      os << '\n';
    }
  }
}

void write_json(std::ostream& os, const OutputHeader& header, const std::vector<SeriesResult>& series) {
  ordered_json doc;
  doc["tool"] = "su11";
  doc["version"] = tool_version();
  doc["command"] = header.command;
  for (const auto& [k, v] : header.extra) doc[k] = v;
  ordered_json conv = ordered_json::object();
  for (const auto& [k, v] : conventions(lead_spec(series))) conv[k] = v;
  doc["conventions"] = conv;

  ordered_json configs = ordered_json::array();
  for (const auto& s : series) {
    ordered_json cfg = ordered_json::object();
    cfg["series"] = s.name;
    for (const auto& key : config_keys()) {
      if (!s.spec.base && (key == "base_ts2" || key == "base_ti2")) continue;
      cfg[key] = setting_value(s.spec, key);
    }
    configs.push_back(cfg);
  }
  doc["configs"] = configs;

  const auto cols = csv_columns(series);
  ordered_json rows = ordered_json::array();
  for (const auto& s : series) {
    for (const auto& row : s.rows) {
      ordered_json r = ordered_json::object();
      std::size_t c = 0;
      if (multi(series)) {
        r[cols[c++]] = s.name;
        r[cols[c++]] = to_string(s.spec.axis);
      }
      r[cols[c++]] = row.x;
      for (const auto& v : row.values) {
        r[cols[c++]] = v ? ordered_json(*v) : ordered_json(nullptr);
      }
      if (reports_convention(s.spec)) r[cols[c++]] = metrics::to_string(s.spec.snl_convention);
      r[cols[c++]] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
      rows.push_back(r);
    }
  }
  doc["rows"] = rows;
  os << doc.dump(2) << '\n';
}

bool has_errors(const std::vector<SeriesResult>& series) {
  for (const auto& s : series)
    for (const auto& row : s.rows)
      if (!row.ok()) return true;
  return false;
}

}  // namespace su11
