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

#include "su11/config_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace su11 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("expected a boolean, got '" + std::string(text) + "'");
}

int parse_steps(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

double amplitude(double power, std::string_view key) {
  if (!(power >= 0.0 && power <= 1.0)) throw ConfigError(std::string(key) + " must lie in [0,1]");
  return std::sqrt(power);
}

BaseTransmission& base_of(SweepSpec& spec) {
  if (!spec.base) spec.base = BaseTransmission{};
  return *spec.base;
}

std::vector<Metric> parse_metrics(std::string_view text) {
  std::vector<Metric> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (item.empty()) throw ConfigError("empty entry in metrics list");
    try {
      out.push_back(parse_metric(item));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("metrics list is empty");
  return out;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("expected a finite number, got '" + std::string(text) + "'");
  }
  return v;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "g1",    "g2",       "theta",    "ts2",     "ti2",        "n_i",           "snl_convention",
      "axis",  "lo",       "hi",       "steps",   "base_ts2",   "base_ti2",      "metrics",
      "axis_total"};
  return keys;
}

void apply_setting(SweepSpec& spec, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  try {
    if (key == "g1") {
      spec.fixed.g1 = parse_number(value);
    } else if (key == "g2") {
      spec.fixed.g2 = parse_number(value);
    } else if (key == "theta") {
      spec.fixed.theta = parse_number(value);
    } else if (key == "ts2") {
      spec.fixed.t_s = amplitude(parse_number(value), key);
    } else if (key == "ti2") {
      spec.fixed.t_i = amplitude(parse_number(value), key);
    } else if (key == "n_i") {
      spec.fixed.n_i = parse_number(value);
    } else if (key == "snl_convention") {
      spec.snl_convention = metrics::parse_convention(value);
    } else if (key == "axis") {
      spec.axis = parse_axis(value);
    } else if (key == "lo") {
      spec.lo = parse_number(value);
    } else if (key == "hi") {
      spec.hi = parse_number(value);
    } else if (key == "steps") {
      spec.steps = parse_steps(value);
    } else if (key == "base_ts2") {
      base_of(spec).ts2 = parse_number(value);
    } else if (key == "base_ti2") {
      base_of(spec).ti2 = parse_number(value);
    } else if (key == "metrics") {
      spec.metrics = parse_metrics(value);
    } else if (key == "axis_total") {
      spec.axis_total = parse_bool(value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

SweepSpec parse_config(std::string_view text) {
  SweepSpec spec;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    try {
      apply_setting(spec, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return spec;
}

SweepSpec load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string setting_value(const SweepSpec& spec, std::string_view key) {
  if (key == "g1") return format_number(spec.fixed.g1);
  if (key == "g2") return format_number(spec.fixed.g2);
  if (key == "theta") return format_number(spec.fixed.theta);
  if (key == "ts2") return format_number(spec.fixed.t_s * spec.fixed.t_s);
  if (key == "ti2") return format_number(spec.fixed.t_i * spec.fixed.t_i);
  if (key == "n_i") return format_number(spec.fixed.n_i);
  if (key == "snl_convention") return metrics::to_string(spec.snl_convention);
  if (key == "axis") return to_string(spec.axis);
  if (key == "lo") return format_number(spec.lo);
  if (key == "hi") return format_number(spec.hi);
  if (key == "steps") return std::to_string(spec.steps);
  if (key == "base_ts2") return spec.base ? format_number(spec.base->ts2) : "";
  if (key == "base_ti2") return spec.base ? format_number(spec.base->ti2) : "";
  if (key == "metrics") {
    std::string out;
    for (const Metric m : spec.metrics) {
      if (!out.empty()) out += ',';
      out += to_string(m);
    }
    return out;
  }
  if (key == "axis_total") return spec.axis_total ? "true" : "false";
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string serialize_config(const SweepSpec& spec) {
  std::string out;
  for (const auto& key : config_keys()) {
    if (!spec.base && (key == "base_ts2" || key == "base_ti2")) continue;
    out += key;
    out += " = ";
    out += setting_value(spec, key);
    out += '\n';
  }
  return out;
}

}  // namespace su11
