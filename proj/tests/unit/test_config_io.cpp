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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "su11/config_io.hpp"
#include "su11/output.hpp"
#include "support.hpp"

namespace su11 {
namespace {

TEST(ConfigIo, ParsesAllKeys) {
  const auto spec = parse_config(R"(
# unbalanced sweep with initial transmissions
g1 = 0.45
g2 = 0.2
theta = 1.5
ts2 = 0.25          # inline comment
ti2 = 0.81
n_i = 10000
snl_convention = after_loss
axis = t_s2
lo = 0.01
hi = 1
steps = 40
base_ts2 = 0.52
base_ti2 = 0.42
metrics = visibility, dtheta2
axis_total = true
)");
  EXPECT_EQ(spec.fixed.g1, 0.45);
  EXPECT_EQ(spec.fixed.g2, 0.2);
  EXPECT_EQ(spec.fixed.theta, 1.5);
  EXPECT_EQ(spec.fixed.t_s, 0.5);
  EXPECT_EQ(spec.fixed.t_i, 0.9);
  EXPECT_EQ(spec.fixed.n_i, 1e4);
  EXPECT_EQ(spec.snl_convention, metrics::ShotNoiseConvention::AfterLoss);
  EXPECT_EQ(spec.axis, Axis::SignalT2);
  EXPECT_EQ(spec.steps, 40);
  EXPECT_EQ(spec.base, (BaseTransmission{0.52, 0.42}));
  EXPECT_EQ(spec.metrics, (std::vector<Metric>{Metric::Visibility, Metric::Dtheta2}));
  EXPECT_TRUE(spec.axis_total);
}

TEST(ConfigIo, DefaultsWhenEmpty) { EXPECT_EQ(parse_config("\n# nothing\n"), SweepSpec{}); }

TEST(ConfigIo, Errors) {
  EXPECT_THROW(parse_config("g3 = 1"), ConfigError);
  EXPECT_THROW(parse_config("g1 1"), ConfigError);
  EXPECT_THROW(parse_config("g1 = abc"), ConfigError);
  EXPECT_THROW(parse_config("g1 = 0.1x"), ConfigError);
  EXPECT_THROW(parse_config("steps = 2.5"), ConfigError);
  EXPECT_THROW(parse_config("ts2 = 1.5"), ConfigError);
  EXPECT_THROW(parse_config("axis = phase"), ConfigError);
  EXPECT_THROW(parse_config("metrics = mean,,visibility"), ConfigError);
  EXPECT_THROW(parse_config("snl_convention = inside"), ConfigError);
  EXPECT_THROW(parse_config("axis_total = maybe"), ConfigError);
  EXPECT_THROW(parse_config("n_i = inf"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/su11.cfg"), ConfigError);
  try {
    parse_config("g1 = 0.1\n\ng2 = ?\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ConfigIo, NumbersRoundTripExactly) {
  testing::ConfigGenerator gen(77);
  for (int k = 0; k < 1000; ++k) {
    const double v = gen.uniform(-1e6, 1e6) * std::pow(10.0, gen.uniform(-20, 5));
    EXPECT_EQ(parse_number(format_number(v)), v);
  }
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e4), "10000");
}

TEST(ConfigIo, SpecRoundTrip) {
  testing::ConfigGenerator gen(101);
  for (int k = 0; k < 300; ++k) {
    SweepSpec s;
    s.fixed = gen.next(1.0, 1e4);
    s.axis = static_cast<Axis>(k % 7);
    s.lo = gen.uniform(0, 0.5);
    s.hi = gen.uniform(0.5, 1);
    s.steps = 2 + k;
    s.metrics = k % 2 ? std::vector<Metric>{Metric::DbVsShotnoise, Metric::Mean} : std::vector<Metric>{Metric::Visibility};
    if (k % 3 == 0) s.base = BaseTransmission{gen.uniform(0.1, 1), gen.uniform(0.1, 1)};
    s.axis_total = k % 5 == 0;
    s.snl_convention = k % 2 ? metrics::ShotNoiseConvention::AfterLoss : metrics::ShotNoiseConvention::AfterOpa1;
    const SweepSpec back = parse_config(serialize_config(s));
    EXPECT_EQ(back, s) << serialize_config(s);
    EXPECT_EQ(serialize_config(back), serialize_config(s));
  }
}

TEST(ConfigIo, PowerTransmissionKeysReparseToSameSpec) {
  const SweepSpec first = parse_config("ts2 = 0.52\nti2 = 0.3\n");
  EXPECT_EQ(parse_config(serialize_config(first)), first);
}

TEST(Output, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

SeriesResult sample() {
  SeriesResult s;
  s.name = "sweep";
  s.spec.axis = Axis::SignalT2;
  s.spec.metrics = {Metric::Visibility, Metric::Dtheta2};
  s.rows = {{.x = 0.5, .values = {0.9, 2.5}, .error = ""},
            {.x = 1.0, .values = {std::nullopt, 3.0}, .error = "visibility: undefined, really"}};
  return s;
}

TEST(Output, CsvLayout) {
  std::ostringstream os;
  write_csv(os, {.command = "sweep"}, {sample()});
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("# tool: su11 ", 0), 0u);
  EXPECT_NE(csv.find("# convention.snl_convention: after_opa1\n"), std::string::npos);
  EXPECT_NE(csv.find("#   axis = t_s2\n"), std::string::npos);
  EXPECT_NE(csv.find("\nt_s2,visibility,dtheta2,snl_convention,error\n"), std::string::npos);
  EXPECT_NE(csv.find("\n0.5,0.9,2.5,after_opa1,\n"), std::string::npos);
  EXPECT_NE(csv.find("\n1,,3,after_opa1,\"visibility: undefined, really\"\n"), std::string::npos);
}

TEST(Output, MultiSeriesColumns) {
  auto a = sample();
  auto b = sample();
  b.name = "other";
  b.spec.axis = Axis::IdlerT2;
  EXPECT_EQ(csv_columns({a, b}),
            (std::vector<std::string>{"series", "axis", "x", "visibility", "dtheta2", "snl_convention", "error"}));
  b.spec.metrics = {Metric::Mean};
  std::ostringstream os;
  EXPECT_THROW(write_csv(os, {}, {a, b}), std::invalid_argument);
}

TEST(Output, JsonMirrorUsesCsvNames) {
  std::ostringstream os;
  write_json(os, {.command = "sweep"}, {sample()});
  const std::string js = os.str();
  for (const char* field : {"\"t_s2\"", "\"visibility\"", "\"dtheta2\"", "\"snl_convention\"", "\"error\"",
                            "\"conventions\"", "\"configs\""}) {
    EXPECT_NE(js.find(field), std::string::npos) << field;
  }
  EXPECT_NE(js.find("\"visibility\": null"), std::string::npos);
  EXPECT_TRUE(has_errors({sample()}));
}

}  // namespace
}  // namespace su11
