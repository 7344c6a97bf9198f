// Copyright 2026 The qcrot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "qcrot/error.hpp"
#include "qcrot/oracle.hpp"

namespace qcrot {
namespace {

TEST(Oracle, HhlValue) {
  const AngleOracle o = make_hhl_oracle(4, 1.0 / 16.0);
  EXPECT_NEAR(o.theta(8), 0.009973271918692057, 1e-14);
  EXPECT_NEAR(o.amplitude(8), 0.125, 1e-14);
  // k = 0 is guarded to the smallest grid value, lambda = 2^-m.
  EXPECT_NEAR(o.amplitude(0), 1.0, 1e-14);
}

TEST(Oracle, HhlRejectsLargeConstant) {
  EXPECT_THROW(make_hhl_oracle(4, 0.1), ParameterError);
  const AngleOracle o = make_hhl_oracle(4, 0.1, true);
  // C / lambda = 1.6 clamps to amplitude 1, i.e. 1/8 turn.
  EXPECT_DOUBLE_EQ(o.theta(1), 0.125);
  EXPECT_NEAR(o.amplitude(1), 1.0, 1e-15);
}

TEST(Oracle, QsvtValue) {
  const AngleOracle o = make_qsvt_oracle(4, 0.5, 0.2, [](std::uint64_t) { return 0.64; });
  EXPECT_NEAR(o.theta(3), 0.03058932338478078, 1e-14);
}

TEST(Oracle, QaopValue) {
  const AngleOracle o = make_qaop_oracle(
      4, 0.5, 0.01, [](std::uint64_t) { return std::pair<double, double>{0.2, 0.2}; });
  EXPECT_NEAR(o.theta(5), 0.05372526035206867, 1e-14);
}

TEST(Oracle, TrivialAnchors) {
  const AngleOracle threshold = make_qsvt_oracle(3, 0.5, 0.3, [](std::uint64_t) { return 0.09; });
  EXPECT_NEAR(threshold.theta(2), 0.0, 1e-12);
  const AngleOracle flat = make_qsvt_oracle(3, 1.0, 0.0);
  EXPECT_NEAR(flat.theta(5), 0.125, 1e-12);
  const AngleOracle off = make_qaop_oracle(4, 0.3, 0.0);
  for (double t : off.table()) EXPECT_NEAR(t, std::asin(0.3) / (4 * std::numbers::pi), 1e-12);
  const AngleOracle k4 = make_qkpca_oracle(2, [](std::uint64_t k) { return k == 1 ? 4.0 : 2.0; });
  EXPECT_NEAR(k4.theta(1), 1.0 / 24.0, 1e-12);
  EXPECT_NEAR(k4.theta(2), 1.0 / 16.0, 1e-12);
}

TEST(Oracle, QkpcaIsValid) {
  const AngleOracle o = make_qkpca_oracle(4);
  for (double t : o.table()) {
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 0.25);
  }
}

TEST(Oracle, ExactAndQuantized) {
  const AngleOracle e = make_exact_oracle(5);
  EXPECT_TRUE(e.exactly_representable());
  EXPECT_DOUBLE_EQ(e.theta(7), std::floor(7 * 0.25) / 32.0);
  const AngleOracle h = make_hhl_oracle(4, 1.0 / 16.0);
  EXPECT_FALSE(h.exactly_representable());
  const AngleOracle q = h.quantized();
  EXPECT_TRUE(q.exactly_representable());
  EXPECT_DOUBLE_EQ(q.theta(1), 0.125);
  EXPECT_DOUBLE_EQ(q.theta(2), 0.0);
  EXPECT_DOUBLE_EQ(quantize_turns(0.1875 - 1e-12, 4), 0.1875);
}

TEST(Oracle, RejectsOutOfRange) {
  EXPECT_THROW(make_table_oracle({0.0, 0.3}), ParameterError);
  EXPECT_THROW(make_table_oracle({0.0, -0.01}), ParameterError);
  EXPECT_THROW(make_table_oracle({0.0, 0.1, 0.2}), Error);
}

TEST(Oracle, JsonRoundTrip) {
  for (const AngleOracle& o :
       {make_hhl_oracle(4, 0.05), make_exact_oracle(3, 0.125), make_zero_oracle(2),
        make_table_oracle({0.0, 0.1, 0.2, 0.25}), make_hhl_oracle(5, 0.02).quantized()}) {
    const AngleOracle back = AngleOracle::from_json(o.to_json());
    EXPECT_EQ(back.table(), o.table()) << o.name();
  }
  EXPECT_THROW(AngleOracle::from_json({{"name", "nope"}, {"m", 3}}), ValidationError);
}

TEST(Oracle, ParseText) {
  EXPECT_EQ(parse_oracle("zero", 3).table(), make_zero_oracle(3).table());
  EXPECT_EQ(parse_oracle("exact:r=0.125", 3).table(), make_exact_oracle(3, 0.125).table());
  EXPECT_EQ(parse_oracle("hhl:C=0.05", 4).table(), make_hhl_oracle(4, 0.05).table());
  EXPECT_THROW(parse_oracle("hhl:C", 4), ValidationError);
  EXPECT_THROW(parse_oracle("bogus", 4), ValidationError);
}

}  // namespace
}  // namespace qcrot
