// Copyright 2026 The sacsphere Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "sacsphere/errors.hpp"
#include "sacsphere/meshgen.hpp"
#include "sacsphere/sequence.hpp"

using namespace sacsphere;

namespace {

IntegerPairSequence seq_of(std::initializer_list<std::pair<int, int>> items) {
  std::vector<IntegerPair> v;
  for (auto [m, n] : items) v.emplace_back(m, n);
  return IntegerPairSequence(std::move(v));
}

std::string parse_error(std::string_view text) {
  try {
    parse_sequence(text);
  } catch (const ParameterError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Sequence, ParsesExamples) {
  EXPECT_EQ(parse_sequence("5,0"), seq_of({{5, 0}}));
  EXPECT_EQ(parse_sequence("1,1;(4,0)^2"), seq_of({{1, 1}, {4, 0}, {4, 0}}));
  EXPECT_EQ(parse_sequence(" ( 1 , 1 ) ; (2,0)^4 "), seq_of({{1, 1}, {2, 0}, {2, 0}, {2, 0}, {2, 0}}));
  EXPECT_EQ(parse_sequence("(15,2)"), seq_of({{15, 2}}));
}

TEST(Sequence, RejectsMalformed) {
  EXPECT_NE(parse_error(""), "");
  EXPECT_NE(parse_error("1,2").find("1,2"), std::string::npos);
  EXPECT_NE(parse_error("4,0;x").find("x"), std::string::npos);
  EXPECT_NE(parse_error("4,0^2"), "");
  EXPECT_NE(parse_error("(4,0)^0"), "");
  EXPECT_NE(parse_error("(4,0)^1001"), "");
  EXPECT_NE(parse_error("4,0;;1,1"), "");
  EXPECT_NE(parse_error("0,0"), "");
  EXPECT_NE(parse_error("1,1,1"), "");
}

TEST(Sequence, FormatAndDescribe) {
  const auto s = seq_of({{1, 1}, {4, 0}, {4, 0}});
  EXPECT_EQ(format_sequence(s), "1,1;(4,0)^2");
  EXPECT_EQ(describe_sequence(s), "((1,1),(4,0)^2)");
  EXPECT_EQ(describe_sequence(seq_of({{27, 0}})), "((27,0))");
}

TEST(Sequence, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 6), mm(1, 9), rep(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<IntegerPair> v;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) {
      const int m = mm(rng);
      const int n = std::uniform_int_distribution<int>(0, m)(rng);
      const int r = rep(rng);
      for (int j = 0; j < r; ++j) v.emplace_back(m, n);
    }
    const IntegerPairSequence s(v);
    ASSERT_EQ(parse_sequence(format_sequence(s)), s) << format_sequence(s);
  }
}

TEST(Sequence, EmptyRejected) { EXPECT_THROW(IntegerPairSequence({}), ParameterError); }

TEST(Sequence, GammaProduct) {
  EXPECT_EQ(seq_of({{1, 1}, {4, 0}, {4, 0}}).gamma_product(), 768u);
  std::vector<IntegerPair> big(40, IntegerPair(10, 10));
  EXPECT_FALSE(IntegerPairSequence(big).gamma_product().has_value());
}

TEST(Sequence, ExpectedCardinality) {
  EXPECT_EQ(expected_cardinality(12, seq_of({{5, 0}})), 252u);
  EXPECT_EQ(expected_cardinality(12, seq_of({{27, 0}})), 7292u);
  EXPECT_EQ(expected_cardinality(12, seq_of({{1, 1}, {16, 0}})), 7682u);
  EXPECT_EQ(expected_cardinality(12, seq_of({{1, 1}, {15, 2}})), 7772u);
  EXPECT_EQ(expected_cardinality(12, seq_of({{1, 1}, {3, 0}})), 272u);
  EXPECT_EQ(expected_cardinality(6, seq_of({{2, 0}})), 18u);
  EXPECT_EQ(expected_cardinality(4, seq_of({{1, 0}})), 4u);
  std::vector<IntegerPair> big(40, IntegerPair(10, 10));
  EXPECT_THROW(expected_cardinality(12, IntegerPairSequence(big)), ParameterError);
}

TEST(SequenceFamily, Instantiates) {
  EXPECT_EQ(SequenceFamily::parse("l,0").instantiate(3), seq_of({{3, 0}}));
  EXPECT_EQ(SequenceFamily::parse("1,1;(l,0)").instantiate(4), seq_of({{1, 1}, {4, 0}}));
  EXPECT_EQ(SequenceFamily::parse("1,1;(4,0)^l").instantiate(2), seq_of({{1, 1}, {4, 0}, {4, 0}}));
  EXPECT_EQ(SequenceFamily::parse("(l,l)").instantiate(2), seq_of({{2, 2}}));
  EXPECT_THROW(SequenceFamily::parse("1,l").instantiate(2), ParameterError);
  EXPECT_THROW(SequenceFamily::parse("q,0"), ParameterError);
}
