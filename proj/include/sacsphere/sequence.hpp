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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sacsphere/lattice.hpp"

namespace sacsphere {

/// Non-empty ordered list of integer pairs ((m1,n1), ..., (mK,nK)).
class IntegerPairSequence {
 public:
  explicit IntegerPairSequence(std::vector<IntegerPair> pairs);

  const std::vector<IntegerPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Product of the per-pair triangulation numbers, or nullopt on overflow.
  std::optional<std::uint64_t> gamma_product() const noexcept;

  friend bool operator==(const IntegerPairSequence&, const IntegerPairSequence&) = default;

 private:
  std::vector<IntegerPair> pairs_;
};

/// Parses `m,n` items joined by `;`. An item may be parenthesised and a
/// parenthesised item may carry a repetition suffix: `1,1;(4,0)^2`.
/// Whitespace is ignored. Throws ParameterError naming the offending item.
IntegerPairSequence parse_sequence(std::string_view text);

/// Canonical text form accepted by parse_sequence; runs of equal pairs are
/// folded into `(m,n)^k`.
std::string format_sequence(const IntegerPairSequence& seq);

/// Nested rendering, e.g. ((1,1),(4,0)^2).
std::string describe_sequence(const IntegerPairSequence& seq);

/// A sequence template over one integer parameter `l`, which may stand for
/// m, n, or a repetition count: `l,0`, `1,1;(l,0)`, `1,1;(4,0)^l`.
class SequenceFamily {
 public:
  static SequenceFamily parse(std::string_view text);

  /// Throws ParameterError when the instantiation is not a valid sequence.
  IntegerPairSequence instantiate(int l) const;

  const std::string& text() const noexcept { return text_; }

 private:
  struct Term {
    int m = 0;
    int n = 0;
    int repeat = 1;
    bool m_is_l = false;
    bool n_is_l = false;
    bool repeat_is_l = false;
  };

  std::string text_;
  std::vector<Term> terms_;
};

}  // namespace sacsphere
