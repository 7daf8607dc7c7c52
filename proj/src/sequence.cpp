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

#include "sacsphere/sequence.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "sacsphere/errors.hpp"

namespace sacsphere {

IntegerPairSequence::IntegerPairSequence(std::vector<IntegerPair> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw ParameterError("integer-pair sequence must not be empty");
}

std::optional<std::uint64_t> IntegerPairSequence::gamma_product() const noexcept {
  std::uint64_t prod = 1;
  for (const IntegerPair& p : pairs_) {
    const auto g = static_cast<std::uint64_t>(p.gamma());
    if (prod > std::numeric_limits<std::uint64_t>::max() / g) return std::nullopt;
    prod *= g;
  }
  return prod;
}

namespace {

constexpr int kMaxRepeat = 1000;

struct Value {
  int number = 0;
  bool is_l = false;
};

struct RawItem {
  Value m, n, repeat{1, false};
};

class ItemParser {
 public:
  ItemParser(std::string_view item, std::size_t index, bool allow_l)
      : item_(item), index_(index), allow_l_(allow_l) {}

  RawItem parse() {
    RawItem out;
    const bool paren = peek() == '(';
    if (paren) ++pos_;
    out.m = value();
    expect(',');
    out.n = value();
    if (paren) {
      expect(')');
      if (peek() == '^') {
        ++pos_;
        out.repeat = value();
        if (!out.repeat.is_l && (out.repeat.number < 1 || out.repeat.number > kMaxRepeat)) {
          fail("repetition count must be in [1, " + std::to_string(kMaxRepeat) + "]");
        }
      }
    } else if (peek() == '^') {
      fail("repetition suffix requires a parenthesised pair");
    }
    if (pos_ != item_.size()) fail("unexpected trailing characters");
    return out;
  }

 private:
  char peek() const { return pos_ < item_.size() ? item_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream os;
    os << "sequence item " << index_ + 1 << " '" << item_ << "': " << why;
    throw ParameterError(os.str());
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Value value() {
    if (allow_l_ && peek() == 'l') {
      ++pos_;
      return {0, true};
    }
    const char* begin = item_.data() + pos_;
    const char* end = item_.data() + item_.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return {v, false};
  }

  std::string_view item_;
  std::size_t index_;
  bool allow_l_;
  std::size_t pos_ = 0;
};

std::vector<RawItem> parse_items(std::string_view text, bool allow_l) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParameterError("empty integer-pair sequence");
  std::vector<RawItem> items;
  std::size_t start = 0;
  std::size_t index = 0;
  while (true) {
    const std::size_t semi = compact.find(';', start);
    const std::string_view item = std::string_view(compact).substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (item.empty()) {
      throw ParameterError("sequence item " + std::to_string(index + 1) + " is empty");
    }
    items.push_back(ItemParser(item, index, allow_l).parse());
    ++index;
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return items;
}

IntegerPair make_pair_at(int m, int n, std::size_t index) {
  try {
    return IntegerPair(m, n);
  } catch (const ParameterError& e) {
    throw ParameterError("sequence item " + std::to_string(index + 1) + ": " + e.what());
  }
}

std::string pair_text(const IntegerPair& p) {
  return std::to_string(p.m()) + "," + std::to_string(p.n());
}

}  // namespace

IntegerPairSequence parse_sequence(std::string_view text) {
  std::vector<IntegerPair> pairs;
  const auto items = parse_items(text, false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const IntegerPair p = make_pair_at(items[i].m.number, items[i].n.number, i);
    for (int r = 0; r < items[i].repeat.number; ++r) pairs.push_back(p);
  }
  return IntegerPairSequence(std::move(pairs));
}

std::string format_sequence(const IntegerPairSequence& seq) {
  std::string out;
  const auto& pairs = seq.pairs();
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (!out.empty()) out += ';';
    const std::size_t run = j - i;
    out += run == 1 ? pair_text(pairs[i]) : "(" + pair_text(pairs[i]) + ")^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string describe_sequence(const IntegerPairSequence& seq) {
  std::string out = "(";
  const auto& pairs = seq.pairs();
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (out.size() > 1) out += ',';
    out += "(" + pair_text(pairs[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

SequenceFamily SequenceFamily::parse(std::string_view text) {
  SequenceFamily fam;
  fam.text_ = std::string(text);
  for (const RawItem& item : parse_items(text, true)) {
    Term t;
    t.m = item.m.number;
    t.n = item.n.number;
    t.repeat = item.repeat.number;
    t.m_is_l = item.m.is_l;
    t.n_is_l = item.n.is_l;
    t.repeat_is_l = item.repeat.is_l;
    fam.terms_.push_back(t);
  }
  return fam;
}

IntegerPairSequence SequenceFamily::instantiate(int l) const {
  if (l < 1) throw ParameterError("family parameter l must be >= 1");
  std::vector<IntegerPair> pairs;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const IntegerPair p = make_pair_at(t.m_is_l ? l : t.m, t.n_is_l ? l : t.n, i);
    const int repeat = t.repeat_is_l ? l : t.repeat;
    for (int r = 0; r < repeat; ++r) pairs.push_back(p);
  }
  return IntegerPairSequence(std::move(pairs));
}

}  // namespace sacsphere
