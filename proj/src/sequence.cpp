// Copyright 2026 The Cantor Representation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cantor/sequence.hpp"

#include "cantor/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace cantor {

namespace {

void require_bits(std::string_view bits, const char* what) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvalidInput(std::string(what) + " contains non-bit character '" + c + "'");
    }
  }
}

// Smallest root r with period == r^k.
std::string primitive_root(const std::string& period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) return period.substr(0, d);
  }
  return period;
}

BigInt digits_value(std::string_view bits, unsigned base) {
  BigInt value = 0;
  for (char c : bits) value = value * base + (c - '0');
  return value;
}

}  // namespace

// ---------------------------------------------------------------- Word

Word::Word(std::string bits) : bits_(std::move(bits)) { require_bits(bits_, "word"); }

Word Word::ones_then(std::size_t ones, std::string_view tail) {
  std::string bits(ones, '1');
  bits += tail;
  return Word(std::move(bits));
}

bool Word::is_prefix_of(const Word& other) const {
  return other.bits_.size() >= bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.bits_ << '"'; }

// ---------------------------------------------------------------- BinSeq

BinSeq canonicalize(std::string preamble, std::string period) {
  if (period.empty()) throw InvalidInput("period must contain at least one bit");
  require_bits(preamble, "preamble");
  require_bits(period, "period");
  period = primitive_root(period);
  // Roll the preamble into the period while the last bits agree.
  while (!preamble.empty() && preamble.back() == period.back()) {
    preamble.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return BinSeq(std::move(preamble), std::move(period));
}

BinSeq BinSeq::ones() { return canonicalize("", "1"); }

int BinSeq::bit_at(std::size_t index) const {
  if (index < 1) throw InvalidInput("sequence index must be >= 1");
  const std::size_t i = index - 1;
  if (i < preamble_.size()) return preamble_[i] - '0';
  return period_[(i - preamble_.size()) % period_.size()] - '0';
}

std::string BinSeq::unroll(std::size_t count) const {
  std::string out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(static_cast<char>('0' + bit_at(i)));
  return out;
}

BinSeq BinSeq::shift(std::size_t count) const {
  if (count <= preamble_.size()) return BinSeq(preamble_.substr(count), period_);
  std::string period = period_;
  const std::size_t k = (count - preamble_.size()) % period.size();
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(k), period.end());
  return BinSeq("", std::move(period));
}

std::string BinSeq::to_string() const { return preamble_ + "(" + period_ + ")"; }

BinSeq BinSeq::parse(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw InvalidInput("sequence '" + std::string(text) + "' is not in pre(per) notation");
  }
  return canonicalize(std::string(text.substr(0, open)),
                      std::string(text.substr(open + 1, text.size() - open - 2)));
}

std::strong_ordering operator<=>(const BinSeq& a, const BinSeq& b) {
  // Distinct sequences differ within max preamble + lcm of periods bits.
  const std::size_t horizon = std::max(a.preamble_.size(), b.preamble_.size()) +
                              std::lcm(a.period_.size(), b.period_.size());
  for (std::size_t i = 1; i <= horizon; ++i) {
    int x = a.bit_at(i);
    int y = b.bit_at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BinSeq& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- operations

Rational periodic_sum(const BinSeq& x, unsigned base) {
  if (base < 2) throw InvalidInput("radix must be at least 2");
  const auto& pre = x.preamble();
  const auto& per = x.period();
  BigInt scale_pre = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(pre.size()));
  BigInt cycle = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(per.size())) - 1;
  // pre/base^L + per/((base^P - 1) base^L)
  BigInt numerator = digits_value(pre, base) * cycle + digits_value(per, base);
  return Rational(std::move(numerator), scale_pre * cycle);
}

BinSeq bitwise_difference(const BinSeq& x, const BinSeq& y) {
  const std::size_t lead = std::max(x.preamble().size(), y.preamble().size());
  const std::size_t cycle = std::lcm(x.period().size(), y.period().size());
  std::string bits(lead + cycle, '0');
  for (std::size_t i = 1; i <= bits.size(); ++i) {
    bits[i - 1] = static_cast<char>('0' + (x.bit_at(i) ^ y.bit_at(i)));
  }
  return canonicalize(bits.substr(0, lead), bits.substr(lead));
}

Rational metric(const BinSeq& x, const BinSeq& y) {
  if (x == y) return Rational(0);
  return periodic_sum(bitwise_difference(x, y), 2);
}

BinSeq apply_word(const Word& word, const BinSeq& x) {
  if (word.empty()) return x;
  return canonicalize(word.bits() + x.preamble(), x.period());
}

bool cone_contains(const Word& word, const BinSeq& x) {
  for (std::size_t j = 1; j <= word.size(); ++j) {
    if (x.bit_at(j) != word.bits()[j - 1] - '0') return false;
  }
  return true;
}

ConeRelation cone_relation(const Word& a, const Word& b) {
  if (a == b) return ConeRelation::kEqual;
  if (a.is_prefix_of(b) || b.is_prefix_of(a)) return ConeRelation::kNested;
  return ConeRelation::kDisjoint;
}

const char* to_string(ConeRelation relation) {
  switch (relation) {
    case ConeRelation::kDisjoint: return "disjoint";
    case ConeRelation::kNested: return "nested";
    case ConeRelation::kEqual: return "equal";
  }
  return "?";
}

Rational cone_diameter(const Word& word) { return Rational::pow2_inverse(word.size()); }

Rational cmts_value(const BinSeq& x) { return Rational(2) * periodic_sum(x, 3); }

std::vector<TernaryExpansion> ternary_expansions(const Rational& value) {
  if (value.is_negative() || value > Rational(1)) {
    throw InvalidInput("ternary expansion requires a value in [0,1]");
  }
  const BigInt den = value.denominator();
  BigInt rem = value.numerator();
  TernaryExpansion exact;
  exact.integer_part = static_cast<int>(rem / den);
  rem %= den;

  std::string digits;
  std::map<BigInt, std::size_t> seen;
  while (!seen.contains(rem)) {
    seen.emplace(rem, digits.size());
    rem *= 3;
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  const std::size_t start = seen.at(rem);
  exact.preamble = digits.substr(0, start);
  exact.period = digits.substr(start);

  std::vector<TernaryExpansion> out{exact};
  if (exact.period == "0" && !value.is_zero()) {
    // Terminating expansion: the last nonzero digit may borrow into a 2-tail.
    TernaryExpansion alt;
    alt.period = "2";
    if (exact.preamble.empty()) {
      alt.integer_part = exact.integer_part - 1;
    } else {
      alt.integer_part = exact.integer_part;
      alt.preamble = exact.preamble;
      --alt.preamble.back();
    }
    out.push_back(std::move(alt));
  }
  return out;
}

// ---------------------------------------------------------------- Fiber

Fiber::Fiber(std::vector<BinSeq> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidInput("fiber must contain at least one sequence");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Fiber::contains(const BinSeq& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Fiber::intersects(const Fiber& other) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const BinSeq& x) { return other.contains(x); });
}

Fiber Fiber::prefixed(const Word& word) const {
  std::vector<BinSeq> out;
  out.reserve(elements_.size());
  for (const auto& x : elements_) out.push_back(apply_word(word, x));
  return Fiber(std::move(out));
}

std::vector<std::string> Fiber::to_strings() const {
  std::vector<std::string> out;
  out.reserve(elements_.size());
  for (const auto& x : elements_) out.push_back(x.to_string());
  return out;
}

}  // namespace cantor
