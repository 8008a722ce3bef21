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

#pragma once

#include "cantor/rational.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Finite binary word k1...ki naming the composition F_k1 o ... o F_ki.
/// The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::string bits);

  /// "1"^ones followed by `tail`.
  static Word ones_then(std::size_t ones, std::string_view tail);

  [[nodiscard]] const std::string& bits() const { return bits_; }
  [[nodiscard]] std::size_t size() const { return bits_.size(); }
  [[nodiscard]] bool empty() const { return bits_.empty(); }
  [[nodiscard]] bool is_prefix_of(const Word& other) const;

  friend Word operator+(const Word& a, const Word& b) { return Word(a.bits_ + b.bits_, {}); }
  friend auto operator<=>(const Word&, const Word&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w);

 private:
  struct Trusted {};
  Word(std::string bits, Trusted) : bits_(std::move(bits)) {}

  std::string bits_;
};

/// Eventually periodic point of {0,1}^N: preamble followed by the period
/// repeated forever. Always held in canonical form: primitive period, and
/// the last preamble bit differs from the last period bit.
class BinSeq {
 public:
  /// The all-zero sequence.
  BinSeq() : period_("0") {}

  [[nodiscard]] const std::string& preamble() const { return preamble_; }
  [[nodiscard]] const std::string& period() const { return period_; }

  /// x_i for i >= 1.
  [[nodiscard]] int bit_at(std::size_t index) const;

  /// First `count` bits.
  [[nodiscard]] std::string unroll(std::size_t count) const;

  /// Drops the first `count` bits (the shift map applied `count` times).
  [[nodiscard]] BinSeq shift(std::size_t count) const;

  /// "pre(per)", e.g. "01(10)" or "(01)".
  [[nodiscard]] std::string to_string() const;
  static BinSeq parse(std::string_view text);

  static BinSeq zeros() { return BinSeq(); }
  static BinSeq ones();

  friend bool operator==(const BinSeq&, const BinSeq&) = default;
  /// Lexicographic order of the unrolled infinite sequences.
  friend std::strong_ordering operator<=>(const BinSeq& a, const BinSeq& b);
  friend std::ostream& operator<<(std::ostream& os, const BinSeq& x);

 private:
  friend BinSeq canonicalize(std::string preamble, std::string period);
  BinSeq(std::string preamble, std::string period)
      : preamble_(std::move(preamble)), period_(std::move(period)) {}

  std::string preamble_;
  std::string period_;
};

/// Normal form of preamble.period^omega. Throws InvalidInput on an empty
/// period or a character other than '0'/'1'.
BinSeq canonicalize(std::string preamble, std::string period);

/// Sum over i of x_i / base^i, exact. base >= 2.
Rational periodic_sum(const BinSeq& x, unsigned base);

/// Bitwise XOR (|x_i - y_i|) of two sequences.
BinSeq bitwise_difference(const BinSeq& x, const BinSeq& y);

/// d(x, y) = sum |x_i - y_i| / 2^i.
Rational metric(const BinSeq& x, const BinSeq& y);

/// F_k1 o ... o F_ki (x): prepends the word.
BinSeq apply_word(const Word& word, const BinSeq& x);

/// Membership in the contraction-cone of `word`, i.e. `word` prefixes x.
bool cone_contains(const Word& word, const BinSeq& x);

enum class ConeRelation { kDisjoint, kNested, kEqual };

ConeRelation cone_relation(const Word& a, const Word& b);
const char* to_string(ConeRelation relation);

/// Diameter of cone(word) under d: 2^(-|word|).
Rational cone_diameter(const Word& word);

/// h(x) = sum 2 x_i / 3^i, the point of the middle-third Cantor set.
Rational cmts_value(const BinSeq& x);

/// Base-3 expansion of a rational in [0,1] written as integer digit,
/// preamble digits and repeating period digits (all '0'..'2').
struct TernaryExpansion {
  int integer_part = 0;
  std::string preamble;
  std::string period;
};

/// All base-3 expansions of `value` in [0,1]: one for non-triadic values,
/// two (terminating and ...2222 tail) for triadic ones.
std::vector<TernaryExpansion> ternary_expansions(const Rational& value);

/// Nonempty finite set of sequences: one point of a decomposition space.
/// Elements are sorted lexicographically and unique.
class Fiber {
 public:
  explicit Fiber(std::vector<BinSeq> elements);
  Fiber(std::initializer_list<BinSeq> elements)
      : Fiber(std::vector<BinSeq>(elements)) {}

  [[nodiscard]] std::span<const BinSeq> elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool contains(const BinSeq& x) const;
  [[nodiscard]] bool intersects(const Fiber& other) const;

  /// Every element with `word` prepended.
  [[nodiscard]] Fiber prefixed(const Word& word) const;

  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend bool operator==(const Fiber&, const Fiber&) = default;

 private:
  std::vector<BinSeq> elements_;
};

}  // namespace cantor
