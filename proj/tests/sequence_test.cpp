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

#include "cantor/error.hpp"
#include "cantor/interval.hpp"
#include "cantor/oracle.hpp"
#include "cantor/sequence.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cantor {
namespace {

// Independent of the engine: the bits of pre.per^omega by direct indexing.
std::string raw_unroll(const std::string& pre, const std::string& per, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    out += i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
  }
  return out;
}

// sum_{i<=n} bits_i * weight / base^i, exact.
Rational raw_sum(const std::string& bits, unsigned base, std::int64_t weight = 1) {
  Rational total(0);
  Rational scale(1);
  for (char c : bits) {
    scale = scale / Rational(base);
    if (c == '1') total += scale * Rational(weight);
  }
  return total;
}

TEST(Canonicalize, RollsPreambleIntoPeriod) {
  const BinSeq x = canonicalize("01", "01");
  EXPECT_EQ(x.preamble(), "");
  EXPECT_EQ(x.period(), "01");
  EXPECT_EQ(raw_unroll("01", "01", 12), x.unroll(12));
}

TEST(Canonicalize, ReducesToPrimitivePeriod) {
  const BinSeq x = canonicalize("", "0101");
  EXPECT_EQ(x.to_string(), "(01)");
  EXPECT_EQ(raw_unroll("", "0101", 12), x.unroll(12));
}

TEST(Canonicalize, KeepsCanonicalInput) {
  EXPECT_EQ(canonicalize("1", "0").to_string(), "1(0)");
}

TEST(Canonicalize, RejectsEmptyPeriodAndStrayCharacters) {
  EXPECT_THROW(canonicalize("01", ""), InvalidInput);
  EXPECT_THROW(canonicalize("012", "1"), InvalidInput);
  EXPECT_THROW(BinSeq::parse("01"), InvalidInput);
  EXPECT_THROW(BinSeq::parse("0()"), InvalidInput);
}

TEST(Canonicalize, EqualSequencesShareOneForm) {
  // 1(10), (10), 10(10), (1010) all spell 101010...
  const BinSeq a = canonicalize("1", "01");
  EXPECT_EQ(a, canonicalize("", "10"));
  EXPECT_EQ(a, canonicalize("10", "10"));
  EXPECT_EQ(a, canonicalize("", "1010"));
  EXPECT_EQ(canonicalize("111", "1"), BinSeq::ones());
}

TEST(Canonicalize, PropertyIdempotentAndBitPreserving) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 7);
  std::bernoulli_distribution bit;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string pre(len(rng), '0');
    std::string per(len(rng) + 1, '0');
    for (auto& c : pre) c = bit(rng) ? '1' : '0';
    for (auto& c : per) c = bit(rng) ? '1' : '0';
    if (trial % 3 == 0) per += per + per;
    const BinSeq x = canonicalize(pre, per);
    ASSERT_EQ(canonicalize(x.preamble(), x.period()), x);
    const std::size_t horizon = 3 * (pre.size() + per.size());
    ASSERT_EQ(x.unroll(horizon), raw_unroll(pre, per, horizon)) << pre << "(" << per << ")";
    // Canonical form is minimal: the last preamble bit differs from the
    // last period bit.
    if (!x.preamble().empty()) ASSERT_NE(x.preamble().back(), x.period().back());
  }
}

TEST(BitAt, IndexesPreambleThenCyclesPeriod) {
  EXPECT_EQ(BinSeq::parse("(01)").bit_at(3), 0);
  EXPECT_EQ(BinSeq::parse("1(0)").bit_at(1), 1);
  EXPECT_EQ(BinSeq::parse("1(0)").bit_at(7), 0);
  EXPECT_THROW((void)BinSeq::parse("1(0)").bit_at(0), InvalidInput);
}

TEST(Notation, RoundTripsText) {
  for (const char* text : {"(0)", "(1)", "01(10)", "(01)", "100(1)"}) {
    EXPECT_EQ(BinSeq::parse(text).to_string(), text);
  }
}

TEST(Ordering, IsLexicographicOnUnrolledBits) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const BinSeq x = random_binseq(rng);
    const BinSeq y = random_binseq(rng);
    const auto ux = x.unroll(80);
    const auto uy = y.unroll(80);
    ASSERT_EQ(x < y, ux < uy) << x << " " << y;
    ASSERT_EQ(x == y, ux == uy);
  }
}

TEST(Metric, ExamplesAgainstTruncatedSums) {
  const BinSeq zero = BinSeq::zeros();
  const BinSeq one = BinSeq::ones();
  EXPECT_EQ(metric(zero, one), Rational(1));
  EXPECT_EQ(metric(one, one), Rational(0));
  const BinSeq half = BinSeq::parse("1(0)");
  EXPECT_EQ(metric(zero, half), Rational(1, 2));
  // 64-bit truncation of the defining sum is within 2^-64.
  std::string diff;
  for (std::size_t i = 1; i <= 64; ++i) diff += (zero.bit_at(i) ^ half.bit_at(i)) ? '1' : '0';
  EXPECT_LE((raw_sum(diff, 2) - Rational(1, 2)).abs(), Rational::pow2_inverse(64));
}

TEST(Metric, MatchesTruncationOracleOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const BinSeq x = random_binseq(rng);
    const BinSeq y = random_binseq(rng);
    std::string diff;
    for (std::size_t k = 1; k <= 48; ++k) diff += (x.bit_at(k) ^ y.bit_at(k)) ? '1' : '0';
    ASSERT_LE((metric(x, y) - raw_sum(diff, 2)).abs(), Rational::pow2_inverse(48)) << x << " " << y;
  }
}

TEST(Metric, AxiomsHoldExactly) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const BinSeq x = random_binseq(rng);
    const BinSeq y = random_binseq(rng);
    const BinSeq z = random_binseq(rng);
    const Rational dxy = metric(x, y);
    ASSERT_EQ(dxy, metric(y, x));
    ASSERT_EQ(dxy.is_zero(), x == y);
    ASSERT_LE(dxy, Rational(1));
    ASSERT_LE(metric(x, z), dxy + metric(y, z));
  }
}

TEST(ApplyWord, PrependsBits) {
  EXPECT_EQ(apply_word(Word("0"), BinSeq::ones()).to_string(), "0(1)");
  const BinSeq x = BinSeq::parse("01(10)");
  EXPECT_EQ(apply_word(Word(), x), x);
  // "10" + 000... = 1000... canonical 1(0).
  const BinSeq y = apply_word(Word("10"), BinSeq::zeros());
  EXPECT_EQ(y.unroll(12), raw_unroll("10", "0", 12));
  EXPECT_EQ(y.to_string(), "1(0)");
}

TEST(ApplyWord, ContractsDistancesByHalfPerBit) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const BinSeq x = random_binseq(rng);
    const BinSeq y = random_binseq(rng);
    const Rational d = metric(x, y);
    for (const char* k : {"0", "1"}) {
      ASSERT_EQ(metric(apply_word(Word(k), x), apply_word(Word(k), y)), d / Rational(2));
    }
    const Word w("0110");
    ASSERT_EQ(metric(apply_word(w, x), apply_word(w, y)), d / Rational(16));
    ASSERT_EQ(apply_word(Word("01"), apply_word(Word("10"), x)), apply_word(Word("0110"), x));
  }
}

TEST(Cones, MembershipAndRelation) {
  const BinSeq x = BinSeq::parse("1(0)");
  EXPECT_TRUE(cone_contains(Word("10"), x));
  EXPECT_FALSE(cone_contains(Word("11"), x));
  EXPECT_TRUE(cone_contains(Word(), x));
  EXPECT_EQ(cone_relation(Word("0"), Word("10")), ConeRelation::kDisjoint);
  EXPECT_EQ(cone_relation(Word("1"), Word("10")), ConeRelation::kNested);
  EXPECT_EQ(cone_relation(Word("10"), Word("10")), ConeRelation::kEqual);
}

TEST(Cones, EverySequenceLiesInExactlyOneHalf) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    const BinSeq x = random_binseq(rng);
    ASSERT_NE(cone_contains(Word("0"), x), cone_contains(Word("1"), x));
  }
}

TEST(Cones, DiameterIsAttainedByExtremePair) {
  EXPECT_EQ(cone_diameter(Word()), Rational(1));
  EXPECT_EQ(cone_diameter(Word("10")), Rational(1, 4));
  EXPECT_EQ(metric(apply_word(Word("10"), BinSeq::zeros()), apply_word(Word("10"), BinSeq::ones())),
            Rational(1, 4));
  const Word w("01101001");
  EXPECT_EQ(cone_diameter(w), Rational(1, 256));
  EXPECT_EQ(metric(apply_word(w, BinSeq::zeros()), apply_word(w, BinSeq::ones())), Rational(1, 256));
}

TEST(Cmts, ExamplesAgainstTruncatedSums) {
  EXPECT_EQ(cmts_value(BinSeq::ones()), Rational(1));
  EXPECT_EQ(cmts_value(BinSeq::parse("1(0)")), Rational(2, 3));
  const BinSeq alt = BinSeq::parse("(01)");
  EXPECT_EQ(cmts_value(alt), Rational(1, 4));
  // Tail of sum 2/3^i beyond 40 terms is 3^-40.
  const Rational bound(BigInt(1), boost::multiprecision::pow(BigInt(3), 40));
  EXPECT_LE((raw_sum(alt.unroll(40), 3, 2) - Rational(1, 4)).abs(), bound);
}

TEST(Cmts, ValuesAvoidDigitOneAndSeparateSequences) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const BinSeq x = random_binseq(rng);
    const BinSeq y = random_binseq(rng);
    const auto expansions = ternary_expansions(cmts_value(x));
    bool found = false;
    for (const auto& e : expansions) {
      const std::string digits = e.preamble + e.period;
      found |= e.integer_part == 0 && digits.find('1') == std::string::npos;
    }
    ASSERT_TRUE(found) << x;
    ASSERT_EQ(cmts_value(x) == cmts_value(y), x == y);
    ASSERT_LE((cmts_value(x) - cmts_value(y)).abs(), Rational(2) * metric(x, y));
    ASSERT_LE((binary_value(x) - binary_value(y)).abs(), metric(x, y));
  }
}

TEST(TernaryExpansions, TriadicValuesHaveTwoExpansions) {
  const auto third = ternary_expansions(Rational(1, 3));
  ASSERT_EQ(third.size(), 2U);
  EXPECT_EQ(third[0].preamble, "1");
  EXPECT_EQ(third[0].period, "0");
  EXPECT_EQ(third[1].preamble, "0");
  EXPECT_EQ(third[1].period, "2");
  const auto one = ternary_expansions(Rational(1));
  ASSERT_EQ(one.size(), 2U);
  EXPECT_EQ(one[1].integer_part, 0);
  EXPECT_EQ(one[1].period, "2");
  const auto quarter = ternary_expansions(Rational(1, 4));
  ASSERT_EQ(quarter.size(), 1U);
  EXPECT_EQ(quarter[0].period, "02");
}

TEST(FiberType, SortsAndDeduplicates) {
  const Fiber f{BinSeq::ones(), BinSeq::zeros(), BinSeq::ones()};
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f.elements()[0], BinSeq::zeros());
  EXPECT_THROW(Fiber(std::vector<BinSeq>{}), InvalidInput);
}

}  // namespace
}  // namespace cantor
