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

#include "cantor/pattern.hpp"
#include "cantor/rational.hpp"
#include "cantor/sequence.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cantor {

/// All 2^depth bit strings of length `depth`, in lexicographic order; a
/// finite stand-in for {0,1}^N.
class TruncatedSpace {
 public:
  explicit TruncatedSpace(std::size_t depth);

  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] std::uint64_t size() const { return std::uint64_t{1} << depth_; }
  /// The `index`-th string; bit 1 is the most significant.
  [[nodiscard]] std::string at(std::uint64_t index) const;

 private:
  std::size_t depth_;
};

/// Outcome of one check. `witness` is the lexicographically least
/// counterexample, empty on success.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::string witness;
  std::string detail;
  double millis = 0.0;
};

/// Each string of length `depth` must have exactly one word as a prefix.
/// Throws InvalidInput if depth is 0 or shorter than the longest word.
CheckReport check_partition(std::span<const Word> words, std::size_t depth);

/// |d(x,y) - sum_{i<=depth} |x_i - y_i| / 2^i| <= 2^-depth.
CheckReport check_metric_truncation(const BinSeq& x, const BinSeq& y, std::size_t depth);

/// sum_{i<=depth} weight * x_i / base^i.
Rational truncated_sum(const BinSeq& x, std::size_t depth, unsigned base, std::int64_t weight = 1);

/// Canonical sequence with preamble length in [0, max_preamble] and period
/// length in [1, max_period], drawn from `rng`.
BinSeq random_binseq(std::mt19937_64& rng, std::size_t max_preamble = 8,
                     std::size_t max_period = 8);

/// Every distinct canonical sequence with |preamble| + |period| <= total.
std::vector<BinSeq> all_small_binseqs(std::size_t total);

/// Two-level decomposition of {0,1}^N with `top` first-level cones, whose
/// cone `parent` is split into `sub` second-level cones.
/// The literal family puts F_1^(j-1) o F_0^j under the parent cone (it
/// leaves a gap for sub >= 3); the corrected family uses the first-level
/// pattern again.
std::vector<Word> literal_second_level_family(std::size_t top, std::size_t parent, std::size_t sub);
std::vector<Word> corrected_second_level_family(std::size_t top, std::size_t parent,
                                                std::size_t sub);

struct NamedPattern {
  std::string name;
  Pattern pattern;
};

/// Loads pattern documents; directories contribute their *.json files in
/// name order. Throws Error when a path cannot be read.
std::vector<NamedPattern> load_corpus(std::span<const std::filesystem::path> paths);

struct SuiteConfig {
  std::size_t depth = 12;
  std::size_t samples = 1000;
  std::uint64_t seed = 20201;
  std::size_t sample_denominator = 8;
  std::size_t interval_denominator_bound = 1024;
  std::vector<std::filesystem::path> corpus;
  /// Adds a check that treats the literal second-level family as a
  /// partition. It must fail; used to exercise failure reporting.
  bool inject_fault = false;
};

struct SuiteReport {
  std::vector<CheckReport> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Runs every invariant check. Throws InvalidInput for a zero depth or
/// sample count and Error for an unreadable corpus.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace cantor
