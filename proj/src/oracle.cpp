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

#include "cantor/oracle.hpp"

#include "cantor/compiler.hpp"
#include "cantor/error.hpp"
#include "cantor/interval.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cantor {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- primitives

TruncatedSpace::TruncatedSpace(std::size_t depth) : depth_(depth) {
  if (depth < 1) throw InvalidInput("truncation depth must be at least 1");
  if (depth > 30) throw InvalidInput("truncation depth above 30 is not enumerable");
}

std::string TruncatedSpace::at(std::uint64_t index) const {
  std::string bits(depth_, '0');
  for (std::size_t i = 0; i < depth_; ++i) {
    if ((index >> (depth_ - 1 - i)) & 1U) bits[i] = '1';
  }
  return bits;
}

CheckReport check_partition(std::span<const Word> words, std::size_t depth) {
  const TruncatedSpace space(depth);
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  if (longest > depth) {
    throw InvalidInput("depth " + std::to_string(depth) + " is shorter than a word of length " +
                       std::to_string(longest));
  }
  CheckReport report{"partition", true, "", "", 0.0};
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const std::string s = space.at(i);
    std::size_t hits = 0;
    for (const auto& w : words) {
      if (s.compare(0, w.size(), w.bits()) == 0) ++hits;
    }
    if (hits == 1) continue;
    if (violations++ == 0) {
      report.passed = false;
      report.witness = s;
      report.detail = hits == 0 ? "uncovered" : "covered by " + std::to_string(hits) + " words";
    }
  }
  if (violations > 0) report.detail += "; " + std::to_string(violations) + " violating strings";
  return report;
}

Rational truncated_sum(const BinSeq& x, std::size_t depth, unsigned base, std::int64_t weight) {
  BigInt numerator = 0;
  for (std::size_t i = 1; i <= depth; ++i) numerator = numerator * base + x.bit_at(i);
  BigInt denominator = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(depth));
  return Rational(numerator * weight, denominator);
}

CheckReport check_metric_truncation(const BinSeq& x, const BinSeq& y, std::size_t depth) {
  BigInt numerator = 0;
  for (std::size_t i = 1; i <= depth; ++i) numerator = numerator * 2 + (x.bit_at(i) ^ y.bit_at(i));
  const Rational truncated(numerator, BigInt(1) << depth);
  const Rational gap = (metric(x, y) - truncated).abs();
  CheckReport report{"metric-truncation", gap <= Rational::pow2_inverse(depth), "", "", 0.0};
  if (!report.passed) {
    report.witness = x.to_string() + " " + y.to_string();
    report.detail = "gap " + gap.to_string() + " exceeds 2^-" + std::to_string(depth);
  }
  return report;
}

BinSeq random_binseq(std::mt19937_64& rng, std::size_t max_preamble, std::size_t max_period) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_preamble);
  std::uniform_int_distribution<std::size_t> per_len(1, max_period);
  std::bernoulli_distribution bit;
  auto draw = [&](std::size_t n) {
    std::string s(n, '0');
    for (auto& c : s) c = bit(rng) ? '1' : '0';
    return s;
  };
  const std::size_t p = pre_len(rng);
  const std::size_t q = per_len(rng);
  std::string pre = draw(p);
  return canonicalize(std::move(pre), draw(q));
}

std::vector<BinSeq> all_small_binseqs(std::size_t total) {
  std::set<BinSeq> seen;
  for (std::size_t period = 1; period <= total; ++period) {
    for (std::size_t pre = 0; pre + period <= total; ++pre) {
      const TruncatedSpace space(pre + period);
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        const std::string bits = space.at(i);
        seen.insert(canonicalize(bits.substr(0, pre), bits.substr(pre)));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<Word> second_level(std::size_t top, std::size_t parent, std::size_t sub,
                               const std::function<std::vector<Word>(std::size_t)>& split) {
  auto words = partition_words(top);
  if (parent < 1 || parent > top) throw InvalidInput("parent cone outside 1..top");
  const Word base = words[parent - 1];
  std::vector<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i + 1 != parent) {
      out.push_back(words[i]);
      continue;
    }
    for (const auto& w : split(sub)) out.push_back(base + w);
  }
  return out;
}

}  // namespace

std::vector<Word> literal_second_level_family(std::size_t top, std::size_t parent,
                                              std::size_t sub) {
  return second_level(top, parent, sub, [](std::size_t n) {
    if (n < 2) throw InvalidInput("second-level family needs at least two cones");
    std::vector<Word> out{Word("0")};
    for (std::size_t j = 2; j < n; ++j) out.push_back(Word::ones_then(j - 1, std::string(j, '0')));
    out.push_back(Word::ones_then(n - 1, ""));
    return out;
  });
}

std::vector<Word> corrected_second_level_family(std::size_t top, std::size_t parent,
                                                std::size_t sub) {
  return second_level(top, parent, sub, [](std::size_t n) { return partition_words(n); });
}

std::vector<NamedPattern> load_corpus(std::span<const fs::path> paths) {
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.path().extension() == ".json") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  std::vector<NamedPattern> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw Error("corpus file " + f.string() + " is unreadable");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      out.push_back({f.stem().string(), parse_pattern(buffer.str())});
    } catch (const ParseError& e) {
      throw Error("corpus file " + f.string() + ": " + e.what());
    }
  }
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    rows.push_back({{"name", c.name},
                    {"status", c.passed ? "pass" : "fail"},
                    {"witness", c.witness},
                    {"detail", c.detail},
                    {"millis", c.millis}});
  }
  return {{"passed", passed()}, {"checks", std::move(rows)}};
}

// ---------------------------------------------------------------- suite

namespace {

// Records the first failure; later failures only bump the count.
class Tally {
 public:
  explicit Tally(std::string name) { report_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) {
      report_.passed = false;
      report_.witness = witness();
    }
  }

  CheckReport finish() {
    report_.detail = std::to_string(cases_) + " cases";
    if (failures_ > 0) report_.detail += ", " + std::to_string(failures_) + " failures";
    return report_;
  }

 private:
  CheckReport report_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
};

std::string pair_text(const BinSeq& x, const BinSeq& y) { return x.to_string() + " " + y.to_string(); }

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution bit;
  std::string s(len(rng), '0');
  for (auto& c : s) c = bit(rng) ? '1' : '0';
  return Word(std::move(s));
}

bool only_even_digits(const TernaryExpansion& e) {
  auto ok = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '2'; });
  };
  return e.integer_part == 0 && ok(e.preamble) && ok(e.period);
}

// Graph leaves of a pattern with their cluster paths.
void graph_leaves(const Pattern& p, std::vector<std::size_t>& path,
                  std::vector<std::pair<std::vector<std::size_t>, const FiniteGraph*>>& out) {
  if (const auto* g = p.graph()) {
    out.emplace_back(path, g);
  } else if (const auto* c = p.cluster()) {
    for (std::size_t i = 0; i < c->children.size(); ++i) {
      path.push_back(i + 1);
      graph_leaves(c->children[i], path, out);
      path.pop_back();
    }
  }
}

// Independent cycle test: DFS over the multigraph, loops and parallel arcs count.
bool has_cycle(const FiniteGraph& g) {
  std::map<NodeId, std::vector<std::pair<NodeId, std::size_t>>> adj;
  for (const auto& a : g.arcs()) {
    if (a.from == a.to) return true;
    adj[a.from].emplace_back(a.to, a.index);
    adj[a.to].emplace_back(a.from, a.index);
  }
  std::set<NodeId> visited;
  std::function<bool(const NodeId&, std::size_t)> dfs = [&](const NodeId& n, std::size_t via) {
    visited.insert(n);
    for (const auto& [m, arc] : adj[n]) {
      if (arc == via) continue;
      if (visited.contains(m) || dfs(m, arc)) return true;
    }
    return false;
  };
  return dfs(g.nodes().front(), 0);
}

Word cluster_prefix(const Pattern& root, const std::vector<std::size_t>& path) {
  Word prefix;
  const Pattern* cur = &root;
  for (std::size_t child : path) {
    const auto& children = cur->cluster()->children;
    prefix = prefix + partition_words(children.size())[child - 1];
    cur = &children[child - 1];
  }
  return prefix;
}

class Suite {
 public:
  explicit Suite(const SuiteConfig& config) : config_(config) {
    if (config.depth < 1) throw InvalidInput("depth must be at least 1");
    if (config.samples < 1) throw InvalidInput("sample count must be at least 1");
    if (config.sample_denominator < 2) throw InvalidInput("sample denominator must be at least 2");
    corpus_ = load_corpus(config.corpus);
    std::mt19937_64 rng(config.seed);
    for (std::size_t i = 0; i < config.samples; ++i) {
      xs_.push_back(random_binseq(rng));
      ys_.push_back(random_binseq(rng));
      zs_.push_back(random_binseq(rng));
    }
  }

  SuiteReport run() {
    SuiteReport report;
    auto add = [&](CheckReport (Suite::*check)()) {
      const auto start = std::chrono::steady_clock::now();
      CheckReport r = (this->*check)();
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
      report.checks.push_back(std::move(r));
    };
    add(&Suite::contraction_identity);
    add(&Suite::self_similar_cover);
    add(&Suite::metric_axioms);
    add(&Suite::word_composition);
    add(&Suite::lipschitz_bound);
    add(&Suite::cmts_digits);
    add(&Suite::cmts_distortion);
    add(&Suite::canonical_form);
    add(&Suite::cone_diameter_law);
    add(&Suite::interval_round_trip);
    add(&Suite::interval_disjoint);
    add(&Suite::interval_surjective);
    add(&Suite::incidence_sum);
    add(&Suite::serialization_round_trip);
    add(&Suite::tree_detection);
    add(&Suite::partition_property);
    add(&Suite::table_injective);
    add(&Suite::table_round_trip);
    add(&Suite::fiber_sizes);
    add(&Suite::node_cone_shape);
    add(&Suite::prefix_similarity);
    add(&Suite::truncation_agreement);
    add(&Suite::nested_cones);
    add(&Suite::second_level_anomaly);
    if (config_.inject_fault) add(&Suite::injected_fault);
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return report;
  }

 private:
  CheckReport contraction_identity() {
    Tally t("core.contraction-identity");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      const Rational d = metric(xs_[i], ys_[i]);
      for (const char* k : {"0", "1"}) {
        const Word w(k);
        t.expect(metric(apply_word(w, xs_[i]), apply_word(w, ys_[i])) == d / Rational(2),
                 [&] { return std::string(k) + ": " + pair_text(xs_[i], ys_[i]); });
      }
    }
    return t.finish();
  }

  CheckReport self_similar_cover() {
    Tally t("core.self-similar-cover");
    const Word zero("0");
    const Word one("1");
    for (const auto& x : xs_) {
      t.expect(cone_contains(zero, x) != cone_contains(one, x), [&] { return x.to_string(); });
    }
    CheckReport truncated = check_partition(std::vector<Word>{zero, one}, config_.depth);
    t.expect(truncated.passed, [&] { return truncated.witness; });
    return t.finish();
  }

  CheckReport metric_axioms() {
    Tally t("core.metric-axioms");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      const auto &x = xs_[i], &y = ys_[i], &z = zs_[i];
      const Rational dxy = metric(x, y);
      t.expect(dxy == metric(y, x), [&] { return "symmetry " + pair_text(x, y); });
      t.expect(dxy.is_zero() == (x == y), [&] { return "identity " + pair_text(x, y); });
      t.expect(metric(x, x).is_zero(), [&] { return "reflexive " + x.to_string(); });
      t.expect(!dxy.is_negative() && dxy <= Rational(1), [&] { return "range " + pair_text(x, y); });
      t.expect(metric(x, z) <= dxy + metric(y, z),
               [&] { return "triangle " + pair_text(x, y) + " " + z.to_string(); });
    }
    return t.finish();
  }

  CheckReport word_composition() {
    Tally t("core.word-composition");
    std::mt19937_64 rng(config_.seed + 1);
    for (const auto& x : xs_) {
      const Word a = random_word(rng, 6);
      const Word b = random_word(rng, 6);
      t.expect(apply_word(a, apply_word(b, x)) == apply_word(a + b, x),
               [&] { return a.bits() + "," + b.bits() + " " + x.to_string(); });
    }
    return t.finish();
  }

  CheckReport lipschitz_bound() {
    Tally t("core.quotient-lipschitz");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      t.expect((binary_value(xs_[i]) - binary_value(ys_[i])).abs() <= metric(xs_[i], ys_[i]),
               [&] { return pair_text(xs_[i], ys_[i]); });
    }
    return t.finish();
  }

  CheckReport cmts_digits() {
    Tally t("core.cmts-digits");
    for (const auto& x : xs_) {
      const auto expansions = ternary_expansions(cmts_value(x));
      const auto it = std::find_if(expansions.begin(), expansions.end(), only_even_digits);
      bool ok = it != expansions.end();
      if (ok) {
        // The {0,2} expansion must spell 2 x_i digit by digit.
        const std::size_t horizon = 2 * (x.preamble().size() + x.period().size()) + 8;
        for (std::size_t i = 1; i <= horizon && ok; ++i) {
          const std::size_t k = i - 1;
          const char digit = k < it->preamble.size()
                                 ? it->preamble[k]
                                 : it->period[(k - it->preamble.size()) % it->period.size()];
          ok = (digit - '0') == 2 * x.bit_at(i);
        }
      }
      t.expect(ok, [&] { return x.to_string(); });
    }
    t.expect(cmts_value(BinSeq::ones()) == Rational(1), [] { return std::string("(1)"); });
    t.expect(cmts_value(BinSeq::parse("1(0)")) == Rational(2, 3), [] { return std::string("1(0)"); });
    return t.finish();
  }

  CheckReport cmts_distortion() {
    Tally t("core.cmts-distortion");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      t.expect((cmts_value(xs_[i]) - cmts_value(ys_[i])).abs() <=
                   Rational(2) * metric(xs_[i], ys_[i]),
               [&] { return pair_text(xs_[i], ys_[i]); });
    }
    return t.finish();
  }

  CheckReport canonical_form() {
    Tally t("core.canonicalize");
    std::mt19937_64 rng(config_.seed + 2);
    std::uniform_int_distribution<std::size_t> len(0, 8);
    std::bernoulli_distribution bit;
    for (std::size_t i = 0; i < config_.samples; ++i) {
      std::string pre(len(rng), '0');
      std::string per(len(rng) + 1, '0');
      for (auto& c : pre) c = bit(rng) ? '1' : '0';
      for (auto& c : per) c = bit(rng) ? '1' : '0';
      // Periods built from repeated roots exercise primitive reduction.
      if (i % 4 == 0) per += per;
      const BinSeq c = canonicalize(pre, per);
      t.expect(canonicalize(c.preamble(), c.period()) == c,
               [&] { return "idempotence " + pre + "(" + per + ")"; });
      const std::size_t horizon = 3 * (pre.size() + per.size());
      bool same = true;
      for (std::size_t j = 1; j <= horizon && same; ++j) {
        const char raw = j <= pre.size() ? pre[j - 1] : per[(j - 1 - pre.size()) % per.size()];
        same = c.bit_at(j) == raw - '0';
      }
      t.expect(same, [&] { return "bits " + pre + "(" + per + ")"; });
    }
    return t.finish();
  }

  CheckReport cone_diameter_law() {
    Tally t("core.cone-diameter");
    for (std::size_t len = 0; len <= config_.depth; ++len) {
      const std::uint64_t count = std::uint64_t{1} << len;
      for (std::uint64_t i = 0; i < count; ++i) {
        const Word w(len == 0 ? std::string() : TruncatedSpace(len).at(i));
        const Rational diam = cone_diameter(w);
        t.expect(diam == Rational::pow2_inverse(len) &&
                     metric(apply_word(w, BinSeq::zeros()), apply_word(w, BinSeq::ones())) == diam,
                 [&] { return w.bits(); });
      }
    }
    return t.finish();
  }

  CheckReport interval_round_trip() {
    Tally t("interval.round-trip-and-cardinality");
    const auto bound = static_cast<std::int64_t>(config_.interval_denominator_bound);
    for (std::int64_t b = 1; b <= bound; ++b) {
      for (std::int64_t a = 0; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Rational y(a, b);
        const Fiber f = fiber_unit_interval(y);
        const bool doubleton = classify(y).kind == DyadicClass::Kind::kDyadicInterior;
        t.expect(f.size() == (doubleton ? 2U : 1U), [&] { return y.to_string(); });
        t.expect(decode_fiber(f) == y, [&] { return y.to_string(); });
      }
    }
    return t.finish();
  }

  CheckReport interval_disjoint() {
    Tally t("interval.fiber-partition");
    std::map<BinSeq, Rational> owner;
    for (std::int64_t b = 1; b <= 128; ++b) {
      for (std::int64_t a = 0; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Rational y(a, b);
        const Fiber fiber = fiber_unit_interval(y);
        for (const auto& x : fiber.elements()) {
          const auto [it, fresh] = owner.emplace(x, y);
          t.expect(fresh, [&] {
            return x.to_string() + " in " + it->second.to_string() + " and " + y.to_string();
          });
        }
      }
    }
    return t.finish();
  }

  CheckReport interval_surjective() {
    Tally t("interval.surjectivity");
    for (const auto& x : desk_scale()) {
      t.expect(fiber_unit_interval(binary_value(x)).contains(x), [&] { return x.to_string(); });
    }
    return t.finish();
  }

  CheckReport incidence_sum() {
    Tally t("pattern.incidence-sum");
    for (const auto& [name, pattern] : corpus_) {
      std::vector<std::size_t> path;
      std::vector<std::pair<std::vector<std::size_t>, const FiniteGraph*>> leaves;
      graph_leaves(pattern, path, leaves);
      for (const auto& [_, g] : leaves) {
        std::size_t total = 0;
        for (const auto& n : g->nodes()) total += incidences(*g, n).size();
        t.expect(total == 2 * g->arc_count(), [&] { return name; });
      }
    }
    return t.finish();
  }

  CheckReport serialization_round_trip() {
    Tally t("pattern.serialization-round-trip");
    for (const auto& [name, pattern] : corpus_) {
      t.expect(parse_pattern(serialize(pattern)) == pattern, [&] { return name; });
    }
    return t.finish();
  }

  CheckReport tree_detection() {
    Tally t("pattern.tree-detection");
    for (const auto& [name, pattern] : corpus_) {
      std::vector<std::size_t> path;
      std::vector<std::pair<std::vector<std::size_t>, const FiniteGraph*>> leaves;
      graph_leaves(pattern, path, leaves);
      for (const auto& [_, g] : leaves) {
        t.expect(is_tree(*g) == !has_cycle(*g), [&] { return name; });
      }
    }
    return t.finish();
  }

  CheckReport partition_property() {
    Tally t("compiler.partition-words");
    for (std::size_t r = 1; r <= 8; ++r) {
      const auto words = partition_words(r);
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          t.expect(cone_relation(words[i], words[j]) == ConeRelation::kDisjoint,
                   [&] { return "r=" + std::to_string(r) + " " + words[i].bits() + "," + words[j].bits(); });
        }
      }
      if (r <= config_.depth + 1) {
        const CheckReport c = check_partition(words, config_.depth);
        t.expect(c.passed, [&] { return "r=" + std::to_string(r) + " " + c.witness; });
      }
      for (const auto& x : desk_scale()) {
        const auto hits = std::count_if(words.begin(), words.end(),
                                        [&](const Word& w) { return cone_contains(w, x); });
        t.expect(hits == 1, [&] { return "r=" + std::to_string(r) + " " + x.to_string(); });
      }
    }
    return t.finish();
  }

  CheckReport table_injective() {
    Tally t("compiler.injectivity");
    for (const auto& [name, pattern] : corpus_) {
      for (std::size_t d = 2; d <= config_.sample_denominator; ++d) {
        std::map<BinSeq, std::string> owner;
        for (const auto& row : enumerate_table(pattern, d)) {
          for (const auto& x : row.fiber.elements()) {
            const auto [it, fresh] = owner.emplace(x, row.point.to_string());
            t.expect(fresh, [&] {
              return name + " d=" + std::to_string(d) + " " + x.to_string() + " shared by " +
                     it->second + " and " + row.point.to_string();
            });
          }
        }
      }
    }
    return t.finish();
  }

  CheckReport table_round_trip() {
    Tally t("compiler.decode-round-trip");
    for (const auto& [name, pattern] : corpus_) {
      for (const auto& row : enumerate_table(pattern, config_.sample_denominator)) {
        bool ok = false;
        try {
          ok = decode_representation(pattern, row.fiber).point == row.point;
        } catch (const Error&) {
        }
        t.expect(ok, [&] { return name + " " + row.point.to_string(); });
      }
      // Endpoint queries normalize to their node.
      std::vector<std::size_t> path;
      std::vector<std::pair<std::vector<std::size_t>, const FiniteGraph*>> leaves;
      graph_leaves(pattern, path, leaves);
      for (const auto& [leaf_path, g] : leaves) {
        for (const auto& arc : g->arcs()) {
          for (int end : {0, 1}) {
            const PatternPoint q{leaf_path, ArcLocation{arc.index, Rational(end)}};
            const AddressEntry e = represent_point(pattern, q);
            const NodeId expected = end == 0 ? arc.from : arc.to;
            bool ok = e.redirected_from.has_value() && e.point.node() != nullptr &&
                      e.point.node()->node == expected &&
                      decode_representation(pattern, e.fiber).point == e.point;
            t.expect(ok, [&] { return name + " endpoint " + q.to_string(); });
          }
        }
      }
    }
    return t.finish();
  }

  CheckReport fiber_sizes() {
    Tally t("compiler.fiber-sizes");
    for (const auto& [name, pattern] : corpus_) {
      for (const auto& row : enumerate_table(pattern, config_.sample_denominator)) {
        const Pattern& leaf = resolve_path(pattern, row.point.path);
        std::size_t expected = 1;
        if (const auto* a = row.point.arc()) {
          expected = classify(a->t).kind == DyadicClass::Kind::kDyadicInterior ? 2 : 1;
        } else if (const auto* g = leaf.graph()) {
          expected = incidences(*g, row.point.node()->node).size();
        }
        t.expect(row.fiber.size() == expected, [&] { return name + " " + row.point.to_string(); });
      }
    }
    return t.finish();
  }

  CheckReport node_cone_shape() {
    Tally t("compiler.node-cone-shape");
    for (const auto& [name, pattern] : corpus_) {
      for (const auto& row : enumerate_table(pattern, 2)) {
        const auto* node = row.point.node();
        const Pattern& leaf = resolve_path(pattern, row.point.path);
        if (node == nullptr || leaf.graph() == nullptr) continue;
        const auto words = partition_words(leaf.graph()->arc_count());
        const Word prefix = cluster_prefix(pattern, row.point.path);
        std::map<std::size_t, std::size_t> multiplicity;
        for (const auto& inc : incidences(*leaf.graph(), node->node)) ++multiplicity[inc.arc];
        for (const auto& [arc, count] : multiplicity) {
          const Word cone = prefix + words[arc - 1];
          const auto hits = std::count_if(row.fiber.elements().begin(), row.fiber.elements().end(),
                                          [&](const BinSeq& x) { return cone_contains(cone, x); });
          t.expect(static_cast<std::size_t>(hits) == count,
                   [&] { return name + " " + row.point.to_string() + " arc " + std::to_string(arc); });
        }
      }
    }
    return t.finish();
  }

  CheckReport prefix_similarity() {
    Tally t("compiler.cluster-prefix-similarity");
    std::mt19937_64 rng(config_.seed + 3);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      const Word w = random_word(rng, 10);
      t.expect(metric(apply_word(w, xs_[i]), apply_word(w, ys_[i])) ==
                   Rational::pow2_inverse(w.size()) * metric(xs_[i], ys_[i]),
               [&] { return w.bits() + " " + pair_text(xs_[i], ys_[i]); });
    }
    return t.finish();
  }

  CheckReport truncation_agreement() {
    Tally t("oracle.truncation-agreement");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      const auto &x = xs_[i], &y = ys_[i];
      const Rational f = binary_value(x);
      const Rational h = cmts_value(x);
      for (std::size_t n = 8; n <= 20; ++n) {
        const CheckReport m = check_metric_truncation(x, y, n);
        t.expect(m.passed, [&] { return "metric N=" + std::to_string(n) + " " + m.witness; });
        t.expect((f - truncated_sum(x, n, 2)).abs() <= Rational::pow2_inverse(n),
                 [&] { return "binary N=" + std::to_string(n) + " " + x.to_string(); });
        const Rational tail = Rational(BigInt(1), boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)));
        t.expect((h - truncated_sum(x, n, 3, 2)).abs() <= tail,
                 [&] { return "cmts N=" + std::to_string(n) + " " + x.to_string(); });
      }
    }
    return t.finish();
  }

  CheckReport nested_cones() {
    Tally t("oracle.nested-cones");
    const TruncatedSpace space(config_.depth);
    const std::size_t probes = std::min<std::size_t>(16, xs_.size());
    for (std::size_t p = 0; p < probes; ++p) {
      const BinSeq& x = xs_[p];
      const std::string prefix = x.unroll(space.depth());
      for (std::size_t k = 0; k < space.depth(); ++k) {
        t.expect(cone_diameter(Word(prefix.substr(0, k + 1))) ==
                     cone_diameter(Word(prefix.substr(0, k))) / Rational(2),
                 [&] { return prefix.substr(0, k + 1); });
      }
      std::vector<std::string> survivors;
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        const std::string s = space.at(i);
        bool inside = true;
        for (std::size_t k = 1; k <= space.depth() && inside; ++k) {
          inside = s.compare(0, k, prefix, 0, k) == 0;
        }
        if (inside) survivors.push_back(s);
      }
      t.expect(survivors.size() == 1 && survivors.front() == prefix, [&] { return x.to_string(); });
    }
    return t.finish();
  }

  CheckReport second_level_anomaly() {
    Tally t("oracle.second-level-anomaly");
    for (std::size_t top : {2, 3}) {
      for (std::size_t parent = 1; parent <= top; ++parent) {
        for (std::size_t sub = 3; sub <= 4; ++sub) {
          const auto literal = literal_second_level_family(top, parent, sub);
          const auto corrected = corrected_second_level_family(top, parent, sub);
          std::size_t longest = 0;
          for (const auto& w : literal) longest = std::max(longest, w.size());
          const std::size_t depth = std::max(config_.depth, longest);
          const CheckReport bad = check_partition(literal, depth);
          const CheckReport good = check_partition(corrected, depth);
          const std::string tag =
              std::to_string(top) + "/" + std::to_string(parent) + "/" + std::to_string(sub);
          t.expect(!bad.passed && bad.detail.starts_with("uncovered"),
                   [&] { return "literal family passed " + tag; });
          t.expect(good.passed, [&] { return "corrected family " + tag + " " + good.witness; });
        }
      }
    }
    return t.finish();
  }

  CheckReport injected_fault() {
    const auto literal = literal_second_level_family(2, 1, 3);
    CheckReport r = check_partition(literal, std::max<std::size_t>(config_.depth, 4));
    r.name = "fault.literal-second-level-partition";
    return r;
  }

  const std::vector<BinSeq>& desk_scale() {
    if (desk_.empty()) desk_ = all_small_binseqs(10);
    return desk_;
  }

  const SuiteConfig& config_;
  std::vector<NamedPattern> corpus_;
  std::vector<BinSeq> xs_, ys_, zs_;
  std::vector<BinSeq> desk_;
};

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) { return Suite(config).run(); }

}  // namespace cantor
