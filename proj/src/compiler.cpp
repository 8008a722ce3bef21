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

#include "cantor/compiler.hpp"

#include "cantor/error.hpp"
#include "cantor/interval.hpp"

namespace cantor {

std::vector<Word> partition_words(std::size_t r) {
  if (r < 1) throw InvalidInput("partition needs at least one cone");
  std::vector<Word> words;
  words.reserve(r);
  for (std::size_t i = 1; i < r; ++i) words.push_back(Word::ones_then(i - 1, "0"));
  words.push_back(Word::ones_then(r - 1, ""));
  return words;
}

Fiber represent_arc_point(std::span<const Word> words, std::size_t arc, const Rational& t) {
  if (arc < 1 || arc > words.size()) {
    throw InvalidInput("arc index " + std::to_string(arc) + " outside 1.." +
                       std::to_string(words.size()));
  }
  if (t.is_zero() || t == Rational(1)) {
    throw EndpointIsNode("t = " + t.to_string() + " on arc " + std::to_string(arc) +
                         " is an endpoint; query its node instead");
  }
  return fiber_unit_interval(t).prefixed(words[arc - 1]);
}

Fiber represent_node(std::span<const Word> words, std::span<const Incidence> incidences) {
  if (incidences.empty()) throw InvalidInput("node has no incident arcs");
  std::vector<BinSeq> elements;
  elements.reserve(incidences.size());
  for (const auto& inc : incidences) {
    if (inc.arc < 1 || inc.arc > words.size()) {
      throw InvalidInput("incidence names arc " + std::to_string(inc.arc) + " outside 1.." +
                         std::to_string(words.size()));
    }
    elements.push_back(apply_word(words[inc.arc - 1], inc.end == 0 ? BinSeq::zeros() : BinSeq::ones()));
  }
  return Fiber(std::move(elements));
}

namespace {

struct Leaf {
  const Pattern* pattern;
  Word prefix;
};

Leaf descend(const Pattern& pattern, const std::vector<std::size_t>& path) {
  const Pattern& leaf = resolve_path(pattern, path);
  Word prefix;
  const Pattern* current = &pattern;
  for (std::size_t child : path) {
    const auto& children = current->cluster()->children;
    prefix = prefix + partition_words(children.size())[child - 1];
    current = &children[child - 1];
  }
  return {&leaf, prefix};
}

AddressEntry represent_in_graph(const FiniteGraph& graph, const Word& prefix,
                                const PatternPoint& query) {
  const auto words = partition_words(graph.arc_count());
  AddressEntry entry{query, Fiber{BinSeq::zeros()}, {}, std::nullopt};

  if (const auto* at = query.arc()) {
    const Arc& arc = graph.arc(at->arc);
    if (!at->t.is_zero() && at->t != Rational(1)) {
      entry.fiber = represent_arc_point(words, at->arc, at->t).prefixed(prefix);
      entry.words = {prefix + words[at->arc - 1]};
      return entry;
    }
    entry.redirected_from = query;
    entry.point.location = NodeLocation{at->t.is_zero() ? arc.from : arc.to};
  }

  const auto inc = incidences(graph, entry.point.node()->node);
  entry.fiber = represent_node(words, inc).prefixed(prefix);
  for (const auto& i : inc) entry.words.push_back(prefix + words[i.arc - 1]);
  return entry;
}

}  // namespace

AddressEntry represent_point(const Pattern& pattern, const PatternPoint& query) {
  const Leaf leaf = descend(pattern, query.path);
  if (const auto* point = leaf.pattern->point()) {
    const auto* node = query.node();
    if (node == nullptr || node->node != point->node) {
      throw UnresolvablePoint("point child holds only node \"" + point->node + "\"");
    }
    return AddressEntry{query, Fiber{apply_word(leaf.prefix, BinSeq::zeros())}, {leaf.prefix},
                        std::nullopt};
  }
  return represent_in_graph(*leaf.pattern->graph(), leaf.prefix, query);
}

const char* to_string(DecodeRule rule) {
  switch (rule) {
    case DecodeRule::kExact: return "exact";
    case DecodeRule::kPointRepresentative: return "point-representative";
    case DecodeRule::kPointCone: return "point-cone";
  }
  return "?";
}

namespace {

std::size_t owning_cone(std::span<const Word> words, const BinSeq& x) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (cone_contains(words[i], x)) return i + 1;
  }
  throw NoMatch("sequence " + x.to_string() + " lies in no cone of the partition");
}

[[noreturn]] void no_match(const Fiber& fiber) {
  std::string listed;
  for (const auto& s : fiber.to_strings()) listed += (listed.empty() ? "" : ", ") + s;
  throw NoMatch("fiber {" + listed + "} names no point of the pattern");
}

}  // namespace

DecodeResult decode_representation(const Pattern& pattern, const Fiber& fiber,
                                   DecodeOptions options) {
  PatternPoint candidate;
  const Pattern* current = &pattern;
  std::vector<BinSeq> residual(fiber.elements().begin(), fiber.elements().end());

  // Peel cluster cones; every element must stay in the same child.
  while (const auto* cluster = current->cluster()) {
    const auto words = partition_words(cluster->children.size());
    const std::size_t child = owning_cone(words, residual.front());
    for (auto& x : residual) {
      if (!cone_contains(words[child - 1], x)) no_match(fiber);
      x = x.shift(words[child - 1].size());
    }
    candidate.path.push_back(child);
    current = &cluster->children[child - 1];
  }

  if (const auto* point = current->point()) {
    candidate.location = NodeLocation{point->node};
    if (residual.size() == 1 && residual.front() == BinSeq::zeros()) {
      return {candidate, DecodeRule::kPointRepresentative};
    }
    if (options.accept_cone_members && residual.size() == 1) {
      return {candidate, DecodeRule::kPointCone};
    }
    no_match(fiber);
  }

  const FiniteGraph& graph = *current->graph();
  const auto words = partition_words(graph.arc_count());
  const std::size_t arc = owning_cone(words, residual.front());
  const BinSeq tail = residual.front().shift(words[arc - 1].size());
  const Rational t = binary_value(tail);
  if (t.is_zero()) {
    candidate.location = NodeLocation{graph.arc(arc).from};
  } else if (t == Rational(1)) {
    candidate.location = NodeLocation{graph.arc(arc).to};
  } else {
    candidate.location = ArcLocation{arc, t};
  }
  if (represent_point(pattern, candidate).fiber != fiber) no_match(fiber);
  return {candidate, DecodeRule::kExact};
}

namespace {

void enumerate_into(const Pattern& root, const Pattern& pattern, std::vector<std::size_t>& path,
                    std::size_t denominator, std::vector<AddressEntry>& out) {
  if (const auto* cluster = pattern.cluster()) {
    for (std::size_t i = 0; i < cluster->children.size(); ++i) {
      path.push_back(i + 1);
      enumerate_into(root, cluster->children[i], path, denominator, out);
      path.pop_back();
    }
    return;
  }
  if (const auto* point = pattern.point()) {
    out.push_back(represent_point(root, PatternPoint{path, NodeLocation{point->node}}));
    return;
  }
  const FiniteGraph& graph = *pattern.graph();
  for (const auto& node : graph.nodes()) {
    out.push_back(represent_point(root, PatternPoint{path, NodeLocation{node}}));
  }
  for (const auto& arc : graph.arcs()) {
    for (std::size_t k = 1; k < denominator; ++k) {
      const Rational t(static_cast<std::int64_t>(k), static_cast<std::int64_t>(denominator));
      out.push_back(represent_point(root, PatternPoint{path, ArcLocation{arc.index, t}}));
    }
  }
}

}  // namespace

std::vector<AddressEntry> enumerate_table(const Pattern& pattern, std::size_t denominator) {
  if (denominator < 2) throw InvalidInput("sample denominator must be at least 2");
  std::vector<AddressEntry> out;
  std::vector<std::size_t> path;
  enumerate_into(pattern, pattern, path, denominator, out);
  return out;
}

nlohmann::json to_json(const AddressEntry& entry) {
  nlohmann::json words = nlohmann::json::array();
  for (const auto& w : entry.words) words.push_back(w.bits());
  nlohmann::json out{{"point", to_json(entry.point)},
                     {"fiber", entry.fiber.to_strings()},
                     {"words", std::move(words)}};
  if (entry.redirected_from) out["redirected_from"] = to_json(*entry.redirected_from);
  return out;
}

}  // namespace cantor
