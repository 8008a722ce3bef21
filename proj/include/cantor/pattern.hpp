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

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cantor {

using NodeId = std::string;

/// Arc `index` runs from `from` (t = 0) to `to` (t = 1).
struct Arc {
  std::size_t index = 0;
  NodeId from;
  NodeId to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One endpoint of an arc meeting a node.
struct Incidence {
  std::size_t arc = 0;
  int end = 0;  // 0 for the from-end, 1 for the to-end

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Connected finite graph with arcs indexed 1..r. Loops are allowed.
class FiniteGraph {
 public:
  /// Validates and sorts arcs by index. Throws ParseError.
  FiniteGraph(std::vector<NodeId> nodes, std::vector<Arc> arcs);

  [[nodiscard]] const std::vector<NodeId>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] bool has_node(const NodeId& node) const;
  [[nodiscard]] const Arc& arc(std::size_t index) const;

  friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Arc> arcs_;
};

/// Ends of arcs meeting `node`, ordered by arc index then end. A loop
/// contributes both ends. Throws UnresolvablePoint for an unknown node.
std::vector<Incidence> incidences(const FiniteGraph& graph, const NodeId& node);

/// Connected, and r = |nodes| - 1.
bool is_tree(const FiniteGraph& graph);

/// One-point continuum.
struct PointPattern {
  NodeId node;
  friend bool operator==(const PointPattern&, const PointPattern&) = default;
};

class Pattern;

/// Direct sum of child patterns, indexed 1..s.
struct ClusterPattern {
  std::vector<Pattern> children;
  friend bool operator==(const ClusterPattern&, const ClusterPattern&);
};

class Pattern {
 public:
  using Variant = std::variant<FiniteGraph, ClusterPattern, PointPattern>;

  Pattern(FiniteGraph graph) : value_(std::move(graph)) {}        // NOLINT
  Pattern(ClusterPattern cluster);                                  // NOLINT
  Pattern(PointPattern point) : value_(std::move(point)) {}       // NOLINT

  [[nodiscard]] const Variant& value() const { return value_; }
  [[nodiscard]] const FiniteGraph* graph() const { return std::get_if<FiniteGraph>(&value_); }
  [[nodiscard]] const ClusterPattern* cluster() const {
    return std::get_if<ClusterPattern>(&value_);
  }
  [[nodiscard]] const PointPattern* point() const { return std::get_if<PointPattern>(&value_); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Variant value_;
};

inline bool operator==(const ClusterPattern& a, const ClusterPattern& b) {
  return a.children == b.children;
}

struct ArcLocation {
  std::size_t arc = 0;
  Rational t;
  friend bool operator==(const ArcLocation&, const ArcLocation&) = default;
};

struct NodeLocation {
  NodeId node;
  friend bool operator==(const NodeLocation&, const NodeLocation&) = default;
};

/// A point of a pattern: cluster child indices (1-based) leading to a
/// graph or point leaf, then a location inside it.
struct PatternPoint {
  std::vector<std::size_t> path;
  std::variant<ArcLocation, NodeLocation> location;

  [[nodiscard]] const ArcLocation* arc() const { return std::get_if<ArcLocation>(&location); }
  [[nodiscard]] const NodeLocation* node() const { return std::get_if<NodeLocation>(&location); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PatternPoint&, const PatternPoint&) = default;
};

/// Leaf reached by following `path` through clusters. Throws
/// UnresolvablePoint.
const Pattern& resolve_path(const Pattern& pattern, const std::vector<std::size_t>& path);

Pattern parse_pattern(std::string_view document);
Pattern pattern_from_json(const nlohmann::json& document);
nlohmann::json to_json(const Pattern& pattern);
std::string serialize(const Pattern& pattern);

/// Accepts a single point object or an array of them.
std::vector<PatternPoint> parse_points(std::string_view document);
PatternPoint point_from_json(const nlohmann::json& document);
nlohmann::json to_json(const PatternPoint& point);

}  // namespace cantor
