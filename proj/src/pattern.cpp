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

#include "cantor/pattern.hpp"

#include "cantor/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cantor {

using nlohmann::json;
using Kind = ParseError::Kind;

namespace {

[[noreturn]] void schema(const std::string& message) { throw ParseError(Kind::kSchema, message); }

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Locate the failing byte as line/column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(Kind::kSyntax, e.what(), line, column);
  }
}

NodeId node_id(const json& value, const char* where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  schema(std::string(where) + " must be a string or integer node id");
}

const json& member(const json& object, const char* key, const char* where) {
  auto it = object.find(key);
  if (it == object.end()) schema(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

std::size_t positive_index(const json& value, const char* where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
    schema(std::string(where) + " must be a positive integer");
  }
  return static_cast<std::size_t>(value.get<std::int64_t>());
}

FiniteGraph graph_from_json(const json& doc) {
  const json& nodes_json = member(doc, "nodes", "graph");
  const json& arcs_json = member(doc, "arcs", "graph");
  if (!nodes_json.is_array()) schema("graph \"nodes\" must be an array");
  if (!arcs_json.is_array()) schema("graph \"arcs\" must be an array");
  std::vector<NodeId> nodes;
  for (const auto& n : nodes_json) nodes.push_back(node_id(n, "graph node"));
  std::vector<Arc> arcs;
  for (const auto& a : arcs_json) {
    if (!a.is_object()) schema("arc entries must be objects");
    arcs.push_back(Arc{positive_index(member(a, "id", "arc"), "arc id"),
                       node_id(member(a, "from", "arc"), "arc from"),
                       node_id(member(a, "to", "arc"), "arc to")});
  }
  return FiniteGraph(std::move(nodes), std::move(arcs));
}

}  // namespace

// ---------------------------------------------------------------- FiniteGraph

FiniteGraph::FiniteGraph(std::vector<NodeId> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  if (arcs_.empty()) schema("a graph needs at least one arc");
  std::set<NodeId> declared;
  for (const auto& n : nodes_) {
    if (!declared.insert(n).second) schema("node \"" + n + "\" declared twice");
  }
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i > 0 && arcs_[i].index == arcs_[i - 1].index) {
      throw ParseError(Kind::kDuplicateArc,
                       "arc id " + std::to_string(arcs_[i].index) + " appears twice");
    }
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].index != i + 1) {
      schema("arc ids must be exactly 1.." + std::to_string(arcs_.size()) + "; missing " +
             std::to_string(i + 1));
    }
  }
  std::set<NodeId> touched;
  for (const auto& a : arcs_) {
    for (const NodeId* end : {&a.from, &a.to}) {
      if (!declared.contains(*end)) {
        throw ParseError(Kind::kDanglingReference, "arc " + std::to_string(a.index) +
                                                       " references undeclared node \"" +
                                                       *end + "\"");
      }
      touched.insert(*end);
    }
  }
  for (const auto& n : nodes_) {
    if (!touched.contains(n)) schema("node \"" + n + "\" is not an endpoint of any arc");
  }

  // Connectivity by union-find over node positions.
  std::map<NodeId, std::size_t> position;
  for (std::size_t i = 0; i < nodes_.size(); ++i) position[nodes_[i]] = i;
  std::vector<std::size_t> parent(nodes_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t components = nodes_.size();
  for (const auto& a : arcs_) {
    std::size_t x = find(position[a.from]);
    std::size_t y = find(position[a.to]);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  if (components != 1) {
    throw ParseError(Kind::kDisconnected,
                     "graph has " + std::to_string(components) +
                         " components; express disconnected patterns as clusters");
  }
}

bool FiniteGraph::has_node(const NodeId& node) const {
  return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end();
}

const Arc& FiniteGraph::arc(std::size_t index) const {
  if (index < 1 || index > arcs_.size()) {
    throw UnresolvablePoint("arc " + std::to_string(index) + " does not exist (r = " +
                            std::to_string(arcs_.size()) + ")");
  }
  return arcs_[index - 1];
}

std::vector<Incidence> incidences(const FiniteGraph& graph, const NodeId& node) {
  if (!graph.has_node(node)) throw UnresolvablePoint("unknown node \"" + node + "\"");
  std::vector<Incidence> out;
  for (const auto& a : graph.arcs()) {
    if (a.from == node) out.push_back({a.index, 0});
    if (a.to == node) out.push_back({a.index, 1});
  }
  return out;
}

bool is_tree(const FiniteGraph& graph) {
  // Graphs are connected by construction.
  return graph.arc_count() + 1 == graph.nodes().size();
}

// ---------------------------------------------------------------- Pattern

Pattern::Pattern(ClusterPattern cluster) : value_(std::move(cluster)) {
  if (std::get<ClusterPattern>(value_).children.empty()) {
    throw ParseError(Kind::kEmptyCluster, "cluster must have at least one child");
  }
}

const Pattern& resolve_path(const Pattern& pattern, const std::vector<std::size_t>& path) {
  const Pattern* current = &pattern;
  for (std::size_t depth = 0; depth < path.size(); ++depth) {
    const auto* cluster = current->cluster();
    if (cluster == nullptr) {
      throw UnresolvablePoint("path step " + std::to_string(depth + 1) +
                              " descends into a non-cluster pattern");
    }
    const std::size_t child = path[depth];
    if (child < 1 || child > cluster->children.size()) {
      throw UnresolvablePoint("child " + std::to_string(child) + " does not exist in a cluster of " +
                              std::to_string(cluster->children.size()));
    }
    current = &cluster->children[child - 1];
  }
  if (current->cluster() != nullptr) {
    throw UnresolvablePoint("path ends at a cluster, not at a graph or point");
  }
  return *current;
}

Pattern pattern_from_json(const json& doc) {
  if (!doc.is_object()) schema("pattern must be an object");
  const json& type = member(doc, "type", "pattern");
  if (!type.is_string()) schema("pattern \"type\" must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "graph") return graph_from_json(doc);
  if (kind == "point") return PointPattern{node_id(member(doc, "node", "point"), "point node")};
  if (kind == "cluster") {
    const json& children = member(doc, "children", "cluster");
    if (!children.is_array()) schema("cluster \"children\" must be an array");
    ClusterPattern cluster;
    for (const auto& c : children) cluster.children.push_back(pattern_from_json(c));
    return Pattern(std::move(cluster));
  }
  schema("unknown pattern type \"" + kind + "\"");
}

Pattern parse_pattern(std::string_view document) {
  return pattern_from_json(parse_document(document));
}

json to_json(const Pattern& pattern) {
  if (const auto* g = pattern.graph()) {
    json arcs = json::array();
    for (const auto& a : g->arcs()) {
      arcs.push_back({{"id", a.index}, {"from", a.from}, {"to", a.to}});
    }
    return {{"type", "graph"}, {"nodes", g->nodes()}, {"arcs", std::move(arcs)}};
  }
  if (const auto* p = pattern.point()) return {{"type", "point"}, {"node", p->node}};
  json children = json::array();
  for (const auto& c : pattern.cluster()->children) children.push_back(to_json(c));
  return {{"type", "cluster"}, {"children", std::move(children)}};
}

std::string serialize(const Pattern& pattern) { return to_json(pattern).dump(2); }

// ---------------------------------------------------------------- PatternPoint

PatternPoint point_from_json(const json& doc) {
  if (!doc.is_object()) schema("query point must be an object");
  PatternPoint point;
  if (auto it = doc.find("path"); it != doc.end()) {
    if (!it->is_array()) schema("query \"path\" must be an array");
    for (const auto& step : *it) point.path.push_back(positive_index(step, "path step"));
  }
  const bool has_arc = doc.contains("arc");
  const bool has_node = doc.contains("node");
  if (has_arc == has_node) schema("query point needs exactly one of \"arc\" or \"node\"");
  if (has_node) {
    point.location = NodeLocation{node_id(doc.at("node"), "query node")};
    return point;
  }
  const json& t = member(doc, "t", "arc query");
  if (!t.is_string()) schema("query \"t\" must be a \"p/q\" string");
  Rational value;
  try {
    value = Rational::parse(t.get<std::string>());
  } catch (const InvalidInput& e) {
    schema(std::string("query \"t\": ") + e.what());
  }
  if (value.is_negative() || value > Rational(1)) schema("query \"t\" must lie in [0,1]");
  point.location = ArcLocation{positive_index(doc.at("arc"), "query arc"), value};
  return point;
}

std::vector<PatternPoint> parse_points(std::string_view document) {
  json doc = parse_document(document);
  std::vector<PatternPoint> out;
  if (doc.is_array()) {
    for (const auto& p : doc) out.push_back(point_from_json(p));
  } else {
    out.push_back(point_from_json(doc));
  }
  return out;
}

json to_json(const PatternPoint& point) {
  json out{{"path", point.path}};
  if (const auto* a = point.arc()) {
    out["arc"] = a->arc;
    out["t"] = a->t.to_string(true);
  } else {
    out["node"] = point.node()->node;
  }
  return out;
}

std::string PatternPoint::to_string() const { return to_json(*this).dump(); }

}  // namespace cantor
