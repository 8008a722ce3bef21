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
#include "cantor/pattern.hpp"

#include <gtest/gtest.h>

namespace cantor {
namespace {

constexpr const char* kThreeOd = R"({
  "type": "graph",
  "nodes": ["c", "a", "b", "d"],
  "arcs": [
    {"id": 1, "from": "c", "to": "a"},
    {"id": 2, "from": "c", "to": "b"},
    {"id": 3, "from": "c", "to": "d"}
  ]
})";

ParseError::Kind kind_of(const char* doc) {
  try {
    parse_pattern(doc);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << doc;
  return ParseError::Kind::kSyntax;
}

TEST(ParsePattern, ThreeOd) {
  const Pattern p = parse_pattern(kThreeOd);
  ASSERT_NE(p.graph(), nullptr);
  EXPECT_EQ(p.graph()->arc_count(), 3U);
  EXPECT_EQ(p.graph()->nodes().size(), 4U);
  EXPECT_TRUE(is_tree(*p.graph()));
}

TEST(ParsePattern, ClusterOfPoints) {
  const Pattern p = parse_pattern(
      R"({"type":"cluster","children":[{"type":"point","node":"x1"},
          {"type":"point","node":"x2"},{"type":"point","node":"x3"}]})");
  ASSERT_NE(p.cluster(), nullptr);
  EXPECT_EQ(p.cluster()->children.size(), 3U);
  EXPECT_EQ(p.cluster()->children[1].point()->node, "x2");
}

TEST(ParsePattern, IntegerNodeIdsAndArcOrder) {
  const Pattern p = parse_pattern(
      R"({"type":"graph","nodes":[1,2,3],"arcs":[{"id":2,"from":2,"to":3},{"id":1,"from":1,"to":2}]})");
  EXPECT_EQ(p.graph()->arc(1).from, "1");
  EXPECT_EQ(p.graph()->arc(2).to, "3");
}

TEST(ParsePattern, Errors) {
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a"],"arcs":[{"id":1,"from":"a","to":"z"}]})"),
            ParseError::Kind::kDanglingReference);
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a","b"],"arcs":[{"id":1,"from":"a","to":"b"},
                       {"id":1,"from":"b","to":"a"}]})"),
            ParseError::Kind::kDuplicateArc);
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a","b"],"arcs":[{"id":2,"from":"a","to":"b"}]})"),
            ParseError::Kind::kSchema);
  EXPECT_EQ(kind_of(R"({"type":"cluster","children":[]})"), ParseError::Kind::kEmptyCluster);
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a","b","c","d"],"arcs":[{"id":1,"from":"a","to":"b"},
                       {"id":2,"from":"c","to":"d"}]})"),
            ParseError::Kind::kDisconnected);
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a","b","c"],"arcs":[{"id":1,"from":"a","to":"b"}]})"),
            ParseError::Kind::kSchema);
  EXPECT_EQ(kind_of(R"({"type":"graph","nodes":["a"],"arcs":[]})"), ParseError::Kind::kSchema);
  EXPECT_EQ(kind_of(R"({"type":"blob"})"), ParseError::Kind::kSchema);
  EXPECT_EQ(kind_of(R"({"type":"point"})"), ParseError::Kind::kSchema);
}

TEST(ParsePattern, SyntaxErrorCarriesPosition) {
  try {
    parse_pattern("{\n  \"type\": \"graph\",\n  \"nodes\": [,]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::kSyntax);
    EXPECT_EQ(e.line(), 3U);
    EXPECT_GT(e.column(), 1U);
  }
}

TEST(Incidences, ThreeOd) {
  const Pattern p = parse_pattern(kThreeOd);
  const auto center = incidences(*p.graph(), "c");
  EXPECT_EQ(center, (std::vector<Incidence>{{1, 0}, {2, 0}, {3, 0}}));
  EXPECT_EQ(incidences(*p.graph(), "b"), (std::vector<Incidence>{{2, 1}}));
  EXPECT_THROW(incidences(*p.graph(), "nope"), UnresolvablePoint);
}

TEST(Incidences, LoopCountsBothEnds) {
  const Pattern p = parse_pattern(R"({"type":"graph","nodes":["n"],"arcs":[{"id":1,"from":"n","to":"n"}]})");
  EXPECT_EQ(incidences(*p.graph(), "n"), (std::vector<Incidence>{{1, 0}, {1, 1}}));
  EXPECT_FALSE(is_tree(*p.graph()));
}

TEST(Incidences, SumIsTwiceArcCount) {
  for (const char* doc :
       {kThreeOd,
        R"({"type":"graph","nodes":["p","q","r"],"arcs":[{"id":1,"from":"p","to":"q"},
           {"id":2,"from":"q","to":"r"},{"id":3,"from":"r","to":"p"},{"id":4,"from":"p","to":"p"}]})"}) {
    const Pattern p = parse_pattern(doc);
    std::size_t total = 0;
    for (const auto& n : p.graph()->nodes()) total += incidences(*p.graph(), n).size();
    EXPECT_EQ(total, 2 * p.graph()->arc_count());
  }
}

TEST(Serialize, RoundTripsNestedPattern) {
  const Pattern p = parse_pattern(
      R"({"type":"cluster","children":[)" + std::string(kThreeOd) +
      R"(,{"type":"cluster","children":[{"type":"point","node":"z"},
         {"type":"graph","nodes":["o"],"arcs":[{"id":1,"from":"o","to":"o"}]}]}]})");
  EXPECT_EQ(parse_pattern(serialize(p)), p);
}

TEST(ResolvePath, WalksClusters) {
  const Pattern p = parse_pattern(
      R"({"type":"cluster","children":[{"type":"point","node":"x"},)" + std::string(kThreeOd) + "]}");
  EXPECT_NE(resolve_path(p, {2}).graph(), nullptr);
  EXPECT_THROW(resolve_path(p, {5}), UnresolvablePoint);
  EXPECT_THROW(resolve_path(p, {}), UnresolvablePoint);
  EXPECT_THROW(resolve_path(p, {1, 1}), UnresolvablePoint);
}

TEST(ParsePoints, ArcAndNodeQueries) {
  const auto points = parse_points(R"([{"path":[1,2],"arc":3,"t":"2/4"},{"node":"c"}])");
  ASSERT_EQ(points.size(), 2U);
  EXPECT_EQ(points[0].path, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(points[0].arc()->t, Rational(1, 2));
  EXPECT_EQ(points[1].node()->node, "c");
  EXPECT_TRUE(points[1].path.empty());
  EXPECT_EQ(point_from_json(to_json(points[0])), points[0]);
  EXPECT_THROW(parse_points(R"({"arc":1,"t":"3/2"})"), ParseError);
  EXPECT_THROW(parse_points(R"({"arc":1,"node":"c","t":"1/2"})"), ParseError);
  EXPECT_THROW(parse_points(R"({"arc":1,"t":0.5})"), ParseError);
}

}  // namespace
}  // namespace cantor
