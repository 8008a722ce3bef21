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
#include "cantor/sequence.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace cantor {

/// Prefix partition of {0,1}^N into r cones: "0", "10", ..., "1"^(r-2)"0",
/// "1"^(r-1). For r = 1 the single word is empty. Throws InvalidInput for
/// r = 0.
std::vector<Word> partition_words(std::size_t r);

/// Fiber of the interior point t of arc `arc` (1-based): the binary fiber
/// of t pushed into that arc's cone. Throws EndpointIsNode for t in {0,1}.
Fiber represent_arc_point(std::span<const Word> words, std::size_t arc, const Rational& t);

/// Union over incidences of the arc endpoint (0-bar or 1-bar) pushed into
/// the incident arc's cone.
Fiber represent_node(std::span<const Word> words, std::span<const Incidence> incidences);

/// One row of a representation: a pattern point and its fiber.
struct AddressEntry {
  PatternPoint point;
  Fiber fiber;
  /// Full cone words that prefix the fiber's elements, one per arc
  /// occurrence (or the cluster cone of a point child).
  std::vector<Word> words;
  /// Set when an arc endpoint query was answered by its node.
  std::optional<PatternPoint> redirected_from;
};

AddressEntry represent_point(const Pattern& pattern, const PatternPoint& query);

enum class DecodeRule {
  kExact,                // fiber equals the representation of the point
  kPointRepresentative,  // point child matched by its canonical representative
  kPointCone,            // point child matched by cone membership
};

const char* to_string(DecodeRule rule);

struct DecodeOptions {
  /// Accept a singleton anywhere inside a point child's cone, not only its
  /// representative.
  bool accept_cone_members = false;
};

struct DecodeResult {
  PatternPoint point;
  DecodeRule rule = DecodeRule::kExact;
};

/// Inverse of represent_point. Throws NoMatch when the fiber names no point.
DecodeResult decode_representation(const Pattern& pattern, const Fiber& fiber,
                                   DecodeOptions options = {});

/// Every node, every point child, and arc points t = k/denominator for
/// 0 < k < denominator, in cluster-path / arc / t order. Throws
/// InvalidInput for denominator < 2.
std::vector<AddressEntry> enumerate_table(const Pattern& pattern, std::size_t denominator);

nlohmann::json to_json(const AddressEntry& entry);

}  // namespace cantor
