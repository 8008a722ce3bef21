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

#include <string>

namespace cantor {

/// CSV with one row per fiber element of enumerate_table(pattern,
/// denominator): cluster_path, location, t, sequence, cmts (exact p/q) and
/// cmts_decimal (round-half-even to `precision` digits).
std::string embed_csv(const Pattern& pattern, std::size_t denominator, int precision);

}  // namespace cantor
