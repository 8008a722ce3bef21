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

#include "cantor/embed.hpp"

#include "cantor/compiler.hpp"
#include "cantor/error.hpp"

#include <sstream>

namespace cantor {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string path_text(const std::vector<std::size_t>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

}  // namespace

std::string embed_csv(const Pattern& pattern, std::size_t denominator, int precision) {
  if (precision < 1) throw InvalidInput("precision must be at least 1");
  std::ostringstream out;
  out << "cluster_path,location,t,sequence,cmts,cmts_decimal\n";
  for (const auto& row : enumerate_table(pattern, denominator)) {
    std::string location;
    std::string t;
    if (const auto* a = row.point.arc()) {
      location = "arc:" + std::to_string(a->arc);
      t = a->t.to_string(true);
    } else {
      location = "node:" + row.point.node()->node;
    }
    for (const auto& x : row.fiber.elements()) {
      const Rational h = cmts_value(x);
      out << csv_field(path_text(row.point.path)) << ',' << csv_field(location) << ',' << t << ','
          << x.to_string() << ',' << h.to_string(true) << ',' << h.to_decimal(precision) << '\n';
    }
  }
  return out.str();
}

}  // namespace cantor
