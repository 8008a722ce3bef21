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

#include <stdexcept>
#include <string>

namespace cantor {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: empty period, bit string with stray characters,
/// value outside [0,1], non-positive count.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A set of sequences whose binary values disagree.
class NotAFiber : public Error {
 public:
  using Error::Error;
};

/// Arc query with t in {0,1}; the point is a node.
class EndpointIsNode : public Error {
 public:
  using Error::Error;
};

/// Pattern point whose cluster path or ids do not resolve.
class UnresolvablePoint : public Error {
 public:
  using Error::Error;
};

/// Fiber that names no point of the pattern.
class NoMatch : public Error {
 public:
  using Error::Error;
};

/// Pattern or point document that violates the schema.
class ParseError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kSchema,
    kDanglingReference,
    kDuplicateArc,
    kEmptyCluster,
    kDisconnected,
  };

  ParseError(Kind kind, const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : Error(format(kind, message, line, column)), kind_(kind), line_(line), column_(column) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::kSyntax: return "syntax";
      case Kind::kSchema: return "schema";
      case Kind::kDanglingReference: return "dangling-reference";
      case Kind::kDuplicateArc: return "duplicate-arc";
      case Kind::kEmptyCluster: return "empty-cluster";
      case Kind::kDisconnected: return "disconnected";
    }
    return "unknown";
  }

 private:
  static std::string format(Kind kind, const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = std::string(kind_name(kind)) + " error";
    if (line > 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
    return out + ": " + message;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cantor
