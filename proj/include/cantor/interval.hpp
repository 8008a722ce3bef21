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
#include "cantor/sequence.hpp"

#include <cstdint>

namespace cantor {

/// Position of a rational y in [0,1] relative to the dyadic set
/// M = { l/2^n : 0 < l < 2^n }.
struct DyadicClass {
  enum class Kind { kEndpointZero, kEndpointOne, kDyadicInterior, kNonDyadic };

  Kind kind = Kind::kNonDyadic;
  // Only meaningful for kDyadicInterior: y = odd_numerator / 2^exponent.
  std::size_t exponent = 0;
  BigInt odd_numerator = 0;

  friend bool operator==(const DyadicClass&, const DyadicClass&) = default;
};

const char* to_string(DyadicClass::Kind kind);

/// f(x) = sum x_i / 2^i.
Rational binary_value(const BinSeq& x);

/// Throws InvalidInput when y lies outside [0,1].
DyadicClass classify(const Rational& y);

/// f^{-1}(y): a doubleton {a0, a1} for dyadic interior y, otherwise the
/// single binary expansion of y.
Fiber fiber_unit_interval(const Rational& y);

/// Common binary value of the fiber's elements. Throws NotAFiber if they
/// disagree.
Rational decode_fiber(const Fiber& fiber);

}  // namespace cantor
