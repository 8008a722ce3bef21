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

#include "cantor/interval.hpp"

#include "cantor/error.hpp"

#include <unordered_map>

namespace cantor {

namespace {

void require_unit(const Rational& y) {
  if (y.is_negative() || y > Rational(1)) {
    throw InvalidInput("value " + y.to_string() + " lies outside [0,1]");
  }
}

// Binary long division of num/den (0 < num < den) with remainder-cycle
// detection. Small denominators use a dense table.
BinSeq expand_non_dyadic(const BigInt& num, const BigInt& den) {
  std::string digits;
  std::size_t start = 0;
  if (den <= (BigInt(1) << 24)) {
    const auto d = den.convert_to<std::uint64_t>();
    auto r = num.convert_to<std::uint64_t>();
    std::vector<std::int64_t> seen(d, -1);
    while (seen[r] < 0) {
      seen[r] = static_cast<std::int64_t>(digits.size());
      r <<= 1;
      digits.push_back(r >= d ? '1' : '0');
      if (r >= d) r -= d;
    }
    start = static_cast<std::size_t>(seen[r]);
  } else {
    std::unordered_map<std::string, std::size_t> seen;
    BigInt r = num;
    while (true) {
      auto [it, fresh] = seen.emplace(r.str(), digits.size());
      if (!fresh) {
        start = it->second;
        break;
      }
      r <<= 1;
      digits.push_back(r >= den ? '1' : '0');
      if (r >= den) r -= den;
    }
  }
  return canonicalize(digits.substr(0, start), digits.substr(start));
}

}  // namespace

const char* to_string(DyadicClass::Kind kind) {
  switch (kind) {
    case DyadicClass::Kind::kEndpointZero: return "endpoint-zero";
    case DyadicClass::Kind::kEndpointOne: return "endpoint-one";
    case DyadicClass::Kind::kDyadicInterior: return "dyadic-interior";
    case DyadicClass::Kind::kNonDyadic: return "non-dyadic";
  }
  return "?";
}

Rational binary_value(const BinSeq& x) { return periodic_sum(x, 2); }

DyadicClass classify(const Rational& y) {
  require_unit(y);
  DyadicClass c;
  if (y.is_zero()) {
    c.kind = DyadicClass::Kind::kEndpointZero;
  } else if (y == Rational(1)) {
    c.kind = DyadicClass::Kind::kEndpointOne;
  } else if (int n = log2_exact(y.denominator()); n > 0) {
    c.kind = DyadicClass::Kind::kDyadicInterior;
    c.exponent = static_cast<std::size_t>(n);
    c.odd_numerator = y.numerator();
  }
  return c;
}

Fiber fiber_unit_interval(const Rational& y) {
  const DyadicClass c = classify(y);
  switch (c.kind) {
    case DyadicClass::Kind::kEndpointZero:
      return Fiber{BinSeq::zeros()};
    case DyadicClass::Kind::kEndpointOne:
      return Fiber{BinSeq::ones()};
    case DyadicClass::Kind::kDyadicInterior: {
      // l = a_1 ... a_{n-1} 1 in binary, n digits; a0 ends 0111..., a1 ends 1000...
      std::string bits;
      for (std::size_t i = c.exponent; i-- > 0;) {
        bits.push_back(bit_test(c.odd_numerator, static_cast<unsigned>(i)) ? '1' : '0');
      }
      std::string head = bits.substr(0, bits.size() - 1);
      return Fiber{canonicalize(head + "0", "1"), canonicalize(head + "1", "0")};
    }
    case DyadicClass::Kind::kNonDyadic:
      return Fiber{expand_non_dyadic(y.numerator(), y.denominator())};
  }
  throw InvalidInput("unreachable dyadic class");
}

Rational decode_fiber(const Fiber& fiber) {
  const auto elements = fiber.elements();
  Rational value = binary_value(elements.front());
  for (const auto& x : elements.subspan(1)) {
    if (binary_value(x) != value) {
      throw NotAFiber("sequences " + elements.front().to_string() + " and " + x.to_string() +
                      " have different binary values");
    }
  }
  return value;
}

}  // namespace cantor
