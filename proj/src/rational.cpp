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

#include "cantor/rational.hpp"

#include "cantor/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

namespace cantor {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer in rational literal");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InvalidInput("sign without digits in rational literal");
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidInput("non-digit '" + std::string(1, c) + "' in rational literal");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw InvalidInput("rational with zero denominator");
  normalize();
}

Rational Rational::from_int(const BigInt& value) { return Rational(value, 1); }

Rational Rational::pow2_inverse(std::size_t exponent) {
  Rational r;
  r.num_ = 1;
  r.den_ = BigInt(1) << exponent;
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

BigInt Rational::numerator() const { return num_; }
BigInt Rational::denominator() const { return den_; }
bool Rational::is_zero() const { return num_ == 0; }
bool Rational::is_negative() const { return num_ < 0; }

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

std::string Rational::to_string(bool always_fraction) const {
  std::string s = num_.str();
  if (den_ != 1 || always_fraction) s += "/" + den_.str();
  return s;
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw InvalidInput("negative decimal precision");
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt magnitude = num_ < 0 ? BigInt(-num_) : num_;
  BigInt scaled = magnitude * scale;
  BigInt quotient = scaled / den_;
  BigInt twice_remainder = (scaled % den_) * 2;
  if (twice_remainder > den_ || (twice_remainder == den_ && (quotient & 1) != 0)) {
    ++quotient;
  }
  std::string body = quotient.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (num_ < 0 && quotient != 0) body.insert(0, "-");
  return body;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidInput("division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

int log2_exact(const BigInt& value) {
  if (value <= 0) return -1;
  auto lsb = boost::multiprecision::lsb(value);
  auto msb = boost::multiprecision::msb(value);
  return lsb == msb ? static_cast<int>(msb) : -1;
}

BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace cantor
