// Copyright 2026 The Tessella Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "tessella/rational.hpp"

#include "tessella/error.hpp"

#include <cctype>

namespace tessella {

Integer floor(const Rational& q) {
  const Integer n = numer(q);
  const Integer d = denom(q);
  if (n >= 0) return Integer(n / d);
  return Integer(-((-n + d - 1) / d));
}

Integer ceil(const Rational& q) { return Integer(-floor(Rational(-q))); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return Integer(boost::multiprecision::abs(a / gcd(a, b) * b));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  TESSELLA_REQUIRE(all_digits(s), ErrorCode::InvalidInput,
                   "malformed integer '" + std::string(s) + "'");
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer p = parse_integer(text.substr(0, slash));
  const std::string_view qs = text.substr(slash + 1);
  TESSELLA_REQUIRE(all_digits(qs), ErrorCode::InvalidInput,
                   "malformed denominator in '" + std::string(text) + "'");
  const Integer q(std::string{qs});
  TESSELLA_REQUIRE(q != 0, ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

std::int64_t to_int64(const Integer& z) {
  TESSELLA_REQUIRE(z >= std::numeric_limits<std::int64_t>::min() &&
                       z <= std::numeric_limits<std::int64_t>::max(),
                   ErrorCode::TooLarge, "integer " + z.str() + " exceeds 64 bits");
  return z.convert_to<std::int64_t>();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer common_denominator(const RMatrix& m) {
  Integer d(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d = lcm(d, denom(m(i, j)));
  return d;
}

RMatrix to_rational(const IMatrix& m) {
  RMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::ConditionFails: return "ConditionFails";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Incommensurable: return "Incommensurable";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::CovolumeMismatch: return "CovolumeMismatch";
    case ErrorCode::NonRationalRatio: return "NonRationalRatio";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotMeasurePreserving: return "NotMeasurePreserving";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace tessella
