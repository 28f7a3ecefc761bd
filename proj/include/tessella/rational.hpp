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

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tessella {

// Expression templates are disabled so that Eigen sees plain value types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = MatrixX<Rational>;
using RVector = VectorX<Rational>;
using IMatrix = MatrixX<Integer>;
using IVector = VectorX<Integer>;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);
/// Smallest integer not below q.
Integer ceil(const Rational& q);
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }
inline bool is_integer(const Rational& q) { return denom(q) == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Parses "p", "-p" or "p/q" (whitespace-free). Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);
/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::int64_t to_int64(const Integer& z);
double to_double(const Rational& q);

/// Least common multiple of the denominators of all entries.
Integer common_denominator(const RMatrix& m);

RMatrix to_rational(const IMatrix& m);

}  // namespace tessella
