#pragma once

// Exact rational scalars and the simple-root coordinate vector type.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace semidecay {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Coordinates of a weight (or root, or decay rate) in the simple-root basis.
using WeightVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p", "p/q", "-p/q". Throws Error(invalid_input) on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const WeightVector& v);
double to_double(const Rational& value);
Eigen::VectorXd to_double(const WeightVector& v);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 12);

/// base^exponent, exact; exponent may be negative for nonzero base.
Rational pow(const Rational& base, int exponent);

/// Smallest integer k with k >= value.
Integer ceil(const Rational& value);

WeightVector zero_weight(Eigen::Index rank);
WeightVector unit_weight(Eigen::Index rank, Eigen::Index index);
bool is_zero(const WeightVector& v);
bool all_nonnegative(const WeightVector& v);
bool all_positive(const WeightVector& v);

/// Lexicographic comparison; vectors must share a length.
bool lex_less(const WeightVector& a, const WeightVector& b);

/// Rank of a rational matrix by exact elimination.
Eigen::Index exact_rank(Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m);

}  // namespace semidecay
