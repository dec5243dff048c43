#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace symalg {

/// Exact rational scalar. Everything in this library is computed over Q, so
/// every identity below holds with tolerance zero or not at all.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "num" or "num/den" into a canonical rational (lowest terms,
/// positive denominator). Decimal or malformed input throws
/// std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Formats as "num" or "num/den"; exact inverse of parse_rational.
std::string to_string(const Rational& value);

}  // namespace symalg
