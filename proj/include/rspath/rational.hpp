#pragma once

// Exact arithmetic used throughout the library. Rationals are GMP-backed and
// usable as an Eigen scalar.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rspath {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// A point of Q^k; as a distribution p it must be positive and sum to one.
using RationalPoint = std::vector<Rational>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "a/b", "a" or a plain decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/3,2/3".
RationalPoint parse_rational_list(std::string_view text);

/// Wire format: always "num/den", e.g. "3/4", "1/1", "0/1".
std::string to_wire(const Rational& value);

Rational from_double(double value);
double to_double(const Rational& value);

/// Integer power for any ring-like scalar (negative exponents need a field).
template <class Scalar>
Scalar ipow(const Scalar& base, long exponent) {
  if (exponent < 0) return Scalar(1) / ipow(base, -exponent);
  Scalar result(1);
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

/// x^y = prod_i x_i^{y_i}.
template <class Scalar>
Scalar monomial(std::span<const Scalar> x, std::span<const int> y) {
  Scalar result(1);
  for (std::size_t i = 0; i < y.size(); ++i) result *= ipow(x[i], y[i]);
  return result;
}

/// Throws unless p is a probability vector with strictly positive entries.
void require_positive_distribution(const RationalPoint& p);

Integer factorial(unsigned n);

}  // namespace rspath
