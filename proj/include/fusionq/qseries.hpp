#pragma once

/// @file qseries.hpp
/// @brief Polynomials in q with arbitrary-precision integer coefficients,
/// and Gaussian binomial coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fusionq {

using BigInt = mpz_class;

/// Polynomial in a single variable q with big-integer coefficients.
///
/// Stored densely in ascending order. The representation is canonical:
/// the highest stored coefficient is never zero, so the zero polynomial
/// has no stored coefficients and two polynomials are equal iff their
/// coefficient vectors are equal.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> ascending);
  QPoly(std::initializer_list<long> ascending);

  static QPoly monomial(const BigInt& c, int exponent);
  static QPoly constant(const BigInt& c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const BigInt& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
  friend QPoly operator*(const BigInt& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// q^n * p for n >= 0.
  QPoly shifted(int n) const;
  BigInt eval_at_one() const;
  /// q^D * p(1/q). Requires deg p <= D; throws std::domain_error otherwise.
  QPoly reversed(int D) const;
  /// True when every coefficient is >= 0.
  bool nonnegative() const;
  /// Coefficientwise comparison: every coefficient of *this is >= that of other.
  bool dominates(const QPoly& other) const;

  /// Human-readable form such as "1 + q + 2q^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Gaussian binomial [m choose n]_q. Zero when n < 0, n > m or m < 0.
QPoly qbinom(int m, int n);

/// Product of componentwise Gaussian binomials. Throws std::invalid_argument
/// on length mismatch.
QPoly vector_qbinom(std::span<const std::int64_t> top, std::span<const std::int64_t> bottom);

}  // namespace fusionq
