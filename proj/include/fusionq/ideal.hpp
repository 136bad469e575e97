#pragma once

/// @file ideal.hpp
/// @brief Componentwise right ideals of U(sl2[t]) and their fusion at
/// distinct points.
///
/// A componentwise ideal is generated by the Lie subalgebra
/// e (x) p_e C[t] + h (x) p_h C[t] + f (x) p_f C[t] for monic p_e, p_h, p_f.
/// Fusing ideals at points z_i intersects the shifted subalgebras, which
/// for each component is the lcm of the polynomials p(t - z_i).

#include "fusionq/linalg.hpp"

#include <span>
#include <string>
#include <vector>

namespace fusionq {

/// Polynomial in t with rational coefficients, ascending, canonical (no
/// trailing zeros).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial one() { return RationalPolynomial({Rational(1)}); }
  static RationalPolynomial t_power(int n);
  /// t - z
  static RationalPolynomial linear(const Rational& z);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(int e) const;

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// p(t - z)
  RationalPolynomial shifted(const Rational& z) const;
  /// Remainder of division by a nonzero divisor.
  RationalPolynomial mod(const RationalPolynomial& divisor) const;
  bool divides(const RationalPolynomial& other) const;
  RationalPolynomial monic() const;
  /// Leading monomial t^{deg p} (the top-degree part of a monic polynomial).
  RationalPolynomial leading_monomial() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);
RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b);

class ComponentwiseIdeal {
 public:
  /// Throws std::invalid_argument when a generator is not monic or the
  /// span fails to be a Lie subalgebra ([e,f] = h needs p_h | p_e p_f).
  ComponentwiseIdeal(RationalPolynomial p_e, RationalPolynomial p_h, RationalPolynomial p_f);

  /// B_M: all of sl2 (x) t^M C[t].
  static ComponentwiseIdeal b_ideal(int M);
  /// n_+ (x) C[t] + h (x) tC[t] + n_- (x) tC[t].
  static ComponentwiseIdeal highest_type();
  /// e (x) tC[t] + h (x) tC[t] + f (x) C[t].
  static ComponentwiseIdeal lowest_type();

  const RationalPolynomial& p_e() const { return p_e_; }
  const RationalPolynomial& p_h() const { return p_h_; }
  const RationalPolynomial& p_f() const { return p_f_; }

  static bool is_subalgebra(const RationalPolynomial& p_e, const RationalPolynomial& p_h,
                            const RationalPolynomial& p_f);

  friend bool operator==(const ComponentwiseIdeal&, const ComponentwiseIdeal&) = default;

 private:
  RationalPolynomial p_e_, p_h_, p_f_;
};

/// Fusion of ideals attached to pairwise-distinct points.
ComponentwiseIdeal componentwise_ideal_fuse(std::span<const ComponentwiseIdeal> ideals,
                                            std::span<const Rational> points);

/// Each generator replaced by its leading monomial.
ComponentwiseIdeal top_of_ideal(const ComponentwiseIdeal& ideal);

}  // namespace fusionq
