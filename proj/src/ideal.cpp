#include "fusionq/ideal.hpp"

#include "fusionq/sl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fusionq {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::t_power(int n) {
  if (n < 0) throw std::invalid_argument("t_power: negative exponent");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c.back() = 1;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::linear(const Rational& z) {
  return RationalPolynomial({Rational(-z), Rational(1)});
}

Rational RationalPolynomial::coeff(int e) const {
  if (e < 0 || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e)];
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::shifted(const Rational& z) const {
  // Horner in the variable (t - z).
  RationalPolynomial out;
  const RationalPolynomial step = linear(z);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out = out * step;
    std::vector<Rational> c(out.coeffs_.begin(), out.coeffs_.end());
    if (c.empty()) c.emplace_back(0);
    c[0] += *it;
    out = RationalPolynomial(std::move(c));
  }
  return out;
}

RationalPolynomial RationalPolynomial::mod(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = coeffs_;
  const int dd = divisor.degree();
  const Rational& lead = divisor.coeffs_.back();
  for (int e = degree(); e >= dd; --e) {
    const Rational f = r[static_cast<std::size_t>(e)] / lead;
    if (sgn(f) == 0) continue;
    for (int i = 0; i <= dd; ++i) r[static_cast<std::size_t>(e - dd + i)] -= f * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return RationalPolynomial(std::move(r));
}

bool RationalPolynomial::divides(const RationalPolynomial& other) const { return other.mod(*this).is_zero(); }

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::leading_monomial() const {
  if (is_zero()) return {};
  std::vector<Rational> c(coeffs_.size(), Rational(0));
  c.back() = coeffs_.back();
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    Rational c = coeffs_[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    c = abs(c);
    if (e == 0 || c != 1) os << format_rational(c);
    if (e > 0) os << 't';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial lcm(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const RationalPolynomial g = gcd(a, b);
  // a*b / g by long division; the remainder is zero.
  const RationalPolynomial prod = a * b;
  std::vector<Rational> r(prod.coeffs().begin(), prod.coeffs().end());
  const int dg = g.degree();
  std::vector<Rational> q(static_cast<std::size_t>(prod.degree() - dg) + 1, Rational(0));
  for (int e = prod.degree(); e >= dg; --e) {
    const Rational f = r[static_cast<std::size_t>(e)] / g.coeffs().back();
    q[static_cast<std::size_t>(e - dg)] = f;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(e - dg + i)] -= f * g.coeffs()[static_cast<std::size_t>(i)];
  }
  return RationalPolynomial(std::move(q)).monic();
}

bool ComponentwiseIdeal::is_subalgebra(const RationalPolynomial& p_e, const RationalPolynomial& p_h,
                                       const RationalPolynomial& p_f) {
  // [h,e] = 2e and [h,f] = -2f land in p_e C[t], p_f C[t] automatically.
  return p_h.divides(p_e * p_f);
}

ComponentwiseIdeal::ComponentwiseIdeal(RationalPolynomial p_e, RationalPolynomial p_h, RationalPolynomial p_f)
    : p_e_(std::move(p_e)), p_h_(std::move(p_h)), p_f_(std::move(p_f)) {
  if (!p_e_.is_monic() || !p_h_.is_monic() || !p_f_.is_monic()) {
    throw std::invalid_argument("ideal generators must be monic polynomials");
  }
  if (!is_subalgebra(p_e_, p_h_, p_f_)) {
    throw std::invalid_argument("not a Lie subalgebra: p_h = " + p_h_.to_string() + " does not divide p_e*p_f = " +
                                (p_e_ * p_f_).to_string());
  }
}

ComponentwiseIdeal ComponentwiseIdeal::b_ideal(int M) {
  return {RationalPolynomial::t_power(M), RationalPolynomial::t_power(M), RationalPolynomial::t_power(M)};
}

ComponentwiseIdeal ComponentwiseIdeal::highest_type() {
  return {RationalPolynomial::one(), RationalPolynomial::t_power(1), RationalPolynomial::t_power(1)};
}

ComponentwiseIdeal ComponentwiseIdeal::lowest_type() {
  return {RationalPolynomial::t_power(1), RationalPolynomial::t_power(1), RationalPolynomial::one()};
}

ComponentwiseIdeal componentwise_ideal_fuse(std::span<const ComponentwiseIdeal> ideals,
                                            std::span<const Rational> points) {
  if (ideals.size() != points.size()) {
    throw std::invalid_argument("ideal fusion needs one point per ideal (" + std::to_string(ideals.size()) +
                                " ideals, " + std::to_string(points.size()) + " points)");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("ideal fusion: coincident points " + format_rational(points[i]));
  RationalPolynomial pe = RationalPolynomial::one(), ph = pe, pf = pe;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    pe = lcm(pe, ideals[i].p_e().shifted(points[i]));
    ph = lcm(ph, ideals[i].p_h().shifted(points[i]));
    pf = lcm(pf, ideals[i].p_f().shifted(points[i]));
  }
  return {std::move(pe), std::move(ph), std::move(pf)};
}

ComponentwiseIdeal top_of_ideal(const ComponentwiseIdeal& ideal) {
  return {ideal.p_e().leading_monomial(), ideal.p_h().leading_monomial(), ideal.p_f().leading_monomial()};
}

}  // namespace fusionq
