#pragma once

// Reference implementations used only by the tests. Each is computed by a
// route that shares no code with the library function it checks.

#include "fusionq/qseries.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace oracle {

using fusionq::BigInt;
using fusionq::QPoly;

// a / b in Z[q] for b with constant term 1; throws if the division is inexact.
inline QPoly exact_divide(const QPoly& a, const QPoly& b) {
  if (b.coeff(0) != 1) throw std::logic_error("divisor needs constant term 1");
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  if (r.empty()) return {};
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) throw std::logic_error("inexact division");
  std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1);
  for (int i = 0; i <= dq; ++i) {
    q[i] = r[i];
    for (int j = 0; j <= db; ++j) r[i + j] -= q[i] * b.coeff(j);
  }
  for (const auto& x : r)
    if (x != 0) throw std::logic_error("inexact division");
  return QPoly(std::move(q));
}

inline QPoly one_minus_q_power(int n) { return QPoly::constant(1) - QPoly::monomial(1, n); }

// prod_{i<n} (1 - q^{m-i}) / prod_{i<=n} (1 - q^i).
inline QPoly gaussian(int m, int n) {
  if (n < 0 || m < 0 || n > m) return {};
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (int i = 0; i < n; ++i) num *= one_minus_q_power(m - i);
  for (int i = 1; i <= n; ++i) den *= one_minus_q_power(i);
  return exact_divide(num, den);
}

// Coefficient of [l] in [l1][l2] at level k by the closed window rule.
inline int verlinde_window(int k, int l1, int l2, int l) {
  const bool in = std::abs(l1 - l2) <= l && l <= l1 + l2 && l <= 2 * k - l1 - l2 && (l1 + l2 - l) % 2 == 0;
  return in ? 1 : 0;
}

// Unrestricted K_{l,(N)}: a difference of adjacent Gaussian binomials.
inline QPoly kostka_all_ones(int l, int N) {
  if (l > N || (N - l) % 2 != 0) return {};
  const int r = (N - l) / 2;
  return gaussian(N, r) - gaussian(N, r - 1);
}

}  // namespace oracle
