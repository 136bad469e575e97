#pragma once

/// @file sl2.hpp
/// @brief Finite-dimensional sl2 modules as explicit rational matrices, and
/// cyclic evaluation-module factors built from them.

#include "fusionq/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusionq {

/// An sl2 module on Q^dim in a weight basis: h is diagonal with eigenvalue
/// weights[i] on basis vector i.
struct Sl2Module {
  std::size_t dim = 0;
  LinearMap e, f, h;
  std::vector<int> weights;

  /// pi_l with basis u_0..u_l: e u_j = j(l-j+1) u_{j-1}, f u_j = u_{j+1},
  /// h u_j = (l-2j) u_j.
  static Sl2Module irrep(int l);
  static Sl2Module direct_sum(const std::vector<Sl2Module>& parts);
  /// pi_0 + pi_1 + ... + pi_m.
  static Sl2Module truncated_sum(int m);
  /// sum_{l<=k} pi_l^* (x) pi_l with sl2 acting on the right factor only,
  /// i.e. l+1 copies of each pi_l.
  static Sl2Module matrix_module(int k);

  /// [h,e] = 2e, [h,f] = -2f and [e,f] = h, checked exactly.
  bool brackets_hold() const;
  int max_weight() const;
};

/// A module with a cyclic vector, placed at an evaluation point z.
struct CyclicModuleFactor {
  Sl2Module module;
  Vector cyclic_vector;
  Rational point;
  std::string label;

  /// pi_l with its highest weight vector.
  static CyclicModuleFactor irrep(int l, const Rational& z);
  /// pi_0 + ... + pi_m with the sum of highest weight vectors.
  static CyclicModuleFactor truncated_sum(int m, const Rational& z);
  /// sum_{l<=k} pi_l^* (x) pi_l with the sum of the canonical vectors.
  static CyclicModuleFactor matrix_module(int k, const Rational& z);

  /// Dimension of U(sl2) applied to the cyclic vector.
  std::size_t generated_dimension() const;
  bool is_cyclic() const { return generated_dimension() == module.dim; }
};

/// Deterministic pool of small-height rational points.
const std::vector<Rational>& point_pool();

/// count pairwise-distinct points drawn from the pool by a seeded shuffle.
/// Throws std::invalid_argument when count exceeds the pool size.
std::vector<Rational> draw_points(std::size_t count, std::uint64_t seed);

/// Parses a rational such as "3", "-1/2". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

}  // namespace fusionq
