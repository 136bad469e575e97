#pragma once

/// @file gordon.hpp
/// @brief Functional model of the dual coinvariant space: symmetric
/// polynomials in s = (|m| - l)/2 variables cut out by diagonal degree
/// bounds and vanishing conditions.
///
/// The space consists of symmetric f(x_1, ..., x_s) with
///   (i)   deg_x f(x, ..., x, x_{a+1}, ..., x_s) <= M_a - a  (x repeated a times),
///         M_a = sum_i min(a, i) m_i, for a = 1..s;
///   (ii)  f(0, x_2, ..., x_s) = 0;
///   (iii) if s >= k-l+1 and f = (x_1 ... x_s) g, then
///         g(0, ..., 0, x_{k-l+2}, ..., x_s) = 0 (k-l+1 zeros).
/// Its character by total degree is the restricted Kostka polynomial.

#include "fusionq/linalg.hpp"
#include "fusionq/qseries.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace fusionq {

using Exponent = std::vector<int>;
/// Sparse multivariate polynomial over the rationals.
using MultiPoly = std::map<Exponent, Rational>;

struct DualSpaceProblem {
  int level = 1;
  int weight = 0;
  std::vector<int> m;
  int variables = 0;                  // s
  std::vector<std::int64_t> bounds;   // M_1, ..., M_s

  /// Throws std::invalid_argument on bad (k, l, m) or when |m| - l is odd
  /// or negative.
  static DualSpaceProblem make(int level, int weight, std::span<const int> m);
};

struct DualSpaceOptions {
  /// Impose condition (iii); without it the space models the unrestricted case.
  bool level_condition = true;
  /// Cost guard on the number of variables.
  int max_variables = 4;
};

struct DualSpaceSolution {
  DualSpaceProblem problem;
  /// Basis of the solution space, each element homogeneous.
  std::vector<MultiPoly> basis;
  std::vector<int> basis_degree;
  QPoly character;
};

/// Throws std::length_error when s exceeds options.max_variables.
DualSpaceSolution solve_dual_space(int level, int weight, std::span<const int> m, DualSpaceOptions options = {});
QPoly dual_space_character(int level, int weight, std::span<const int> m, DualSpaceOptions options = {});

/// f(x, ..., x, x_{a+1}, ..., x_s): exponent vectors of the result have
/// length s - a + 1, the first entry being the power of x.
MultiPoly diagonal_specialization(const MultiPoly& f, int a);

/// Every basis polynomial vanishes on the a-fold diagonal for all
/// k+1 <= a <= s. Vacuously true when s <= k.
bool diagonal_vanishing_check(std::span<const MultiPoly> basis, int level, int weight, std::span<const int> m);
bool diagonal_vanishing_check(const DualSpaceSolution& solution);

}  // namespace fusionq
