#pragma once

/// @file fusion.hpp
/// @brief Filtered tensor products of cyclic evaluation modules, fusion
/// products, and their coinvariant spaces, all over exact rationals.
///
/// For factors V_1, ..., V_N at distinct points z_i the element x (x) t^j of
/// sl2[t] acts on V_1 (x) ... (x) V_N as x[j] = sum_i z_i^j x^{(i)}. The
/// filtration F^0 <= F^1 <= ... is by the t-degree of U(sl2[t]) applied to
/// the tensor product of the cyclic vectors.

#include "fusionq/qseries.hpp"
#include "fusionq/sl2.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fusionq {

enum class Generator { e, f, h };

/// Ambient basis of the filtered space, ordered by filtration degree: the
/// rows of `basis` with degree <= d span F^d.
struct Filtration {
  std::size_t ambient = 0;
  Subspace basis;
  std::vector<int> degree_of_row;
  /// dims[d] = dim F^d
  std::vector<std::size_t> dims;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  /// Row index range [first, last) of the rows of degree d.
  std::pair<std::size_t, std::size_t> block(int d) const;
};

/// Table (degree, h-weight) -> dimension.
class GradedCharacter {
 public:
  void add(int degree, int weight, std::int64_t count);
  std::int64_t at(int degree, int weight) const;
  std::int64_t total() const;
  /// sum_d dim(degree d, weight w) q^d
  QPoly weight_series(int weight) const;
  /// sum over all weights
  QPoly degree_series() const;
  const std::map<std::pair<int, int>, std::int64_t>& table() const { return table_; }

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> table_;
};

/// The filtered tensor product of a list of cyclic factors, with the
/// operator data needed for coinvariants of both the filtered space and
/// its associated graded.
class FusionProduct {
 public:
  /// Throws std::invalid_argument on coincident points or a non-cyclic
  /// factor, and std::runtime_error when the filtration stalls below the
  /// full dimension past the degree safety bound.
  explicit FusionProduct(std::vector<CyclicModuleFactor> factors, std::optional<int> max_gen_degree = {});

  std::size_t dim() const { return ambient_; }
  const std::vector<CyclicModuleFactor>& factors() const { return factors_; }
  const Filtration& filtration() const { return filtration_; }
  const std::vector<int>& weights() const { return weights_; }

  /// x[j] on the tensor product.
  const LinearMap& mode(Generator x, int j) const;

  GradedCharacter character() const;
  /// Graded character of (V / W) with the filtration induced from V, where
  /// W = (h[0]+l)V + e[0]V + e[1]^{k-l+1}V.
  QPoly filtered_coinvariants(int level, int weight) const;
  /// The same quotient computed on the associated graded module.
  QPoly graded_coinvariants(int level, int weight) const;
  /// dim V / W.
  std::int64_t coinvariant_dimension(int level, int weight) const;

  /// Degree cap 2||m|| + |m| + 1 with m read off the factors' top weights.
  int degree_safety_bound() const;

 private:
  Subspace coinvariant_relations(int level, int weight) const;
  /// Block (degree d+j) coordinates of gr x[j] applied to row `row`.
  Vector graded_apply(const LinearMap& op, int shift, std::size_t row) const;

  std::vector<CyclicModuleFactor> factors_;
  std::size_t ambient_ = 1;
  std::vector<int> weights_;
  std::vector<std::vector<LinearMap>> local_;  // [factor][e,f,h]
  mutable std::map<std::pair<int, int>, LinearMap> modes_;
  Filtration filtration_;
};

Filtration build_filtration(std::vector<CyclicModuleFactor> factors, std::optional<int> max_gen_degree = {});
GradedCharacter fusion_character(std::vector<CyclicModuleFactor> factors);
QPoly filtered_coinvariant_character(std::vector<CyclicModuleFactor> factors, int level, int weight);
QPoly graded_coinvariant_character(std::vector<CyclicModuleFactor> factors, int level, int weight);
std::int64_t coinvariant_dimension(std::vector<CyclicModuleFactor> factors, int level, int weight);

/// Highest weights of the factors of V_m: m_k copies of k, ..., m_1 copies of 1.
std::vector<int> factor_weights(std::span<const int> m);

/// Irreducible factors with highest weight cyclic vectors at the given points.
std::vector<CyclicModuleFactor> irrep_factors(std::span<const int> highest_weights,
                                              std::span<const Rational> points);

/// True iff the fusion character and both coinvariant characters agree for
/// every point set.
bool z_independence_test(std::span<const int> highest_weights, int level, int weight,
                         std::span<const std::vector<Rational>> point_sets);

}  // namespace fusionq
