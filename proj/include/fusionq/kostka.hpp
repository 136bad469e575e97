#pragma once

/// @file kostka.hpp
/// @brief Level-restricted and unrestricted sl2 Kostka polynomials, their
/// fermionic and alternating-sum forms, and q-supernomials.
///
/// Multiplicity vectors m = (m_1, ..., m_k) count tensor factors pi_i. With
/// |m| = sum i*m_i and 2||m|| = sum_{i,j} min(i,j) m_i m_j - |m|, the
/// polynomial K^{(k)}_{l,m}(q) is the graded multiplicity of pi_l in the
/// level-k fusion product of the factors; K_{l,m}(q) is its k -> infinity
/// limit.

#include "fusionq/qseries.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fusionq {

/// Level, weight and multiplicity vector of a fermionic sum.
struct FermionicInput {
  int level = 1;
  int weight = 0;
  std::vector<int> m;

  /// |m| = sum_i i * m_i.
  std::int64_t size() const;
  /// ||m||; throws std::logic_error if the defining sum is odd.
  std::int64_t norm() const;
};

std::int64_t multiplicity_size(std::span<const int> m);
std::int64_t multiplicity_norm(std::span<const int> m);

/// A_{ab} = min(a,b) and v_a = max(a - k + l, 0), indices shifted to 0-based.
struct FermionicConstants {
  std::vector<std::vector<std::int64_t>> A;
  std::vector<std::int64_t> v;

  static FermionicConstants make(int level, int weight);
};

/// Fermionic sum for K^{(k)}_{l,m}(q). Throws std::invalid_argument unless
/// 0 <= l <= k and m has length k. Zero when |m| - l is odd or negative.
QPoly restricted_kostka(int level, int weight, std::span<const int> m);
QPoly restricted_kostka(const FermionicInput& in);

/// K_{l,m}(q), computed as the restricted sum at a level large enough
/// that it has stabilized.
QPoly unrestricted_kostka(int weight, std::span<const int> m);

/// Alternating sum of unrestricted Kostka polynomials with the affine
/// Weyl group shifts (k+2)i^2 +- (l+1)i.
QPoly alternating_sum(int level, int weight, std::span<const int> m);

/// S_{l,m}(q) = sum of K_{l',m}(q) over l' >= l, l' = l mod 2.
QPoly supernomial(int weight, std::span<const int> m);

/// True iff the fermionic and alternating-sum forms agree exactly.
bool fermionic_equals_alternating(int level, int weight, std::span<const int> m);

/// m extended with zeros to length n (n >= m.size()).
std::vector<int> pad_multiplicities(std::span<const int> m, std::size_t n);

/// The level at which unrestricted_kostka evaluates the restricted sum.
int stable_level(int weight, std::span<const int> m);

}  // namespace fusionq
