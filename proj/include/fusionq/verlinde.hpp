#pragma once

/// @file verlinde.hpp
/// @brief The sl2 Verlinde algebra at level k: classes [0..k], products, and
/// fusion coefficients.

#include <cstdint>
#include <span>
#include <vector>

namespace fusionq {

/// Integer combination of the basis classes [0], ..., [k] of the level-k
/// Verlinde algebra.
struct VerlindeVector {
  int level = 0;
  std::vector<std::int64_t> coeffs;  // size level + 1

  static VerlindeVector zero(int level);
  /// The basis class [l]. Throws std::invalid_argument unless 0 <= l <= level.
  static VerlindeVector basis(int level, int l);

  std::int64_t operator[](int l) const { return coeffs.at(static_cast<std::size_t>(l)); }
  friend bool operator==(const VerlindeVector&, const VerlindeVector&) = default;
};

/// Highest weights in pi_l1 (x) pi_l2, each with multiplicity one.
std::vector<int> clebsch_gordan(int l1, int l2);

/// Result of moving a weight into the fundamental alcove by the shifted
/// affine Weyl action.
struct FoldedWeight {
  int weight = 0;
  int sign = 0;  // 0 when the weight lies on a wall and is annihilated
};

/// Folds an arbitrary weight l >= 0 into [0, k].
FoldedWeight fold_weight(int level, int l);

/// Product in the level-k Verlinde algebra. Throws on level mismatch.
VerlindeVector verlinde_product(int level, const VerlindeVector& a, const VerlindeVector& b);

/// [w_1] [w_2] ... [w_n], evaluated as a left fold of binary products.
/// The empty word gives [0].
VerlindeVector verlinde_word_product(int level, std::span<const int> word);

/// Coefficient of [l] in the product of the classes in word.
std::int64_t fusion_coefficient(int level, std::span<const int> word, int l);

/// Expands multiplicities (m_1, ..., m_k) into the word 1^{m_1} 2^{m_2} ... k^{m_k}.
std::vector<int> word_from_multiplicities(std::span<const int> m);

}  // namespace fusionq
