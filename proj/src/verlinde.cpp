#include "fusionq/verlinde.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fusionq {

namespace {

void check_weight(int level, int l) {
  if (l < 0 || l > level) {
    throw std::invalid_argument("weight " + std::to_string(l) + " outside [0, " + std::to_string(level) + "]");
  }
}

}  // namespace

VerlindeVector VerlindeVector::zero(int level) {
  if (level < 0) throw std::invalid_argument("Verlinde level must be >= 0");
  return {level, std::vector<std::int64_t>(static_cast<std::size_t>(level) + 1, 0)};
}

VerlindeVector VerlindeVector::basis(int level, int l) {
  check_weight(level, l);
  VerlindeVector v = zero(level);
  v.coeffs[static_cast<std::size_t>(l)] = 1;
  return v;
}

std::vector<int> clebsch_gordan(int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("clebsch_gordan: negative weight");
  std::vector<int> out;
  for (int l = std::abs(l1 - l2); l <= l1 + l2; l += 2) out.push_back(l);
  return out;
}

FoldedWeight fold_weight(int level, int l) {
  if (level < 0 || l < 0) throw std::invalid_argument("fold_weight: negative input");
  // Work with the shifted weight p = l + 1 modulo the period 2(k+2).
  // Walls sit at p = 0 and p = k+2; the reflection p -> -p flips the sign.
  const int h = level + 2;
  int p = (l + 1) % (2 * h);
  if (p == 0 || p == h) return {0, 0};
  if (p < h) return {p - 1, 1};
  return {2 * h - p - 1, -1};
}

VerlindeVector verlinde_product(int level, const VerlindeVector& a, const VerlindeVector& b) {
  if (a.level != level || b.level != level) {
    throw std::invalid_argument("verlinde_product: level mismatch (" + std::to_string(a.level) + ", " +
                                std::to_string(b.level) + " at level " + std::to_string(level) + ")");
  }
  VerlindeVector out = VerlindeVector::zero(level);
  for (int i = 0; i <= level; ++i) {
    const auto ai = a.coeffs[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j <= level; ++j) {
      const auto bj = b.coeffs[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      for (int c : clebsch_gordan(i, j)) {
        const FoldedWeight f = fold_weight(level, c);
        if (f.sign != 0) out.coeffs[static_cast<std::size_t>(f.weight)] += f.sign * ai * bj;
      }
    }
  }
  return out;
}

VerlindeVector verlinde_word_product(int level, std::span<const int> word) {
  VerlindeVector acc = VerlindeVector::basis(level, 0);
  for (int w : word) acc = verlinde_product(level, acc, VerlindeVector::basis(level, w));
  return acc;
}

std::int64_t fusion_coefficient(int level, std::span<const int> word, int l) {
  check_weight(level, l);
  return verlinde_word_product(level, word)[l];
}

std::vector<int> word_from_multiplicities(std::span<const int> m) {
  std::vector<int> word;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("negative multiplicity");
    word.insert(word.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i) + 1);
  }
  return word;
}

}  // namespace fusionq
