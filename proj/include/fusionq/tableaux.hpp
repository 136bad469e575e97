#pragma once

/// @file tableaux.hpp
/// @brief Semistandard tableaux and the Lascoux-Schutzenberger charge,
/// used as an independent route to unrestricted Kostka polynomials.

#include "fusionq/qseries.hpp"

#include <span>
#include <string>
#include <vector>

namespace fusionq {

/// Semistandard tableau in English notation: rows[0] is the top (longest)
/// row. Letters are 1-based.
struct Tableau {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  /// content[j] = number of occurrences of letter j+1.
  std::vector<int> content() const;
  bool is_semistandard() const;
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// All semistandard tableaux of the given shape and content, in a fixed
/// order. Empty when the sizes differ.
std::vector<Tableau> enumerate_tableaux(std::span<const int> shape, std::span<const int> content);

/// Rows read left to right, bottom row first.
std::vector<int> reading_word(const Tableau& t);

/// Charge of a word whose content is a partition. Throws
/// std::invalid_argument otherwise.
int charge_of_word(std::span<const int> word);

/// Charge of the reading word of a semistandard tableau with partition
/// content. Throws std::invalid_argument on an invalid tableau.
int charge(const Tableau& t);

/// R(m) = (k^{m_k}, ..., 2^{m_2}, 1^{m_1}) as a partition.
std::vector<int> rectangle_content(std::span<const int> m);

/// Two-row shape ((|m|+l)/2, (|m|-l)/2) with trailing zero rows removed.
std::vector<int> two_row_shape(int weight, std::span<const int> m);

/// K_{l,m}(q) = q^{||m||} K_{lambda,R(m)}(1/q) with the Kostka-Foulkes
/// polynomial taken as the charge generating function. Zero when the
/// parity or range of l is inadmissible.
QPoly kostka_via_charge(int weight, std::span<const int> m);

}  // namespace fusionq
