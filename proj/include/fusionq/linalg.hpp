#pragma once

/// @file linalg.hpp
/// @brief Exact linear algebra over the rationals: sparse linear maps and
/// subspaces kept in echelon form.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace fusionq {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Square sparse matrix stored by columns.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t dim) : columns_(dim) {}

  static LinearMap identity(std::size_t dim);

  std::size_t dim() const { return columns_.size(); }
  /// Adds value to entry (row, col).
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational entry(std::size_t row, std::size_t col) const;
  /// Nonzero entries (row, value) of column col, sorted by row.
  const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t col) const { return columns_.at(col); }

  Vector apply(const Vector& x) const;
  LinearMap operator*(const LinearMap& rhs) const;
  /// this + scale * other
  LinearMap plus_scaled(const LinearMap& other, const Rational& scale) const;
  /// this*other - other*this
  LinearMap commutator(const LinearMap& other) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
};

/// Subspace of Q^n given by a basis in echelon form. Rows are kept in
/// insertion order; each row is normalized so its first nonzero entry
/// (its pivot) is 1 and it vanishes at the pivots of all earlier rows.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }

  /// Reduces v modulo the subspace in place.
  void reduce(Vector& v) const;
  bool contains(Vector v) const;
  /// Adds v to the spanning set; returns true when the dimension grew.
  bool insert(Vector v);
  /// Coefficients of v in the row basis (insertion order). Throws
  /// std::domain_error when v is not in the subspace.
  Vector coordinates(Vector v) const;
  /// Linear combination sum_i c[i] * row(i).
  Vector combine(const Vector& coords) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  // pivot column -> row index, or npos
  std::vector<std::size_t> row_of_pivot_;
};

/// Rank of a list of vectors.
std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient);

/// Basis of {x : r . x = 0 for all rows r}, one vector per free column,
/// in reduced form.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols);

}  // namespace fusionq
