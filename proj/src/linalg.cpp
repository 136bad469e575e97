#include "fusionq/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace fusionq {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

LinearMap LinearMap::identity(std::size_t dim) {
  LinearMap id(dim);
  for (std::size_t i = 0; i < dim; ++i) id.add(i, i, 1);
  return id;
}

void LinearMap::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= dim() || col >= dim()) throw std::out_of_range("LinearMap::add: index out of range");
  if (sgn(value) == 0) return;
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (sgn(it->second) == 0) c.erase(it);
  } else {
    c.insert(it, {row, value});
  }
}

Rational LinearMap::entry(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : columns_.at(col))
    if (r == row) return v;
  return 0;
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
  Vector y = zero_vector(dim());
  Rational t;
  for (std::size_t c = 0; c < dim(); ++c) {
    if (sgn(x[c]) == 0) continue;
    for (const auto& [r, v] : columns_[c]) {
      t = v * x[c];
      y[r] += t;
    }
  }
  return y;
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
  if (rhs.dim() != dim()) throw std::invalid_argument("LinearMap::operator*: dimension mismatch");
  LinearMap out(dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [mid, v] : rhs.columns_[c])
      for (const auto& [r, w] : columns_[mid]) acc[r] += w * v;
    for (auto& [r, v] : acc)
      if (sgn(v) != 0) out.columns_[c].emplace_back(r, v);
  }
  return out;
}

LinearMap LinearMap::plus_scaled(const LinearMap& other, const Rational& scale) const {
  if (other.dim() != dim()) throw std::invalid_argument("LinearMap::plus_scaled: dimension mismatch");
  LinearMap out = *this;
  if (sgn(scale) == 0) return out;
  for (std::size_t c = 0; c < dim(); ++c)
    for (const auto& [r, v] : other.columns_[c]) out.add(r, c, scale * v);
  return out;
}

LinearMap LinearMap::commutator(const LinearMap& other) const {
  return (*this * other).plus_scaled(other * *this, -1);
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (a.dim() != b.dim()) return false;
  return a.plus_scaled(b, -1).columns_ == std::vector<std::vector<std::pair<std::size_t, Rational>>>(a.dim());
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), row_of_pivot_(ambient, npos) {}

void Subspace::reduce(Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  Rational t;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(v[c]) == 0) continue;
    const std::size_t r = row_of_pivot_[c];
    if (r == npos) continue;
    const Rational factor = v[c];
    const Vector& row = rows_[r];
    for (std::size_t j = c; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = factor * row[j];
      v[j] -= t;
    }
  }
}

bool Subspace::contains(Vector v) const {
  reduce(v);
  return is_zero(v);
}

bool Subspace::insert(Vector v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const Rational lead = *it;
  for (auto& x : v)
    if (sgn(x) != 0) x /= lead;
  row_of_pivot_[pivot] = rows_.size();
  pivot_of_row_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

Vector Subspace::coordinates(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::coordinates: dimension mismatch");
  Vector coords = zero_vector(rows_.size());
  Rational t;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(v[c]) == 0) continue;
    const std::size_t r = row_of_pivot_[c];
    if (r == npos) throw std::domain_error("Subspace::coordinates: vector not in subspace");
    const Rational factor = v[c];
    coords[r] = factor;
    const Vector& row = rows_[r];
    for (std::size_t j = c; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = factor * row[j];
      v[j] -= t;
    }
  }
  return coords;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != rows_.size()) throw std::invalid_argument("Subspace::combine: dimension mismatch");
  Vector out = zero_vector(ambient_);
  Rational t;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(coords[r]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(rows_[r][j]) == 0) continue;
      t = coords[r] * rows_[r][j];
      out[j] += t;
    }
  }
  return out;
}

std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s.dim();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols) {
  // Reduced row echelon form of the constraint matrix.
  std::vector<Vector> m;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("nullspace: row length mismatch");
    if (!is_zero(r)) m.push_back(r);
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < m.size(); ++c) {
    std::size_t p = next;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[next]);
    const Rational lead = m[next][c];
    for (auto& x : m[next]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == next || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[next][j];
    }
    pivots.push_back(c);
    ++next;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(cols);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace fusionq
