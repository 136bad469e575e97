#include "fusionq/qseries.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fusionq {

QPoly::QPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPoly::QPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::domain_error("QPoly::monomial: negative exponent");
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

BigInt QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly& QPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPoly QPoly::shifted(int n) const {
  if (n < 0) throw std::domain_error("QPoly::shifted: negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(n));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

BigInt QPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPoly QPoly::reversed(int D) const {
  if (degree() > D) {
    throw std::domain_error("QPoly::reversed: degree " + std::to_string(degree()) +
                            " exceeds reversal degree " + std::to_string(D));
  }
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(D) + 1);
  for (int e = 0; e <= degree(); ++e) v[static_cast<std::size_t>(D - e)] = coeffs_[static_cast<std::size_t>(e)];
  return QPoly(std::move(v));
}

bool QPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

bool QPoly::dominates(const QPoly& other) const { return (*this - other).nonnegative(); }

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= degree(); ++e) {
    BigInt c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << '-';
      c = abs(c);
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'q';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QPoly qbinom(int m, int n) {
  if (m < 0 || n < 0 || n > m) return {};
  // Pascal table, row r holds [r choose 0..r]; grown on demand, one per thread.
  thread_local std::vector<std::vector<QPoly>> rows;
  while (static_cast<int>(rows.size()) <= m) {
    const int r = static_cast<int>(rows.size());
    std::vector<QPoly> row(static_cast<std::size_t>(r) + 1);
    row[0] = QPoly{1};
    row[static_cast<std::size_t>(r)] = QPoly{1};
    for (int j = 1; j < r; ++j) {
      const auto& prev = rows[static_cast<std::size_t>(r - 1)];
      row[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)].shifted(j);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

QPoly vector_qbinom(std::span<const std::int64_t> top, std::span<const std::int64_t> bottom) {
  if (top.size() != bottom.size()) {
    throw std::invalid_argument("vector_qbinom: length mismatch (" + std::to_string(top.size()) +
                                " vs " + std::to_string(bottom.size()) + ")");
  }
  QPoly out{1};
  for (std::size_t i = 0; i < top.size(); ++i) {
    out *= qbinom(static_cast<int>(top[i]), static_cast<int>(bottom[i]));
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace fusionq
