#include "fusionq/kostka.hpp"

#include <algorithm>
#include <utility>
#include <stdexcept>
#include <string>

namespace fusionq {

std::int64_t multiplicity_size(std::span<const int> m) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("negative multiplicity m_" + std::to_string(i + 1));
    s += static_cast<std::int64_t>(i + 1) * m[i];
  }
  return s;
}

std::int64_t multiplicity_norm(std::span<const int> m) {
  std::int64_t twice = -multiplicity_size(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      twice += static_cast<std::int64_t>(std::min(i, j) + 1) * m[i] * m[j];
  if (twice % 2 != 0) throw std::logic_error("2||m|| is odd");
  return twice / 2;
}

std::int64_t FermionicInput::size() const { return multiplicity_size(m); }
std::int64_t FermionicInput::norm() const { return multiplicity_norm(m); }

FermionicConstants FermionicConstants::make(int level, int weight) {
  FermionicConstants c;
  const auto k = static_cast<std::size_t>(level);
  c.A.assign(k, std::vector<std::int64_t>(k));
  c.v.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) c.A[a][b] = static_cast<std::int64_t>(std::min(a, b) + 1);
    c.v[a] = std::max<std::int64_t>(static_cast<std::int64_t>(a + 1) - level + weight, 0);
  }
  return c;
}

namespace {

void check_restricted(int level, int weight, std::span<const int> m) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (weight < 0 || weight > level) {
    throw std::invalid_argument("weight " + std::to_string(weight) + " outside [0, " + std::to_string(level) + "]");
  }
  if (m.size() != static_cast<std::size_t>(level)) {
    throw std::invalid_argument("multiplicity vector has length " + std::to_string(m.size()) + ", expected " +
                                std::to_string(level));
  }
}

// Visits every s in Z_{>=0}^k with sum_i (i+1) s_i == target.
template <class Visit>
void for_each_configuration(std::size_t k, std::int64_t target, Visit&& visit) {
  std::vector<std::int64_t> s(k, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i == k) {
      if (remaining == 0) visit(std::as_const(s));
      return;
    }
    const auto weight = static_cast<std::int64_t>(i + 1);
    for (std::int64_t si = 0; si * weight <= remaining; ++si) {
      s[i] = si;
      self(self, i + 1, remaining - si * weight);
    }
    s[i] = 0;
  };
  rec(rec, 0, target);
}

}  // namespace

QPoly restricted_kostka(int level, int weight, std::span<const int> m) {
  check_restricted(level, weight, m);
  const std::int64_t excess = multiplicity_size(m) - weight;
  if (excess < 0 || excess % 2 != 0) return {};

  const auto k = static_cast<std::size_t>(level);
  const auto c = FermionicConstants::make(level, weight);
  QPoly sum;
  std::vector<std::int64_t> top(k);
  for_each_configuration(k, excess / 2, [&](const std::vector<std::int64_t>& s) {
    std::int64_t exponent = 0;
    for (std::size_t a = 0; a < k; ++a) {
      std::int64_t as = 0;
      std::int64_t am = 0;
      for (std::size_t b = 0; b < k; ++b) {
        as += c.A[a][b] * s[b];
        am += c.A[a][b] * (m[b] - 2 * s[b]);
      }
      exponent += s[a] * as + c.v[a] * s[a];
      top[a] = am - c.v[a] + s[a];
    }
    QPoly term = vector_qbinom(top, s);
    if (!term.is_zero()) sum += term.shifted(static_cast<int>(exponent));
  });
  return sum;
}

QPoly restricted_kostka(const FermionicInput& in) { return restricted_kostka(in.level, in.weight, in.m); }

std::vector<int> pad_multiplicities(std::span<const int> m, std::size_t n) {
  if (n < m.size()) throw std::invalid_argument("pad_multiplicities: target shorter than input");
  std::vector<int> out(m.begin(), m.end());
  out.resize(n, 0);
  return out;
}

int stable_level(int weight, std::span<const int> m) {
  const auto size = multiplicity_size(m);
  return static_cast<int>(std::max<std::int64_t>({1, weight, size, static_cast<std::int64_t>(m.size())}));
}

QPoly unrestricted_kostka(int weight, std::span<const int> m) {
  if (weight < 0) throw std::invalid_argument("weight must be >= 0");
  const int K = stable_level(weight, m);
  QPoly out = restricted_kostka(K, weight, pad_multiplicities(m, static_cast<std::size_t>(K)));
  if (out.degree() > multiplicity_norm(m)) {
    throw std::logic_error("degree bound violated: deg K_{" + std::to_string(weight) + ",m} = " +
                           std::to_string(out.degree()) + " > ||m|| = " + std::to_string(multiplicity_norm(m)));
  }
  return out;
}

QPoly alternating_sum(int level, int weight, std::span<const int> m) {
  check_restricted(level, weight, m);
  const std::int64_t size = multiplicity_size(m);
  const int h = level + 2;
  QPoly sum;
  for (int i = 0;; ++i) {
    const std::int64_t lp = 2LL * h * i + weight;
    if (lp > size) break;
    sum += unrestricted_kostka(static_cast<int>(lp), m).shifted(h * i * i + (weight + 1) * i);
  }
  for (int i = 1;; ++i) {
    const std::int64_t lm = 2LL * h * i - weight - 2;
    if (lm > size) break;
    sum -= unrestricted_kostka(static_cast<int>(lm), m).shifted(h * i * i - (weight + 1) * i);
  }
  return sum;
}

QPoly supernomial(int weight, std::span<const int> m) {
  if (weight < 0) throw std::invalid_argument("weight must be >= 0");
  const std::int64_t size = multiplicity_size(m);
  QPoly sum;
  for (std::int64_t lp = weight; lp <= size; lp += 2) sum += unrestricted_kostka(static_cast<int>(lp), m);
  return sum;
}

bool fermionic_equals_alternating(int level, int weight, std::span<const int> m) {
  return restricted_kostka(level, weight, m) == alternating_sum(level, weight, m);
}

}  // namespace fusionq
