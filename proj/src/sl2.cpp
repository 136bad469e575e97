#include "fusionq/sl2.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace fusionq {

Sl2Module Sl2Module::irrep(int l) {
  if (l < 0) throw std::invalid_argument("irrep: negative highest weight");
  const auto n = static_cast<std::size_t>(l) + 1;
  Sl2Module m{n, LinearMap(n), LinearMap(n), LinearMap(n), {}};
  for (int j = 0; j <= l; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    m.weights.push_back(l - 2 * j);
    m.h.add(uj, uj, l - 2 * j);
    if (j > 0) m.e.add(uj - 1, uj, j * (l - j + 1));
    if (j < l) m.f.add(uj + 1, uj, 1);
  }
  return m;
}

Sl2Module Sl2Module::direct_sum(const std::vector<Sl2Module>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim;
  Sl2Module out{n, LinearMap(n), LinearMap(n), LinearMap(n), {}};
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t c = 0; c < p.dim; ++c)
      for (std::size_t r = 0; r < p.dim; ++r) {
        if (auto v = p.e.entry(r, c); sgn(v) != 0) out.e.add(offset + r, offset + c, v);
        if (auto v = p.f.entry(r, c); sgn(v) != 0) out.f.add(offset + r, offset + c, v);
        if (auto v = p.h.entry(r, c); sgn(v) != 0) out.h.add(offset + r, offset + c, v);
      }
    out.weights.insert(out.weights.end(), p.weights.begin(), p.weights.end());
    offset += p.dim;
  }
  return out;
}

Sl2Module Sl2Module::truncated_sum(int m) {
  if (m < 0) throw std::invalid_argument("truncated_sum: negative bound");
  std::vector<Sl2Module> parts;
  for (int l = 0; l <= m; ++l) parts.push_back(irrep(l));
  return direct_sum(parts);
}

Sl2Module Sl2Module::matrix_module(int k) {
  if (k < 0) throw std::invalid_argument("matrix_module: negative level");
  std::vector<Sl2Module> parts;
  for (int l = 0; l <= k; ++l)
    for (int copy = 0; copy <= l; ++copy) parts.push_back(irrep(l));
  return direct_sum(parts);
}

bool Sl2Module::brackets_hold() const {
  const LinearMap zero(dim);
  return h.commutator(e) == zero.plus_scaled(e, 2) && h.commutator(f) == zero.plus_scaled(f, -2) &&
         e.commutator(f) == h;
}

int Sl2Module::max_weight() const {
  return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
}

CyclicModuleFactor CyclicModuleFactor::irrep(int l, const Rational& z) {
  auto m = Sl2Module::irrep(l);
  Vector v = unit_vector(m.dim, 0);
  return {std::move(m), std::move(v), z, "pi_" + std::to_string(l)};
}

CyclicModuleFactor CyclicModuleFactor::truncated_sum(int m, const Rational& z) {
  auto mod = Sl2Module::truncated_sum(m);
  Vector v = zero_vector(mod.dim);
  std::size_t offset = 0;
  for (int l = 0; l <= m; ++l) {
    v[offset] = 1;
    offset += static_cast<std::size_t>(l) + 1;
  }
  return {std::move(mod), std::move(v), z, "sum_pi_0.." + std::to_string(m)};
}

CyclicModuleFactor CyclicModuleFactor::matrix_module(int k, const Rational& z) {
  auto mod = Sl2Module::matrix_module(k);
  Vector v = zero_vector(mod.dim);
  std::size_t offset = 0;
  for (int l = 0; l <= k; ++l)
    for (int copy = 0; copy <= l; ++copy) {
      v[offset + static_cast<std::size_t>(copy)] = 1;
      offset += static_cast<std::size_t>(l) + 1;
    }
  return {std::move(mod), std::move(v), z, "end_pi_0.." + std::to_string(k)};
}

std::size_t CyclicModuleFactor::generated_dimension() const {
  Subspace s(module.dim);
  std::deque<Vector> queue;
  if (s.insert(cyclic_vector)) queue.push_back(cyclic_vector);
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const LinearMap* op : {&module.e, &module.f, &module.h}) {
      Vector w = op->apply(v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s.dim();
}

const std::vector<Rational>& point_pool() {
  static const std::vector<Rational> pool = [] {
    std::vector<Rational> p;
    for (const char* s : {"0", "1", "-1", "2", "5", "-3", "7", "1/2", "-2", "3", "1/3", "-1/2"})
      p.push_back(parse_rational(s));
    return p;
  }();
  return pool;
}

std::vector<Rational> draw_points(std::size_t count, std::uint64_t seed) {
  std::vector<Rational> pool = point_pool();
  if (count > pool.size()) {
    throw std::invalid_argument("draw_points: requested " + std::to_string(count) + " points, pool has " +
                                std::to_string(pool.size()));
  }
  // Fisher-Yates with explicit modulo so the order is identical across
  // standard library implementations.
  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

}  // namespace fusionq
