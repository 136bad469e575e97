#include "fusionq/fusion.hpp"

#include "fusionq/kostka.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fusionq {

std::pair<std::size_t, std::size_t> Filtration::block(int d) const {
  if (d < 0 || d > top_degree()) return {0, 0};
  const std::size_t last = dims[static_cast<std::size_t>(d)];
  const std::size_t first = d == 0 ? 0 : dims[static_cast<std::size_t>(d - 1)];
  return {first, last};
}

void GradedCharacter::add(int degree, int weight, std::int64_t count) {
  if (count == 0) return;
  auto& slot = table_[{degree, weight}];
  slot += count;
  if (slot == 0) table_.erase({degree, weight});
}

std::int64_t GradedCharacter::at(int degree, int weight) const {
  auto it = table_.find({degree, weight});
  return it == table_.end() ? 0 : it->second;
}

std::int64_t GradedCharacter::total() const {
  std::int64_t t = 0;
  for (const auto& [key, n] : table_) t += n;
  return t;
}

QPoly GradedCharacter::weight_series(int weight) const {
  QPoly p;
  for (const auto& [key, n] : table_)
    if (key.second == weight) p += QPoly::monomial(n, key.first);
  return p;
}

QPoly GradedCharacter::degree_series() const {
  QPoly p;
  for (const auto& [key, n] : table_) p += QPoly::monomial(n, key.first);
  return p;
}

namespace {

std::size_t generator_index(Generator x) { return static_cast<std::size_t>(x); }

Rational power(const Rational& z, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= z;
  return r;
}

}  // namespace

FusionProduct::FusionProduct(std::vector<CyclicModuleFactor> factors, std::optional<int> max_gen_degree)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (factors_[i].point == factors_[j].point) {
        throw std::invalid_argument("coincident evaluation points: z_" + std::to_string(i + 1) + " = z_" +
                                    std::to_string(j + 1) + " = " + format_rational(factors_[i].point));
      }
    if (factors_[i].cyclic_vector.size() != factors_[i].module.dim || !factors_[i].is_cyclic()) {
      throw std::invalid_argument("factor " + std::to_string(i + 1) + " (" + factors_[i].label +
                                  "): vector does not generate the module");
    }
  }
  if (max_gen_degree && *max_gen_degree < 1) throw std::invalid_argument("max_gen_degree must be >= 1");

  for (const auto& f : factors_) ambient_ *= f.module.dim;
  weights_.assign(ambient_, 0);
  Vector cyclic{Rational(1)};
  std::size_t stride = ambient_;
  for (const auto& f : factors_) {
    const std::size_t d = f.module.dim;
    stride /= d;
    std::vector<LinearMap> ops(3, LinearMap(ambient_));
    const LinearMap* local[3] = {&f.module.e, &f.module.f, &f.module.h};
    for (std::size_t idx = 0; idx < ambient_; ++idx) {
      const std::size_t c = (idx / stride) % d;
      weights_[idx] += f.module.weights[c];
      for (std::size_t g = 0; g < 3; ++g)
        for (const auto& [r, v] : local[g]->column(c)) ops[g].add(idx + r * stride - c * stride, idx, v);
    }
    local_.push_back(std::move(ops));

    Vector next;
    next.reserve(cyclic.size() * d);
    for (const auto& a : cyclic)
      for (const auto& b : f.cyclic_vector) next.push_back(a * b);
    cyclic = std::move(next);
  }

  // Filtration by t-degree. Only vectors new in degree d - j need x[j]
  // applied, since x[j] F^{d-j-1} lies in F^{d-1} already.
  Filtration& F = filtration_;
  F.ambient = ambient_;
  F.basis = Subspace(ambient_);
  auto close_under_g = [&](std::deque<std::size_t> queue, int degree) {
    while (!queue.empty()) {
      const Vector v = F.basis.row(queue.front());
      queue.pop_front();
      for (Generator x : {Generator::e, Generator::f, Generator::h}) {
        if (F.basis.insert(mode(x, 0).apply(v))) {
          F.degree_of_row.push_back(degree);
          queue.push_back(F.basis.dim() - 1);
        }
      }
    }
  };

  F.basis.insert(cyclic);
  F.degree_of_row.push_back(0);
  close_under_g({0}, 0);
  F.dims.push_back(F.basis.dim());

  const int bound = degree_safety_bound();
  for (int d = 1; F.basis.dim() < ambient_; ++d) {
    if (d > bound) {
      std::ostringstream os;
      os << "filtration stalled: dims";
      for (auto n : F.dims) os << ' ' << n;
      os << " of " << ambient_ << " after degree bound " << bound;
      throw std::runtime_error(os.str());
    }
    std::deque<std::size_t> fresh;
    const int jmax = max_gen_degree ? std::min(d, *max_gen_degree) : d;
    for (int j = 1; j <= jmax; ++j) {
      const auto [first, last] = F.block(d - j);
      for (std::size_t r = first; r < last; ++r) {
        const Vector v = F.basis.row(r);
        for (Generator x : {Generator::e, Generator::f, Generator::h}) {
          if (F.basis.insert(mode(x, j).apply(v))) {
            F.degree_of_row.push_back(d);
            fresh.push_back(F.basis.dim() - 1);
          }
        }
      }
    }
    close_under_g(std::move(fresh), d);
    F.dims.push_back(F.basis.dim());
  }
}

int FusionProduct::degree_safety_bound() const {
  std::vector<int> m;
  for (const auto& f : factors_) {
    const int w = f.module.max_weight();
    if (w < 1) continue;
    if (static_cast<std::size_t>(w) > m.size()) m.resize(static_cast<std::size_t>(w), 0);
    ++m[static_cast<std::size_t>(w - 1)];
  }
  return static_cast<int>(2 * multiplicity_norm(m) + multiplicity_size(m) + 1);
}

const LinearMap& FusionProduct::mode(Generator x, int j) const {
  const std::pair<int, int> key{static_cast<int>(x), j};
  auto it = modes_.find(key);
  if (it != modes_.end()) return it->second;
  LinearMap op(ambient_);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    op = op.plus_scaled(local_[i][generator_index(x)], power(factors_[i].point, j));
  }
  return modes_.emplace(key, std::move(op)).first->second;
}

GradedCharacter FusionProduct::character() const {
  const Filtration& F = filtration_;
  std::map<int, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < ambient_; ++i) by_weight[weights_[i]].push_back(i);

  GradedCharacter ch;
  for (const auto& [w, idx] : by_weight) {
    // F^d is h-stable, so its weight-w part is its projection to V_w.
    Subspace proj(idx.size());
    std::size_t prev = 0;
    for (int d = 0; d <= F.top_degree(); ++d) {
      const auto [first, last] = F.block(d);
      for (std::size_t r = first; r < last; ++r) {
        Vector p = zero_vector(idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a) p[a] = F.basis.row(r)[idx[a]];
        proj.insert(std::move(p));
      }
      ch.add(d, w, static_cast<std::int64_t>(proj.dim() - prev));
      prev = proj.dim();
    }
  }
  return ch;
}

Subspace FusionProduct::coinvariant_relations(int level, int weight) const {
  if (level < 0 || weight < 0 || weight > level) {
    throw std::invalid_argument("coinvariants need 0 <= l <= k (got k=" + std::to_string(level) +
                                ", l=" + std::to_string(weight) + ")");
  }
  const int power_count = level - weight + 1;
  const LinearMap& h0 = mode(Generator::h, 0);
  const LinearMap& e0 = mode(Generator::e, 0);
  const LinearMap& e1 = mode(Generator::e, 1);
  Subspace W(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    const Vector u = unit_vector(ambient_, i);
    Vector hv = h0.apply(u);
    hv[i] += weight;
    W.insert(std::move(hv));
    W.insert(e0.apply(u));
    Vector y = u;
    for (int t = 0; t < power_count; ++t) y = e1.apply(y);
    W.insert(std::move(y));
  }
  return W;
}

std::int64_t FusionProduct::coinvariant_dimension(int level, int weight) const {
  return static_cast<std::int64_t>(ambient_ - coinvariant_relations(level, weight).dim());
}

QPoly FusionProduct::filtered_coinvariants(int level, int weight) const {
  Subspace sum = coinvariant_relations(level, weight);
  std::vector<BigInt> coeffs;
  std::size_t prev = sum.dim();
  for (int d = 0; d <= filtration_.top_degree(); ++d) {
    const auto [first, last] = filtration_.block(d);
    for (std::size_t r = first; r < last; ++r) sum.insert(filtration_.basis.row(r));
    coeffs.emplace_back(static_cast<unsigned long>(sum.dim() - prev));
    prev = sum.dim();
  }
  return QPoly(std::move(coeffs));
}

Vector FusionProduct::graded_apply(const LinearMap& op, int shift, std::size_t row) const {
  const Filtration& F = filtration_;
  const int d = F.degree_of_row[row];
  const int target = d + shift;
  if (target > F.top_degree()) return {};
  const Vector coords = F.basis.coordinates(op.apply(F.basis.row(row)));
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (F.degree_of_row[r] > target && sgn(coords[r]) != 0) {
      throw std::logic_error("operator of degree " + std::to_string(shift) + " raised the filtration degree");
    }
  }
  const auto [first, last] = F.block(target);
  return Vector(coords.begin() + static_cast<std::ptrdiff_t>(first), coords.begin() + static_cast<std::ptrdiff_t>(last));
}

QPoly FusionProduct::graded_coinvariants(int level, int weight) const {
  if (level < 0 || weight < 0 || weight > level) {
    throw std::invalid_argument("coinvariants need 0 <= l <= k (got k=" + std::to_string(level) +
                                ", l=" + std::to_string(weight) + ")");
  }
  const Filtration& F = filtration_;
  const int top = F.top_degree();
  const int power_count = level - weight + 1;
  std::vector<Subspace> relations;
  for (int d = 0; d <= top; ++d) {
    const auto [first, last] = F.block(d);
    relations.emplace_back(last - first);
  }
  const LinearMap& h0 = mode(Generator::h, 0);
  const LinearMap& e0 = mode(Generator::e, 0);
  const LinearMap& e1 = mode(Generator::e, 1);

  for (std::size_t r = 0; r < F.basis.dim(); ++r) {
    const int d = F.degree_of_row[r];
    const auto first = F.block(d).first;
    Vector hv = graded_apply(h0, 0, r);
    hv[r - first] += weight;
    relations[static_cast<std::size_t>(d)].insert(std::move(hv));
    relations[static_cast<std::size_t>(d)].insert(graded_apply(e0, 0, r));

    // (gr e[1])^n, stepping one degree at a time through the blocks.
    Vector block = unit_vector(F.block(d).second - first, r - first);
    int deg = d;
    bool vanished = false;
    for (int t = 0; t < power_count && !vanished; ++t) {
      if (deg + 1 > top || is_zero(block)) {
        vanished = true;
        break;
      }
      Vector full = zero_vector(F.basis.dim());
      const auto [bf, bl] = F.block(deg);
      for (std::size_t a = bf; a < bl; ++a) full[a] = block[a - bf];
      const Vector coords = F.basis.coordinates(e1.apply(F.basis.combine(full)));
      const auto [nf, nl] = F.block(deg + 1);
      for (std::size_t a = nl; a < coords.size(); ++a) {
        if (sgn(coords[a]) != 0) throw std::logic_error("e[1] raised the filtration degree by more than one");
      }
      block = Vector(coords.begin() + static_cast<std::ptrdiff_t>(nf), coords.begin() + static_cast<std::ptrdiff_t>(nl));
      ++deg;
    }
    if (!vanished) relations[static_cast<std::size_t>(deg)].insert(std::move(block));
  }

  std::vector<BigInt> coeffs;
  for (int d = 0; d <= top; ++d) {
    const auto [first, last] = F.block(d);
    coeffs.emplace_back(static_cast<unsigned long>(last - first - relations[static_cast<std::size_t>(d)].dim()));
  }
  return QPoly(std::move(coeffs));
}

Filtration build_filtration(std::vector<CyclicModuleFactor> factors, std::optional<int> max_gen_degree) {
  return FusionProduct(std::move(factors), max_gen_degree).filtration();
}

GradedCharacter fusion_character(std::vector<CyclicModuleFactor> factors) {
  return FusionProduct(std::move(factors)).character();
}

QPoly filtered_coinvariant_character(std::vector<CyclicModuleFactor> factors, int level, int weight) {
  return FusionProduct(std::move(factors)).filtered_coinvariants(level, weight);
}

QPoly graded_coinvariant_character(std::vector<CyclicModuleFactor> factors, int level, int weight) {
  return FusionProduct(std::move(factors)).graded_coinvariants(level, weight);
}

std::int64_t coinvariant_dimension(std::vector<CyclicModuleFactor> factors, int level, int weight) {
  return FusionProduct(std::move(factors)).coinvariant_dimension(level, weight);
}

std::vector<int> factor_weights(std::span<const int> m) {
  std::vector<int> w;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] < 0) throw std::invalid_argument("negative multiplicity");
    w.insert(w.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i) + 1);
  }
  return w;
}

std::vector<CyclicModuleFactor> irrep_factors(std::span<const int> highest_weights,
                                              std::span<const Rational> points) {
  if (highest_weights.size() != points.size()) {
    throw std::invalid_argument("need one point per factor (" + std::to_string(highest_weights.size()) +
                                " factors, " + std::to_string(points.size()) + " points)");
  }
  std::vector<CyclicModuleFactor> out;
  for (std::size_t i = 0; i < points.size(); ++i) out.push_back(CyclicModuleFactor::irrep(highest_weights[i], points[i]));
  return out;
}

bool z_independence_test(std::span<const int> highest_weights, int level, int weight,
                         std::span<const std::vector<Rational>> point_sets) {
  std::optional<std::tuple<GradedCharacter, QPoly, QPoly>> reference;
  for (const auto& points : point_sets) {
    FusionProduct fp(irrep_factors(highest_weights, points));
    auto result = std::make_tuple(fp.character(), fp.filtered_coinvariants(level, weight),
                                  fp.graded_coinvariants(level, weight));
    if (!reference) {
      reference = std::move(result);
    } else if (*reference != result) {
      return false;
    }
  }
  return true;
}

}  // namespace fusionq
