#include "fusionq/gordon.hpp"

#include "fusionq/kostka.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fusionq {

DualSpaceProblem DualSpaceProblem::make(int level, int weight, std::span<const int> m) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (weight < 0 || weight > level) throw std::invalid_argument("weight outside [0, k]");
  if (m.size() != static_cast<std::size_t>(level)) throw std::invalid_argument("multiplicity vector must have length k");
  const auto size = multiplicity_size(m);
  if (size < weight || (size - weight) % 2 != 0) {
    throw std::invalid_argument("|m| - l must be even and nonnegative");
  }
  DualSpaceProblem p{level, weight, std::vector<int>(m.begin(), m.end()), static_cast<int>((size - weight) / 2), {}};
  for (int a = 1; a <= p.variables; ++a) {
    std::int64_t Ma = 0;
    for (std::size_t i = 0; i < m.size(); ++i) Ma += std::min<std::int64_t>(a, static_cast<std::int64_t>(i) + 1) * m[i];
    p.bounds.push_back(Ma);
  }
  return p;
}

namespace {

// Partitions with exactly `parts` parts, each in [1, max_part].
void partitions_in_box(int parts, int max_part, std::vector<Exponent>& out) {
  Exponent lam(static_cast<std::size_t>(parts));
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == parts) {
      out.push_back(lam);
      return;
    }
    for (int v = cap; v >= 1; --v) {
      lam[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  if (parts == 0) {
    out.push_back({});
    return;
  }
  if (max_part >= 1) rec(rec, 0, max_part);
}

// Distinct rearrangements of a partition.
std::vector<Exponent> rearrangements(Exponent lam) {
  std::sort(lam.begin(), lam.end());
  std::vector<Exponent> out;
  do {
    out.push_back(lam);
  } while (std::next_permutation(lam.begin(), lam.end()));
  return out;
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiPoly diagonal_specialization(const MultiPoly& f, int a) {
  MultiPoly out;
  for (const auto& [e, c] : f) {
    if (a < 1 || static_cast<std::size_t>(a) > e.size()) throw std::invalid_argument("diagonal_specialization: bad a");
    Exponent r;
    r.push_back(std::accumulate(e.begin(), e.begin() + a, 0));
    r.insert(r.end(), e.begin() + a, e.end());
    out[r] += c;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

DualSpaceSolution solve_dual_space(int level, int weight, std::span<const int> m, DualSpaceOptions options) {
  DualSpaceSolution sol{DualSpaceProblem::make(level, weight, m), {}, {}, {}};
  const DualSpaceProblem& P = sol.problem;
  const int s = P.variables;
  if (s > options.max_variables) {
    throw std::length_error("dual space with " + std::to_string(s) + " variables exceeds the cap of " +
                            std::to_string(options.max_variables));
  }

  // Monomial symmetric basis: condition (ii) forces every exponent >= 1,
  // the a = 1 bound caps each exponent at M_1 - 1.
  std::vector<Exponent> lambdas;
  partitions_in_box(s, s == 0 ? 0 : static_cast<int>(P.bounds[0]) - 1, lambdas);

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t c = 0; c < lambdas.size(); ++c) by_degree[total_degree(lambdas[c])].push_back(c);

  // Constraints, keyed by the monomial they constrain; each touches one degree.
  std::map<std::pair<int, Exponent>, std::map<std::size_t, Rational>> rows;
  const int zeros = level - weight + 1;
  for (std::size_t c = 0; c < lambdas.size(); ++c) {
    for (const auto& alpha : rearrangements(lambdas[c])) {
      for (int a = 2; a <= s; ++a) {
        const int xdeg = std::accumulate(alpha.begin(), alpha.begin() + a, 0);
        if (xdeg <= P.bounds[static_cast<std::size_t>(a - 1)] - a) continue;
        Exponent key{a, xdeg};
        key.insert(key.end(), alpha.begin() + a, alpha.end());
        rows[{0, key}][c] += 1;
      }
      if (options.level_condition && s >= zeros) {
        // g = f / (x_1...x_s) has exponents alpha - 1; setting the first
        // `zeros` variables to 0 keeps the monomials with no x_1..x_zeros.
        const bool survives = std::all_of(alpha.begin(), alpha.begin() + zeros, [](int x) { return x == 1; });
        if (survives) {
          Exponent key(alpha.begin() + zeros, alpha.end());
          for (auto& x : key) x -= 1;
          rows[{1, key}][c] += 1;
        }
      }
    }
  }

  std::vector<BigInt> coeffs;
  for (const auto& [deg, cols] : by_degree) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < cols.size(); ++i) local[cols[i]] = i;
    std::vector<Vector> dense;
    for (const auto& [key, entries] : rows) {
      if (total_degree(lambdas[entries.begin()->first]) != deg) continue;
      Vector r = zero_vector(cols.size());
      for (const auto& [c, v] : entries) r[local.at(c)] = v;
      dense.push_back(std::move(r));
    }
    const auto null = nullspace(dense, cols.size());
    if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(deg) + 1);
    coeffs[static_cast<std::size_t>(deg)] = static_cast<unsigned long>(null.size());
    for (const auto& x : null) {
      MultiPoly f;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (const auto& alpha : rearrangements(lambdas[cols[i]])) f[alpha] += x[i];
      }
      sol.basis.push_back(std::move(f));
      sol.basis_degree.push_back(deg);
    }
  }
  sol.character = QPoly(std::move(coeffs));
  return sol;
}

QPoly dual_space_character(int level, int weight, std::span<const int> m, DualSpaceOptions options) {
  return solve_dual_space(level, weight, m, options).character;
}

bool diagonal_vanishing_check(std::span<const MultiPoly> basis, int level, int weight, std::span<const int> m) {
  const auto P = DualSpaceProblem::make(level, weight, m);
  for (int a = level + 1; a <= P.variables; ++a)
    for (const auto& f : basis)
      if (!diagonal_specialization(f, a).empty()) return false;
  return true;
}

bool diagonal_vanishing_check(const DualSpaceSolution& solution) {
  const auto& P = solution.problem;
  return diagonal_vanishing_check(solution.basis, P.level, P.weight, P.m);
}

}  // namespace fusionq
