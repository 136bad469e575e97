#include "fusionq/verify.hpp"

#include "fusionq/fusion.hpp"
#include "fusionq/gordon.hpp"
#include "fusionq/ideal.hpp"
#include "fusionq/kostka.hpp"
#include "fusionq/tableaux.hpp"
#include "fusionq/verlinde.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fusionq {

void SweepConfig::validate() const {
  if (min_level < 1 || max_level < min_level) {
    throw std::invalid_argument("empty level range [" + std::to_string(min_level) + ", " + std::to_string(max_level) + "]");
  }
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  if (max_size > kMaxSweepSize) {
    throw std::invalid_argument("max_size " + std::to_string(max_size) + " exceeds the cap " + std::to_string(kMaxSweepSize));
  }
}

std::vector<std::vector<int>> multiplicity_grid(int length, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(static_cast<std::size_t>(length), 0);
  for (int target = 0; target <= max_size; ++target) {
    auto rec = [&](auto&& self, int i, int remaining) -> void {
      if (i == length) {
        if (remaining == 0) out.push_back(m);
        return;
      }
      for (int c = 0; c * (i + 1) <= remaining; ++c) {
        m[static_cast<std::size_t>(i)] = c;
        self(self, i + 1, remaining - c * (i + 1));
      }
      m[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, target);
  }
  return out;
}

std::vector<std::vector<int>> partition_grid(int max_size) {
  std::vector<std::vector<int>> out;
  for (auto m : multiplicity_grid(std::max(max_size, 1), max_size)) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t seed_from_environment(std::uint64_t fallback) {
  const char* env = std::getenv("FUSIONQ_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') return fallback;
  return v;
}

namespace {

using Task = std::function<VerificationReport()>;

std::string vec_str(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string params(int k, int l, std::span<const int> m) {
  return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + vec_str(m);
}

VerificationReport compare(std::string identity, std::string parameters, const QPoly& left, const QPoly& right) {
  return {std::move(identity), std::move(parameters), left.to_string(), right.to_string(), left == right, 0.0};
}

template <class T>
VerificationReport compare_values(std::string identity, std::string parameters, const T& left, const T& right) {
  std::ostringstream l, r;
  l << left;
  r << right;
  return {std::move(identity), std::move(parameters), l.str(), r.str(), left == right, 0.0};
}

Task timed(std::string identity, std::string parameters, std::function<VerificationReport()> body) {
  return [identity = std::move(identity), parameters = std::move(parameters), body = std::move(body)] {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r = {identity, parameters, std::string("error: ") + e.what(), "", false, 0.0};
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
}

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<VerificationReport> out(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Rational> points_for(std::size_t n, std::uint64_t seed) { return draw_points(n, seed); }

using GridVisitor = std::function<void(int k, int l, const std::vector<int>& m)>;

void for_each_restricted(const SweepConfig& c, const GridVisitor& visit) {
  for (int k = c.min_level; k <= c.max_level; ++k)
    for (const auto& m : multiplicity_grid(k, c.max_size))
      for (int l = 0; l <= k; ++l) visit(k, l, m);
}

std::vector<Task> coinvariant_tasks(const SweepConfig& c, bool filtered) {
  std::vector<Task> tasks;
  const std::string name = filtered ? "filtered-graded" : "coinvariant-kostka";
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    const std::uint64_t seed = c.seed;
    tasks.push_back(timed(name, params(k, l, m), [=] {
      const auto w = factor_weights(m);
      FusionProduct fp(irrep_factors(w, points_for(w.size(), seed)));
      if (filtered) return compare(name, params(k, l, m), fp.filtered_coinvariants(k, l), fp.graded_coinvariants(k, l));
      return compare(name, params(k, l, m), fp.graded_coinvariants(k, l), restricted_kostka(k, l, m));
    }));
  });
  return tasks;
}

std::vector<Task> z_independence_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    const std::uint64_t seed = c.seed;
    tasks.push_back(timed("z-independence", params(k, l, m), [=] {
      const auto w = factor_weights(m);
      std::vector<std::vector<Rational>> sets;
      for (std::uint64_t i = 0; i < 3; ++i) sets.push_back(points_for(w.size(), seed + i));
      std::vector<std::string> rendered;
      for (const auto& z : sets) {
        FusionProduct fp(irrep_factors(w, z));
        rendered.push_back(fp.graded_coinvariants(k, l).to_string() + " ; " + fp.filtered_coinvariants(k, l).to_string() +
                           " ; dim " + std::to_string(fp.character().total()));
      }
      const bool pass = z_independence_test(w, k, l, sets);
      return VerificationReport{"z-independence", params(k, l, m), rendered[0],
                                rendered[1] + " | " + rendered[2], pass, 0.0};
    }));
  });
  return tasks;
}

std::vector<Task> alternating_sum_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    tasks.push_back(timed("alternating-sum", params(k, l, m), [=] {
      return compare("alternating-sum", params(k, l, m), restricted_kostka(k, l, m), alternating_sum(k, l, m));
    }));
  });
  return tasks;
}

std::vector<Task> number_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    tasks.push_back(timed("number", params(k, l, m), [=] {
      const BigInt left = restricted_kostka(k, l, m).eval_at_one();
      const BigInt right = fusion_coefficient(k, word_from_multiplicities(m), l);
      return compare_values("number", params(k, l, m), left, right);
    }));
  });
  return tasks;
}

std::vector<Task> stabilization_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for (const auto& m : partition_grid(c.max_size)) {
    const auto size = static_cast<int>(multiplicity_size(m));
    for (int l = 0; l <= size; ++l) {
      const std::string p = "l=" + std::to_string(l) + " m=" + vec_str(m);
      tasks.push_back(timed("stabilization", p, [=] {
        const int K = stable_level(l, m);
        const QPoly base = restricted_kostka(K, l, pad_multiplicities(m, static_cast<std::size_t>(K)));
        for (int extra = 1; extra <= 3; ++extra) {
          const QPoly other =
              restricted_kostka(K + extra, l, pad_multiplicities(m, static_cast<std::size_t>(K + extra)));
          if (other != base) return compare("stabilization", p + " K=" + std::to_string(K + extra), base, other);
        }
        return compare("stabilization", p, base, base);
      }));
    }
  }
  return tasks;
}

std::vector<Task> coinvariant_dimension_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  const std::uint64_t seed = c.seed;
  // Irreducible factors.
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    tasks.push_back(timed("coinvariant-dimension", "irreps " + params(k, l, m), [=] {
      const auto w = factor_weights(m);
      FusionProduct fp(irrep_factors(w, points_for(w.size(), seed)));
      const BigInt filtered = fp.filtered_coinvariants(k, l).eval_at_one();
      const std::int64_t dim = fp.coinvariant_dimension(k, l);
      const std::int64_t verlinde = fusion_coefficient(k, word_from_multiplicities(m), l);
      auto r = compare_values("coinvariant-dimension", "irreps " + params(k, l, m), dim, verlinde);
      r.pass = r.pass && filtered == dim;
      r.left = std::to_string(dim) + " (filtered q=1: " + filtered.get_str() + ")";
      return r;
    }));
  });
  // pi_0 + ... + pi_top with the sum of highest weight vectors, N <= 3 copies.
  for (int k = c.min_level; k <= std::min(c.max_level, 2); ++k)
    for (int top = 0; top <= k; ++top)
      for (int N = 1; N <= 3; ++N)
        for (int l = 0; l <= k; ++l) {
          const std::string p = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " truncated_sum(" +
                                std::to_string(top) + ")^" + std::to_string(N);
          tasks.push_back(timed("coinvariant-dimension", p, [=] {
            const auto z = points_for(static_cast<std::size_t>(N), seed);
            std::vector<CyclicModuleFactor> factors;
            for (const auto& zi : z) factors.push_back(CyclicModuleFactor::truncated_sum(top, zi));
            VerlindeVector sum = VerlindeVector::zero(k);
            for (int mu = 0; mu <= top; ++mu) sum.coeffs[static_cast<std::size_t>(mu)] = 1;
            VerlindeVector prod = VerlindeVector::basis(k, 0);
            for (int i = 0; i < N; ++i) prod = verlinde_product(k, prod, sum);
            return compare_values("coinvariant-dimension", p, coinvariant_dimension(std::move(factors), k, l), prod[l]);
          }));
        }
  // One factor sum_{mu<=k} pi_mu^* (x) pi_mu.
  for (int k = c.min_level; k <= std::min(c.max_level, 2); ++k)
    for (int l = 0; l <= k; ++l) {
      const std::string p = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " matrix_module";
      tasks.push_back(timed("coinvariant-dimension", p, [=] {
        const auto z = points_for(1, seed);
        VerlindeVector sum = VerlindeVector::zero(k);
        for (int mu = 0; mu <= k; ++mu) sum.coeffs[static_cast<std::size_t>(mu)] = mu + 1;
        return compare_values("coinvariant-dimension", p, coinvariant_dimension({CyclicModuleFactor::matrix_module(k, z[0])}, k, l),
                              sum[l]);
      }));
    }
  return tasks;
}

std::vector<Task> charge_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for (const auto& m : partition_grid(c.max_size)) {
    const auto size = static_cast<int>(multiplicity_size(m));
    for (int l = 0; l <= size; ++l) {
      const std::string p = "l=" + std::to_string(l) + " m=" + vec_str(m);
      tasks.push_back(timed("charge", p, [=] { return compare("charge", p, kostka_via_charge(l, m), unrestricted_kostka(l, m)); }));
    }
  }
  return tasks;
}

std::vector<Task> weyl_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for (const auto& m : partition_grid(c.max_size)) {
    const auto size = static_cast<int>(multiplicity_size(m));
    for (int l = 0; l <= size; ++l) {
      const std::string p = "l=" + std::to_string(l) + " m=" + vec_str(m);
      tasks.push_back(timed("weyl-supernomial", p, [=] {
        return compare("weyl-supernomial", p, supernomial(l, m) - supernomial(l + 2, m), unrestricted_kostka(l, m));
      }));
    }
  }
  return tasks;
}

std::vector<Task> supernomial_character_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  const std::uint64_t seed = c.seed;
  for (int k = c.min_level; k <= c.max_level; ++k)
    for (const auto& m : multiplicity_grid(k, c.max_size)) {
      const std::string p = "k=" + std::to_string(k) + " m=" + vec_str(m);
      tasks.push_back(timed("supernomial-character", p, [=] {
        const auto w = factor_weights(m);
        const GradedCharacter ch = fusion_character(irrep_factors(w, points_for(w.size(), seed)));
        const int size = static_cast<int>(multiplicity_size(m));
        for (int wt = -size; wt <= size; ++wt) {
          const QPoly expected = supernomial(std::abs(wt), m);
          if (ch.weight_series(wt) != expected)
            return compare("supernomial-character", p + " w=" + std::to_string(wt), ch.weight_series(wt), expected);
        }
        return compare("supernomial-character", p, ch.degree_series(), ch.degree_series());
      }));
    }
  return tasks;
}

int variables_of(int l, const std::vector<int>& m) {
  const auto size = multiplicity_size(m);
  if (size < l || (size - l) % 2 != 0) return -1;
  return static_cast<int>((size - l) / 2);
}

std::vector<Task> duality_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    const int s = variables_of(l, m);
    if (s < 0 || s > 3) return;
    tasks.push_back(timed("duality", params(k, l, m), [=] {
      return compare("duality", params(k, l, m), dual_space_character(k, l, m), restricted_kostka(k, l, m));
    }));
  });
  return tasks;
}

std::vector<Task> diagonal_vanishing_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    const int s = variables_of(l, m);
    if (s < 0 || s > 3) return;
    tasks.push_back(timed("diagonal-vanishing", params(k, l, m), [=] {
      const auto sol = solve_dual_space(k, l, m);
      return compare_values("diagonal-vanishing", params(k, l, m), diagonal_vanishing_check(sol), true);
    }));
  });
  return tasks;
}

std::vector<Task> monotonicity_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  for_each_restricted(c, [&](int k, int l, const std::vector<int>& m) {
    const int s = variables_of(l, m);
    if (s < 0 || s > 3) return;
    tasks.push_back(timed("monotonicity", params(k, l, m), [=] {
      DualSpaceOptions relaxed;
      relaxed.level_condition = false;
      const QPoly restricted = dual_space_character(k, l, m);
      const QPoly unrestricted = dual_space_character(k, l, m, relaxed);
      auto r = compare("monotonicity", params(k, l, m), unrestricted, unrestricted_kostka(l, m));
      r.pass = r.pass && unrestricted.dominates(restricted);
      return r;
    }));
  });
  return tasks;
}

std::vector<Task> window_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  const int kmax = std::max(c.max_level, 6);
  for (int k = 0; k <= kmax; ++k) {
    const std::string p = "k=" + std::to_string(k);
    tasks.push_back(timed("window-rule", p, [=] {
      for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; l2 <= k; ++l2) {
          const auto prod = verlinde_product(k, VerlindeVector::basis(k, l1), VerlindeVector::basis(k, l2));
          for (int l = 0; l <= k; ++l) {
            const bool in = std::abs(l1 - l2) <= l && l <= std::min(l1 + l2, 2 * k - l1 - l2) && (l - l1 - l2) % 2 == 0;
            if (prod[l] != (in ? 1 : 0)) {
              return compare_values("window-rule",
                                    p + " l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) + " l=" + std::to_string(l),
                                    prod[l], std::int64_t{in ? 1 : 0});
            }
          }
        }
      return compare_values("window-rule", p, 0, 0);
    }));
  }
  return tasks;
}

std::vector<Task> ideal_tasks(const SweepConfig& c) {
  std::vector<Task> tasks;
  const std::uint64_t seed = c.seed;
  for (int N = 1; N <= 5; ++N) {
    const std::string p = "N=" + std::to_string(N);
    tasks.push_back(timed("ideal-fusion", p, [=] {
      const auto z = points_for(static_cast<std::size_t>(N), seed);
      const std::vector<ComponentwiseIdeal> ideals(static_cast<std::size_t>(N), ComponentwiseIdeal::b_ideal(1));
      const ComponentwiseIdeal fused = componentwise_ideal_fuse(ideals, z);
      RationalPolynomial expected = RationalPolynomial::one();
      for (const auto& zi : z) expected = expected * RationalPolynomial::linear(zi);
      const ComponentwiseIdeal b1z(expected, expected, expected);
      const ComponentwiseIdeal top = top_of_ideal(fused);
      const ComponentwiseIdeal bn = ComponentwiseIdeal::b_ideal(N);
      VerificationReport r{"ideal-fusion", p,
                           fused.p_e().to_string() + " ; top " + top.p_e().to_string(),
                           expected.to_string() + " ; top " + bn.p_e().to_string(), fused == b1z && top == bn, 0.0};
      return r;
    }));
  }
  return tasks;
}

using TaskFactory = std::function<std::vector<Task>(const SweepConfig&)>;

const std::vector<std::pair<std::string, TaskFactory>>& registry() {
  static const std::vector<std::pair<std::string, TaskFactory>> r = {
      {"coinvariant-kostka", [](const SweepConfig& c) { return coinvariant_tasks(c, false); }},
      {"alternating-sum", alternating_sum_tasks},
      {"number", number_tasks},
      {"coinvariant-dimension", coinvariant_dimension_tasks},
      {"filtered-graded", [](const SweepConfig& c) { return coinvariant_tasks(c, true); }},
      {"z-independence", z_independence_tasks},
      {"charge", charge_tasks},
      {"duality", duality_tasks},
      {"weyl-supernomial", weyl_tasks},
      {"ideal-fusion", ideal_tasks},
      {"stabilization", stabilization_tasks},
      {"supernomial-character", supernomial_character_tasks},
      {"diagonal-vanishing", diagonal_vanishing_tasks},
      {"monotonicity", monotonicity_tasks},
      {"window-rule", window_tasks},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, f] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_identity(const std::string& name) {
  const auto& n = identity_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<VerificationReport> verify_identity(const std::string& name, const SweepConfig& config) {
  config.validate();
  for (const auto& [n, factory] : registry())
    if (n == name) return run_tasks(factory(config), config.threads);
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<VerificationReport> verify_suite(const std::vector<std::string>& names, const SweepConfig& config) {
  config.validate();
  std::vector<Task> tasks;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& [n, factory] : registry())
      if (n == name) {
        auto t = factory(config);
        tasks.insert(tasks.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown identity '" + name + "'");
  }
  return run_tasks(tasks, config.threads);
}

}  // namespace fusionq
