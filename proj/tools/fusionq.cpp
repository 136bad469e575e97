// fusionq: command-line front end for the fusionq library.
//
// Exit codes: 0 success, 1 computation error or failed verification,
// 2 usage error.

#include "fusionq/fusion.hpp"
#include "fusionq/gordon.hpp"
#include "fusionq/ideal.hpp"
#include "fusionq/io.hpp"
#include "fusionq/kostka.hpp"
#include "fusionq/tableaux.hpp"
#include "fusionq/verify.hpp"
#include "fusionq/verlinde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace {

using nlohmann::json;
using namespace fusionq;

enum class Format { json, tsv, pretty };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  Format fmt() const {
    if (format == "tsv") return Format::tsv;
    if (format == "pretty") return Format::pretty;
    return Format::json;
  }
};

template <class F>
auto usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json with_schema(json body) {
  json out = {{"schema", kSchema}};
  out.update(body);
  return out;
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

void print_poly(const Globals& g, const QPoly& p, json extra, const std::string& name) {
  switch (g.fmt()) {
    case Format::json: {
      json body = qpoly_to_json(p);
      if (extra.is_object()) body.update(extra);
      print_json(with_schema(body));
      break;
    }
    case Format::tsv:
      std::cout << "degree\tcoeff\n";
      for (int d = 0; d <= p.degree(); ++d) std::cout << d << '\t' << p.coeff(d) << '\n';
      break;
    case Format::pretty:
      std::cout << name << " = " << p.to_string() << '\n';
      std::cout << std::setw(8) << "degree" << std::setw(12) << "coeff" << '\n';
      for (int d = 0; d <= p.degree(); ++d) std::cout << std::setw(8) << d << std::setw(12) << p.coeff(d).get_str() << '\n';
      break;
  }
}

// m for commands tied to a level: --level pads with zeros, otherwise the
// length of m is the level.
std::vector<int> level_multiplicities(const std::string& text, int& level) {
  std::vector<int> m = usage([&] { return parse_int_list(text); });
  for (int x : m)
    if (x < 0) throw UsageError("multiplicities must be nonnegative");
  if (level <= 0) {
    level = std::max<int>(1, static_cast<int>(m.size()));
    return pad_multiplicities(m, static_cast<std::size_t>(level));
  }
  while (m.size() > static_cast<std::size_t>(level) && m.back() == 0) m.pop_back();
  if (m.size() > static_cast<std::size_t>(level)) {
    throw UsageError("m has a nonzero entry beyond the level " + std::to_string(level));
  }
  return pad_multiplicities(m, static_cast<std::size_t>(level));
}

std::vector<int> plain_multiplicities(const std::string& text) {
  std::vector<int> m = usage([&] { return parse_int_list(text); });
  for (int x : m)
    if (x < 0) throw UsageError("multiplicities must be nonnegative");
  return m;
}

// Factors from --m (irreducible factors) or --factors "irrep:1,sum:2,matrix:1".
std::vector<CyclicModuleFactor> resolve_factors(const std::string& m_text, const std::string& factors_text,
                                                const std::string& points_text, std::uint64_t seed) {
  if (m_text.empty() == factors_text.empty()) throw UsageError("give exactly one of --m or --factors");
  std::vector<std::pair<std::string, int>> kinds;
  if (!m_text.empty()) {
    for (int w : factor_weights(plain_multiplicities(m_text))) kinds.emplace_back("irrep", w);
  } else {
    std::stringstream ss(factors_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw UsageError("factor '" + item + "' is not of the form kind:n");
      const std::string kind = item.substr(0, colon);
      const std::vector<int> n = usage([&] { return parse_int_list(item.substr(colon + 1)); });
      if (n.size() != 1 || n[0] < 0) throw UsageError("factor '" + item + "' needs one nonnegative integer");
      if (kind != "irrep" && kind != "sum" && kind != "matrix") throw UsageError("unknown factor kind '" + kind + "'");
      kinds.emplace_back(kind, n[0]);
    }
  }
  std::vector<Rational> points;
  if (!points_text.empty()) {
    points = usage([&] { return parse_rational_list(points_text); });
    if (points.size() != kinds.size()) {
      throw UsageError("expected " + std::to_string(kinds.size()) + " points, got " + std::to_string(points.size()));
    }
  } else {
    points = usage([&] { return draw_points(kinds.size(), seed); });
  }
  std::vector<CyclicModuleFactor> factors;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const auto& [kind, n] = kinds[i];
    if (kind == "irrep") factors.push_back(CyclicModuleFactor::irrep(n, points[i]));
    else if (kind == "sum") factors.push_back(CyclicModuleFactor::truncated_sum(n, points[i]));
    else factors.push_back(CyclicModuleFactor::matrix_module(n, points[i]));
  }
  return factors;
}

json points_json(const std::vector<CyclicModuleFactor>& factors) {
  json a = json::array();
  for (const auto& f : factors) a.push_back(format_rational(f.point));
  return a;
}

std::string multipoly_to_string(const MultiPoly& f) {
  std::ostringstream os;
  bool first = true;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << "(" << format_rational(c) << ")";
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i + 1;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return first ? "0" : os.str();
}

json report_json(const VerificationReport& r, bool timing) {
  json j = {{"identity", r.identity}, {"parameters", r.parameters}, {"left", r.left}, {"right", r.right}, {"pass", r.pass}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionq: restricted Kostka polynomials, Verlinde fusion rules and fusion product characters"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.fallthrough();
  const std::uint64_t seed_default = seed_from_environment();

  std::function<int()> action;

  // kostka
  auto* kostka = app.add_subcommand("kostka", "Unrestricted Kostka polynomial K_{l,m}(q)");
  int kostka_l = 0;
  std::string kostka_m;
  kostka->add_option("--l", kostka_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  kostka->add_option("--m", kostka_m, "Multiplicities m_1,...,m_k")->required();
  kostka->callback([&] {
    action = [&] {
      const auto m = plain_multiplicities(kostka_m);
      print_poly(g, unrestricted_kostka(kostka_l, m), {}, "K");
      return 0;
    };
  });

  // rkostka
  auto* rkostka = app.add_subcommand("rkostka", "Level-restricted Kostka polynomial by the fermionic sum");
  int rk_level = 0, rk_l = 0;
  std::string rk_m;
  rkostka->add_option("--level", rk_level, "Level k (default: length of m)")->check(CLI::PositiveNumber);
  rkostka->add_option("--l", rk_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  rkostka->add_option("--m", rk_m, "Multiplicities m_1,...,m_k")->required();
  rkostka->callback([&] {
    action = [&] {
      const auto m = level_multiplicities(rk_m, rk_level);
      print_poly(g, restricted_kostka(rk_level, rk_l, m), {}, "K^(" + std::to_string(rk_level) + ")");
      return 0;
    };
  });

  // supernomial
  auto* super = app.add_subcommand("supernomial", "q-supernomial S_{l,m}(q)");
  int sup_l = 0;
  std::string sup_m;
  super->add_option("--l", sup_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  super->add_option("--m", sup_m, "Multiplicities m_1,...,m_k")->required();
  super->callback([&] {
    action = [&] {
      print_poly(g, supernomial(sup_l, plain_multiplicities(sup_m)), {}, "S");
      return 0;
    };
  });

  // verlinde
  auto* verlinde = app.add_subcommand("verlinde", "Product of classes in the level-k Verlinde algebra");
  int ver_level = 0;
  std::string ver_word;
  std::optional<int> ver_coef;
  verlinde->add_option("--level", ver_level, "Level k")->required()->check(CLI::NonNegativeNumber);
  verlinde->add_option("--word", ver_word, "Classes to multiply, e.g. 1,1,2")->required();
  verlinde->add_option("--coef", ver_coef, "Print only the coefficient of [l]");
  verlinde->callback([&] {
    action = [&] {
      const auto word = plain_multiplicities(ver_word);
      for (int w : word)
        if (w > ver_level) throw UsageError("class " + std::to_string(w) + " exceeds the level");
      if (ver_coef) {
        if (*ver_coef < 0 || *ver_coef > ver_level) throw UsageError("--coef outside [0, level]");
        const auto c = fusion_coefficient(ver_level, word, *ver_coef);
        if (g.fmt() == Format::json) print_json(with_schema({{"level", ver_level}, {"l", *ver_coef}, {"coefficient", c}}));
        else std::cout << c << '\n';
        return 0;
      }
      const auto v = verlinde_word_product(ver_level, word);
      switch (g.fmt()) {
        case Format::json:
          print_json(with_schema({{"level", ver_level}, {"coeffs", v.coeffs}}));
          break;
        case Format::tsv:
          std::cout << "l\tcoeff\n";
          for (int l = 0; l <= ver_level; ++l) std::cout << l << '\t' << v[l] << '\n';
          break;
        case Format::pretty: {
          std::string s;
          for (int l = 0; l <= ver_level; ++l) {
            if (v[l] == 0) continue;
            if (!s.empty()) s += " + ";
            s += (v[l] == 1 ? "" : std::to_string(v[l])) + "[" + std::to_string(l) + "]";
          }
          std::cout << (s.empty() ? "0" : s) << '\n';
          break;
        }
      }
      return 0;
    };
  });

  // tableaux
  auto* tab = app.add_subcommand("tableaux", "Two-row tableaux with rectangle content and their charge");
  int tab_l = 0;
  std::string tab_m;
  bool tab_list = false;
  tab->add_option("--l", tab_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  tab->add_option("--m", tab_m, "Multiplicities m_1,...,m_k")->required();
  tab->add_flag("--list", tab_list, "List the tableaux with their charge");
  tab->callback([&] {
    action = [&] {
      const auto m = plain_multiplicities(tab_m);
      const auto content = rectangle_content(m);
      const auto size = multiplicity_size(m);
      std::vector<Tableau> tableaux;
      if (tab_l <= size && (size - tab_l) % 2 == 0) tableaux = enumerate_tableaux(two_row_shape(tab_l, m), content);
      const QPoly K = kostka_via_charge(tab_l, m);
      switch (g.fmt()) {
        case Format::json: {
          json body = qpoly_to_json(K);
          body["count"] = tableaux.size();
          if (tab_list) {
            json list = json::array();
            for (const auto& t : tableaux) list.push_back({{"rows", t.rows}, {"charge", charge(t)}});
            body["tableaux"] = list;
          }
          print_json(with_schema(body));
          break;
        }
        case Format::tsv:
          std::cout << "count\t" << tableaux.size() << '\n';
          for (int d = 0; d <= K.degree(); ++d) std::cout << d << '\t' << K.coeff(d) << '\n';
          if (tab_list)
            for (const auto& t : tableaux) std::cout << t.to_string() << '\t' << charge(t) << '\n';
          break;
        case Format::pretty:
          std::cout << "count: " << tableaux.size() << "\nK = " << K << '\n';
          if (tab_list)
            for (const auto& t : tableaux) std::cout << "charge " << charge(t) << ":\n" << t.to_string() << '\n';
          break;
      }
      return 0;
    };
  });

  // fusion-char
  auto* fchar = app.add_subcommand("fusion-char", "Character of the fusion product by (degree, weight)");
  std::string fc_m, fc_factors, fc_points;
  fchar->add_option("--m", fc_m, "Multiplicities of irreducible factors");
  fchar->add_option("--factors", fc_factors, "Factor list such as irrep:1,sum:2,matrix:1");
  fchar->add_option("--points", fc_points, "Evaluation points, one per factor");
  fchar->callback([&] {
    action = [&] {
      auto factors = resolve_factors(fc_m, fc_factors, fc_points, seed_default);
      const json points = points_json(factors);
      FusionProduct fp(std::move(factors));
      const GradedCharacter ch = fp.character();
      switch (g.fmt()) {
        case Format::json: {
          json body = character_to_json(ch);
          body["points"] = points;
          body["dims"] = fp.filtration().dims;
          body["degree_series"] = qpoly_to_json(ch.degree_series())["coeffs"];
          print_json(with_schema(body));
          break;
        }
        case Format::tsv:
          std::cout << "degree\tweight\tdim\n";
          for (const auto& [key, n] : ch.table()) std::cout << key.first << '\t' << key.second << '\t' << n << '\n';
          break;
        case Format::pretty:
          std::cout << "dimension " << fp.dim() << ", points " << points.dump() << '\n';
          for (const auto& [key, n] : ch.table())
            std::cout << "degree " << key.first << "  weight " << std::setw(3) << key.second << "  dim " << n << '\n';
          break;
      }
      return 0;
    };
  });

  // coinv
  auto* coinv = app.add_subcommand("coinv", "Character of the coinvariants of a fusion product");
  std::string co_m, co_factors, co_points, co_mode = "graded";
  int co_level = 0, co_l = 0;
  coinv->add_option("--m", co_m, "Multiplicities of irreducible factors");
  coinv->add_option("--factors", co_factors, "Factor list such as irrep:1,sum:2,matrix:1");
  coinv->add_option("--points", co_points, "Evaluation points, one per factor");
  coinv->add_option("--level", co_level, "Level k")->required()->check(CLI::PositiveNumber);
  coinv->add_option("--l", co_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  coinv->add_option("--mode", co_mode, "graded or filtered")->check(CLI::IsMember({"graded", "filtered"}));
  coinv->callback([&] {
    action = [&] {
      if (co_l > co_level) throw UsageError("--l exceeds --level");
      auto factors = resolve_factors(co_m, co_factors, co_points, seed_default);
      FusionProduct fp(std::move(factors));
      const QPoly ch =
          co_mode == "graded" ? fp.graded_coinvariants(co_level, co_l) : fp.filtered_coinvariants(co_level, co_l);
      print_poly(g, ch, {{"mode", co_mode}, {"dimension", fp.coinvariant_dimension(co_level, co_l)}}, "ch");
      return 0;
    };
  });

  // gordon
  auto* gordon = app.add_subcommand("gordon", "Character of the symmetric-polynomial dual space");
  int go_level = 0, go_l = 0;
  std::string go_m;
  bool go_list = false, go_unrestricted = false;
  gordon->add_option("--level", go_level, "Level k (default: length of m)")->check(CLI::PositiveNumber);
  gordon->add_option("--l", go_l, "Weight l")->required()->check(CLI::NonNegativeNumber);
  gordon->add_option("--m", go_m, "Multiplicities m_1,...,m_k")->required();
  gordon->add_flag("--list-basis", go_list, "List a basis of the space");
  gordon->add_flag("--no-level-condition", go_unrestricted, "Drop the level-k vanishing condition");
  gordon->callback([&] {
    action = [&] {
      const auto m = level_multiplicities(go_m, go_level);
      DualSpaceOptions opts;
      opts.level_condition = !go_unrestricted;
      const auto sol = usage([&] { return solve_dual_space(go_level, go_l, m, opts); });
      json extra = {{"variables", sol.problem.variables}};
      if (go_list) {
        json basis = json::array();
        for (std::size_t i = 0; i < sol.basis.size(); ++i)
          basis.push_back({{"degree", sol.basis_degree[i]}, {"polynomial", multipoly_to_string(sol.basis[i])}});
        extra["basis"] = basis;
      }
      print_poly(g, sol.character, extra, "ch");
      if (go_list && g.fmt() != Format::json)
        for (std::size_t i = 0; i < sol.basis.size(); ++i)
          std::cout << "basis[" << i << "] degree " << sol.basis_degree[i] << ": " << multipoly_to_string(sol.basis[i]) << '\n';
      return 0;
    };
  });

  // ideal-fuse
  auto* ifuse = app.add_subcommand("ideal-fuse", "Fuse componentwise ideals at distinct points");
  std::string if_spec, if_points;
  bool if_top = false;
  ifuse->add_option("--spec", if_spec, "JSON file: one ideal (used at every point) or an array")->required();
  ifuse->add_option("--points", if_points, "Evaluation points")->required();
  ifuse->add_flag("--top", if_top, "Also print the top (leading monomial) ideal");
  ifuse->callback([&] {
    action = [&] {
      std::ifstream in(if_spec);
      if (!in) throw UsageError("cannot open " + if_spec);
      json spec;
      try {
        spec = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("bad JSON in ") + if_spec + ": " + e.what());
      }
      const auto points = usage([&] { return parse_rational_list(if_points); });
      std::vector<ComponentwiseIdeal> ideals;
      usage([&] {
        if (spec.is_array()) {
          for (const auto& j : spec) ideals.push_back(ideal_from_json(j));
        } else {
          for (std::size_t i = 0; i < points.size(); ++i) ideals.push_back(ideal_from_json(spec));
        }
        return 0;
      });
      const ComponentwiseIdeal fused = componentwise_ideal_fuse(ideals, points);
      switch (g.fmt()) {
        case Format::json: {
          json body = {{"fused", ideal_to_json(fused)}};
          if (if_top) body["top"] = ideal_to_json(top_of_ideal(fused));
          print_json(with_schema(body));
          break;
        }
        case Format::tsv:
        case Format::pretty: {
          const char sep = g.fmt() == Format::tsv ? '\t' : ' ';
          auto show = [&](const char* name, const ComponentwiseIdeal& I) {
            std::cout << name << sep << "p_e=" << I.p_e().to_string() << sep << "p_h=" << I.p_h().to_string() << sep
                      << "p_f=" << I.p_f().to_string() << '\n';
          };
          show("fused", fused);
          if (if_top) show("top", top_of_ideal(fused));
          break;
        }
      }
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check cross-module identities over a parameter grid");
  std::string ver_identity;
  SweepConfig cfg;
  cfg.seed = seed_default;
  std::optional<int> level_only;
  bool timing = false;
  verify->add_option("identity", ver_identity, "Identity name or 'all'")->required();
  verify->add_option("--max-size", cfg.max_size, "Largest |m|");
  verify->add_option("--level", level_only, "Single level k");
  verify->add_option("--min-level", cfg.min_level, "Smallest level");
  verify->add_option("--max-level", cfg.max_level, "Largest level");
  verify->add_option("--seed", cfg.seed, "Point-pool seed (default from FUSIONQ_SEED)");
  verify->add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)");
  verify->add_flag("--timing", timing, "Include elapsed times");
  verify->callback([&] {
    action = [&] {
      if (level_only) cfg.min_level = cfg.max_level = *level_only;
      std::vector<std::string> names;
      if (ver_identity == "all") names = identity_names();
      else if (is_identity(ver_identity)) names = {ver_identity};
      else throw UsageError("unknown identity '" + ver_identity + "'");
      const auto reports = usage([&] { return verify_suite(names, cfg); });
      std::size_t failed = 0;
      const VerificationReport* first = nullptr;
      for (const auto& r : reports) {
        if (!r.pass) {
          ++failed;
          if (first == nullptr) first = &r;
        }
      }
      switch (g.fmt()) {
        case Format::json: {
          json list = json::array();
          for (const auto& r : reports) list.push_back(report_json(r, timing));
          json body = {{"identities", names}, {"seed", cfg.seed},       {"total", reports.size()},
                       {"failed", failed},    {"pass", failed == 0}, {"reports", list}};
          if (first) body["counterexample"] = report_json(*first, timing);
          print_json(with_schema(body));
          break;
        }
        case Format::tsv:
          std::cout << "identity\tparameters\tpass\tleft\tright" << (timing ? "\telapsed_ms" : "") << '\n';
          for (const auto& r : reports) {
            std::cout << r.identity << '\t' << r.parameters << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << r.left << '\t'
                      << r.right;
            if (timing) std::cout << '\t' << r.elapsed_ms;
            std::cout << '\n';
          }
          break;
        case Format::pretty:
          for (const auto& name : names) {
            std::size_t n = 0, bad = 0;
            for (const auto& r : reports)
              if (r.identity == name) {
                ++n;
                bad += r.pass ? 0 : 1;
              }
            std::cout << std::left << std::setw(24) << name << (bad == 0 ? "PASS" : "FAIL") << "  " << n - bad << "/" << n
                      << '\n';
          }
          break;
      }
      if (first) {
        std::cerr << "counterexample: " << first->identity << " [" << first->parameters << "]\n  left:  " << first->left
                  << "\n  right: " << first->right << '\n';
        return 1;
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
