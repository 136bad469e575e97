// Acceptance gate: one PASS/FAIL line per criterion. Every criterion is an
// exact equality, so there are no tolerances. A criterion passes only when
// its grid is nonempty and every report passes.

#include "fusionq/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

using fusionq::SweepConfig;
using fusionq::VerificationReport;

struct Sweep {
  std::string identity;
  int min_level, max_level, max_size;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Sweep> sweeps;
};

SweepConfig config_of(const Sweep& s) {
  SweepConfig c;
  c.min_level = s.min_level;
  c.max_level = s.max_level;
  c.max_size = s.max_size;
  c.seed = fusionq::kDefaultSeed;
  return c;
}

}  // namespace

int main() {
  // Grid of graded coinvariants: k in {1,2} with |m| <= 6, and k = 3 with |m| <= 4.
  auto coinvariant_grid = [](const std::string& id) {
    return std::vector<Sweep>{{id, 1, 2, 6}, {id, 3, 3, 4}};
  };
  const std::vector<Criterion> criteria = {
      {1, "graded coinvariants = restricted Kostka", coinvariant_grid("coinvariant-kostka")},
      {2, "fermionic = alternating sum (k<=3, |m|<=8)", {{"alternating-sum", 1, 3, 8}}},
      {3, "q=1 restricted Kostka = Verlinde coefficient (k<=3, |m|<=8)", {{"number", 1, 3, 8}}},
      {4, "coinvariant dimension = Verlinde coefficient", {{"coinvariant-dimension", 1, 2, 6}, {"coinvariant-dimension", 3, 3, 4}}},
      {5, "filtered = graded coinvariants", coinvariant_grid("filtered-graded")},
      {6, "characters independent of the points (3 point sets)", coinvariant_grid("z-independence")},
      {7, "charge Kostka = fermionic Kostka (|m|<=7)", {{"charge", 1, 1, 7}}},
      {8, "dual space character = restricted Kostka (s<=3, |m|<=6)", {{"duality", 1, 3, 6}}},
      {9, "S_l - S_{l+2} = K_l (|m|<=8)", {{"weyl-supernomial", 1, 1, 8}}},
      {10, "fused B_1 copies give B_{1,Z}, top gives B_N (N<=5)", {{"ideal-fusion", 1, 1, 0}}},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t total = 0, passed = 0;
    const VerificationReport* first_failure = nullptr;
    std::vector<std::vector<VerificationReport>> all;
    for (const auto& s : c.sweeps) all.push_back(fusionq::verify_identity(s.identity, config_of(s)));
    for (const auto& reports : all)
      for (const auto& r : reports) {
        ++total;
        if (r.pass) ++passed;
        else if (first_failure == nullptr) first_failure = &r;
      }
    const bool ok = total > 0 && passed == total;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s (%zu/%zu cases, %.2fs)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                passed, total, secs);
    if (first_failure != nullptr) {
      std::printf("    first failure: %s [%s] left=%s right=%s\n", first_failure->identity.c_str(),
                  first_failure->parameters.c_str(), first_failure->left.c_str(), first_failure->right.c_str());
    }
    if (!ok) ++failed;
  }
  std::printf("%s: %d of %zu criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
