#pragma once

/// @file verify.hpp
/// @brief Sweep runner that checks the cross-module identities over a grid
/// of levels, weights and multiplicity vectors.

#include <cstdint>
#include <string>
#include <vector>

namespace fusionq {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kMaxSweepSize = 10;

struct SweepConfig {
  int min_level = 1;
  int max_level = 2;
  /// Largest |m| in the grid.
  int max_size = 6;
  std::uint64_t seed = kDefaultSeed;
  /// Worker threads; 0 means one per hardware thread.
  unsigned threads = 0;

  /// Throws std::invalid_argument on an empty range or max_size above the cap.
  void validate() const;
};

struct VerificationReport {
  std::string identity;
  std::string parameters;
  std::string left;
  std::string right;
  bool pass = false;
  double elapsed_ms = 0.0;
};

/// Names accepted by verify_identity, in the order verify_suite runs them.
const std::vector<std::string>& identity_names();
bool is_identity(const std::string& name);

/// One report per grid point, in deterministic parameter order. Throws
/// std::invalid_argument for an unknown identity.
std::vector<VerificationReport> verify_identity(const std::string& name, const SweepConfig& config);
std::vector<VerificationReport> verify_suite(const std::vector<std::string>& names, const SweepConfig& config);

/// Every m = (m_1, ..., m_length) with |m| <= max_size, including m = 0,
/// ordered by |m| and then lexicographically.
std::vector<std::vector<int>> multiplicity_grid(int length, int max_size);

/// Multiplicity vectors of every length without trailing zeros, |m| <= max_size
/// (one per partition).
std::vector<std::vector<int>> partition_grid(int max_size);

/// Seed from FUSIONQ_SEED when set and valid, else fallback.
std::uint64_t seed_from_environment(std::uint64_t fallback = kDefaultSeed);

}  // namespace fusionq
