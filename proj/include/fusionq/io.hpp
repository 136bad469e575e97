#pragma once

/// @file io.hpp
/// @brief JSON forms of the library's value types, and list parsing for
/// command-line arguments.

#include "fusionq/fusion.hpp"
#include "fusionq/ideal.hpp"
#include "fusionq/qseries.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fusionq {

inline constexpr const char* kSchema = "fusionq/1";

/// {"coeffs": ["c0", "c1", ...]}, dense ascending, decimal strings.
nlohmann::json qpoly_to_json(const QPoly& p);
/// Accepts decimal strings or JSON integers. Throws std::invalid_argument.
QPoly qpoly_from_json(const nlohmann::json& j);

/// {"p_e": [...], "p_h": [...], "p_f": [...]}, ascending, rationals as strings.
nlohmann::json ideal_to_json(const ComponentwiseIdeal& ideal);
/// Accepts rational strings ("1/2") or JSON numbers that are integers.
ComponentwiseIdeal ideal_from_json(const nlohmann::json& j);

/// {"entries": [{"degree": d, "weight": w, "dim": n}, ...]} in (d, w) order.
nlohmann::json character_to_json(const GradedCharacter& ch);

/// "2,0,1" -> {2, 0, 1}. Empty text gives an empty list. Throws
/// std::invalid_argument on malformed input.
std::vector<int> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace fusionq
