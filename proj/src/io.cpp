#include "fusionq/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fusionq {

using nlohmann::json;

json qpoly_to_json(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"coeffs", coeffs}};
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("QPoly JSON needs a \"coeffs\" array");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + c.dump());
      coeffs.push_back(v);
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw std::invalid_argument("bad coefficient " + c.dump());
    }
  }
  return QPoly(std::move(coeffs));
}

namespace {

json poly_to_json(const RationalPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(format_rational(c));
  return a;
}

RationalPolynomial poly_from_json(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array()) {
    throw std::invalid_argument(std::string("ideal JSON needs a \"") + name + "\" array");
  }
  std::vector<Rational> c;
  for (const auto& x : j[name]) {
    if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) c.emplace_back(x.get<long>());
    else throw std::invalid_argument(std::string("bad coefficient in ") + name + ": " + x.dump());
  }
  return RationalPolynomial(std::move(c));
}

}  // namespace

json ideal_to_json(const ComponentwiseIdeal& ideal) {
  return {{"p_e", poly_to_json(ideal.p_e())}, {"p_h", poly_to_json(ideal.p_h())}, {"p_f", poly_to_json(ideal.p_f())}};
}

ComponentwiseIdeal ideal_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ideal JSON must be an object");
  return {poly_from_json(j, "p_e"), poly_from_json(j, "p_h"), poly_from_json(j, "p_f")};
}

json character_to_json(const GradedCharacter& ch) {
  json entries = json::array();
  for (const auto& [key, n] : ch.table()) entries.push_back({{"degree", key.first}, {"weight", key.second}, {"dim", n}});
  return {{"entries", entries}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("malformed integer '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

}  // namespace fusionq
