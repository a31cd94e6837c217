#pragma once

// JSON interchange. Rationals are always strings ("5/4", "2"); lattice
// points are integer pairs.
//
//   instance: {"id": "...", "factors": [{"exponent": "5/4", "generators": [[4,0],[0,1]]}],
//              "declared_I": ["5/4"]}          (id and declared_I optional)
//   gamma:    {"I": ["2/3", "1/2"]}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mldn/coeffs.hpp"
#include "mldn/mld.hpp"
#include "mldn/newton.hpp"
#include "mldn/witness.hpp"

namespace mldn {

using Json = nlohmann::ordered_json;

struct Instance {
  std::string id;
  RIdeal rideal;
  std::optional<std::vector<Rat>> declared_I;

  std::optional<CoefficientSet> coefficient_override() const {
    if (!declared_I) return std::nullopt;
    return CoefficientSet(*declared_I);
  }
};

namespace detail {

[[noreturn]] inline void bad_field(const std::string& field, const std::string& why) {
  throw Error(Errc::Parse, "field '" + field + "': " + why);
}

inline Rat rat_field(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      bad_field(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  bad_field(field, "expected a rational string such as \"5/4\"");
}

inline std::int64_t int_field(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad_field(field, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::vector<Rat> rat_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of rationals");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_field(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Json to_json(const Rat& r) { return to_string(r); }

inline Json to_json(const RIdeal& rideal) {
  Json factors = Json::array();
  for (const auto& f : rideal.factors) {
    Json gens = Json::array();
    for (const auto& g : f.ideal.generators) gens.push_back({g.x, g.y});
    factors.push_back({{"exponent", to_string(f.exponent)}, {"generators", gens}});
  }
  return {{"factors", factors}};
}

inline RIdeal rideal_from_json(const Json& j) {
  if (!j.is_object()) detail::bad_field("<root>", "expected an object");
  if (!j.contains("factors")) detail::bad_field("factors", "missing");
  const Json& factors = j.at("factors");
  if (!factors.is_array() || factors.empty()) detail::bad_field("factors", "expected a nonempty array");
  RIdeal out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::string base = "factors[" + std::to_string(i) + "]";
    const Json& f = factors[i];
    if (!f.is_object()) detail::bad_field(base, "expected an object");
    if (!f.contains("exponent")) detail::bad_field(base + ".exponent", "missing");
    if (!f.contains("generators")) detail::bad_field(base + ".generators", "missing");
    Factor factor;
    factor.exponent = detail::rat_field(f.at("exponent"), base + ".exponent");
    if (factor.exponent <= 0) detail::bad_field(base + ".exponent", "must be positive");
    const Json& gens = f.at("generators");
    if (!gens.is_array() || gens.empty()) detail::bad_field(base + ".generators", "expected a nonempty array");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::string gname = base + ".generators[" + std::to_string(k) + "]";
      const Json& g = gens[k];
      if (!g.is_array() || g.size() != 2) detail::bad_field(gname, "expected [x, y]");
      LatticePoint pt{detail::int_field(g[0], gname + "[0]"), detail::int_field(g[1], gname + "[1]")};
      if (pt.x < 0 || pt.y < 0) detail::bad_field(gname, "exponents must be nonnegative");
      factor.ideal.generators.push_back(pt);
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

inline Json to_json(const Instance& inst) {
  Json j;
  if (!inst.id.empty()) j["id"] = inst.id;
  j["factors"] = to_json(inst.rideal)["factors"];
  if (inst.declared_I) {
    Json arr = Json::array();
    for (const auto& v : *inst.declared_I) arr.push_back(to_string(v));
    j["declared_I"] = arr;
  }
  return j;
}

inline Instance instance_from_json(const Json& j) {
  Instance out;
  out.rideal = rideal_from_json(j);
  if (j.contains("id")) {
    if (!j.at("id").is_string()) detail::bad_field("id", "expected a string");
    out.id = j.at("id").get<std::string>();
  }
  if (j.contains("declared_I")) {
    auto values = detail::rat_list(j.at("declared_I"), "declared_I");
    if (values.empty()) detail::bad_field("declared_I", "must not be empty");
    for (const auto& v : values)
      if (v <= 0) detail::bad_field("declared_I", "values must be positive");
    CoefficientSet set(values);
    for (const auto& f : out.rideal.factors)
      if (!set.contains(f.exponent))
        detail::bad_field("declared_I", "does not contain exponent " + to_string(f.exponent));
    out.declared_I = std::move(values);
  }
  return out;
}

inline CoefficientSet coefficient_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("I")) detail::bad_field("I", "missing");
  auto values = detail::rat_list(j.at("I"), "I");
  if (values.empty()) detail::bad_field("I", "must not be empty");
  for (const auto& v : values)
    if (v <= 0) detail::bad_field("I", "values must be positive");
  return CoefficientSet(std::move(values));
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

inline Json to_json(const Divisor& d) { return Json::array({d.x, d.y}); }

inline Json to_json(const GammaResult& g) {
  Json witness = Json::object();
  for (const auto& [value, count] : g.witness) witness[to_string(value)] = count;
  return {{"e", to_string(g.e)}, {"gamma", to_string(g.gamma)}, {"witness", witness}};
}

inline Json to_json(const OracleReport& r) {
  Json argmins = Json::array();
  for (const auto& d : r.argmins) argmins.push_back(to_json(d));
  return {{"radius", r.radius}, {"min_value", to_string(r.min_value)}, {"argmins", argmins},
          {"any_negative", r.any_negative}};
}

inline std::string case_name(const WitnessPath& path) {
  if (std::holds_alternative<CaseOne>(path)) return "one";
  if (std::holds_alternative<CaseTwo>(path)) return "two";
  return "minus_infinity";
}

inline Json to_json(const WitnessResult& w) {
  Json j = {{"mld", w.mld.str()},
            {"divisor", to_json(w.divisor)},
            {"logdisc", w.logdisc},
            {"bound", w.bound},
            {"case", case_name(w.path)}};
  if (const auto* two = std::get_if<CaseTwo>(&w.path)) {
    j["reflected"] = two->reflected;
  } else if (const auto* neg = std::get_if<MinusInfinityPath>(&w.path)) {
    j["reflected"] = neg->reflected;
  }
  return j;
}

}  // namespace mldn
