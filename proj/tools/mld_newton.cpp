// mld-newton: minimal log discrepancies of monomial R-ideals on the plane.
//
//   mld-newton mld     --input FILE
//   mld-newton witness --input FILE [--text]
//   mld-newton bound   --input FILE [--json]
//   mld-newton gamma   --input FILE [--text]
//   mld-newton oracle  --input FILE [--radius N] [--text]
//   mld-newton family  ex15|ex16 --n N [--out PREFIX]
//   mld-newton verify  (--input FILE [--expected FILE] | --random N --seed S) [--json]
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mldn/family.hpp"
#include "mldn/io.hpp"
#include "mldn/verify.hpp"
#include "mldn/witness.hpp"

namespace {

using namespace mldn;

constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

struct Options {
  std::string input;
  std::string expected;
  std::string out;
  std::string family;
  std::int64_t radius = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t random = 0;
  bool json = false;
  bool text = false;
};

// Input errors: malformed files and instances that are not valid R-ideals.
bool is_input_error(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::EmptyIdeal:
    case Errc::InvalidIdeal:
    case Errc::EmptySet:
    case Errc::InvariantViolation:
    case Errc::RadiusTooSmall:
      return true;
    default:
      return false;
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Instance load_instance(const std::string& path) {
  Instance inst = instance_from_json(read_json_file(path));
  if (inst.id.empty()) inst.id = path;
  return inst;
}

int cmd_mld(const Options& o) {
  Instance inst = load_instance(o.input);
  std::cout << full_solve(inst.rideal, inst.coefficient_override()).mld.str() << '\n';
  return 0;
}

int cmd_witness(const Options& o) {
  Instance inst = load_instance(o.input);
  WitnessResult w = full_solve(inst.rideal, inst.coefficient_override());
  if (o.text) {
    std::cout << "mld=" << w.mld.str() << " divisor=" << w.divisor << " logdisc=" << w.logdisc
              << " bound=" << w.bound << " case=" << case_name(w.path) << '\n';
  } else {
    print(to_json(w));
  }
  return 0;
}

GammaResult invariants_from_file(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("I")) return gamma_of(coefficient_set_from_json(j));
  Instance inst = instance_from_json(j);
  return detail::invariants_for(inst.rideal, inst.coefficient_override());
}

int cmd_bound(const Options& o) {
  GammaResult g = invariants_from_file(o.input);
  std::int64_t nonneg = bound_nonneg(g.e, g.gamma);
  std::int64_t minus_inf = bound_minus_inf(g.e, g.gamma);
  if (o.json) {
    print({{"e", to_string(g.e)}, {"gamma", to_string(g.gamma)}, {"bound_nonneg", nonneg}, {"bound_minus_inf", minus_inf}});
  } else {
    std::cout << "e=" << to_string(g.e) << " gamma=" << to_string(g.gamma) << " bound_nonneg=" << nonneg
              << " bound_minus_inf=" << minus_inf << '\n';
  }
  return 0;
}

int cmd_gamma(const Options& o) {
  GammaResult g = gamma_of(coefficient_set_from_json(read_json_file(o.input)));
  if (o.text) {
    std::cout << "e=" << to_string(g.e) << " gamma=" << to_string(g.gamma) << '\n';
  } else {
    print(to_json(g));
  }
  return 0;
}

int cmd_oracle(const Options& o) {
  Instance inst = load_instance(o.input);
  validate(inst.rideal);
  NewtonPolygon poly = weighted_minkowski_sum(inst.rideal);
  std::int64_t radius = o.radius;
  if (radius == 0) {
    GammaResult g = detail::invariants_for(inst.rideal, inst.coefficient_override());
    radius = std::max<std::int64_t>(2, contains_one(poly) ? bound_nonneg(g.e, g.gamma) : bound_minus_inf(g.e, g.gamma));
  }
  OracleReport r = brute_force_oracle(poly, radius);
  if (o.text) {
    std::cout << "radius=" << r.radius << " min_value=" << to_string(r.min_value)
              << " argmins=" << r.argmins.size() << " any_negative=" << (r.any_negative ? "true" : "false") << '\n';
  } else {
    print(to_json(r));
  }
  return 0;
}

int cmd_family(const Options& o) {
  Family kind = o.family == "ex15" ? Family::Ex15 : Family::Ex16;
  FamilyCase fc;
  try {
    fc = family_case(kind, o.n);
  } catch (const Error& e) {
    std::cerr << "error: field 'n': " << e.what() << '\n';
    return kBadInput;
  }
  if (o.out.empty()) {
    print({{"instance", to_json(fc.instance)}, {"expected", to_json(fc.expected)}});
    return 0;
  }
  for (auto [path, body] : {std::pair{o.out + ".json", to_json(fc.instance)},
                            std::pair{o.out + ".expected.json", to_json(fc.expected)}}) {
    std::ofstream f(path);
    if (!(f << body.dump(2) << '\n')) {
      std::cerr << "error: cannot write " << path << '\n';
      return kBadInput;
    }
    std::cout << path << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<VerifyReport> reports;
  if (!o.input.empty()) {
    Json j = read_json_file(o.input);
    std::vector<Instance> instances;
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        instances.push_back(instance_from_json(j[i]));
        if (instances.back().id.empty()) instances.back().id = o.input + "#" + std::to_string(i);
      }
    } else {
      instances.push_back(instance_from_json(j));
      if (instances.back().id.empty()) instances.back().id = o.input;
    }
    if (!o.expected.empty()) {
      if (instances.size() != 1) {
        std::cerr << "error: field 'expected': needs a single-instance input\n";
        return kBadInput;
      }
      Expected exp = expected_from_json(read_json_file(o.expected));
      reports.push_back(verify_instance(instances[0], exp, worker_count()));
    } else {
      reports = verify_all(instances);
    }
  } else {
    InstanceSampler sampler(o.seed);
    std::vector<Instance> instances;
    for (std::int64_t i = 0; i < o.random; ++i) instances.push_back(sampler.next());
    reports = verify_all(instances);
  }
  int rc = 0;
  for (const auto& r : reports) {
    if (o.json) std::cout << to_json(r).dump() << '\n';
    else std::cout << to_text(r) << '\n';
    if (r.status != VerifyStatus::Ok) rc = kVerifyFailed;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal log discrepancies of monomial R-ideals via Newton polygons"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* t = sub->add_flag("--text", o.text, "plain text output");
    j->excludes(t);
  };
  auto add_input = [&](CLI::App* sub) { return sub->add_option("--input", o.input, "instance JSON file"); };

  auto* mld = app.add_subcommand("mld", "print the mld (rational or -inf)");
  add_input(mld)->required();
  add_format(mld);

  auto* witness = app.add_subcommand("witness", "construct a witness divisor within the bound");
  add_input(witness)->required();
  add_format(witness);

  auto* bound = app.add_subcommand("bound", "e, gamma and both bounds for an instance or {\"I\": [...]} file");
  add_input(bound)->required();
  add_format(bound);

  auto* gamma = app.add_subcommand("gamma", "e and gamma of a coefficient set {\"I\": [...]}");
  add_input(gamma)->required();
  add_format(gamma);

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum over 1 <= p_x + p_y <= radius");
  add_input(oracle)->required();
  oracle->add_option("--radius", o.radius, "search radius (default: the bound)")->check(CLI::Range(2, 1 << 30));
  add_format(oracle);

  auto* family = app.add_subcommand("family", "emit an optimal-bound family instance and its expected values");
  family->add_option("kind", o.family, "ex15 or ex16")->required()->check(CLI::IsMember({"ex15", "ex16"}));
  family->add_option("--n", o.n, "family parameter")->required();
  family->add_option("--out", o.out, "write PREFIX.json and PREFIX.expected.json");

  auto* verify = app.add_subcommand("verify", "check witnesses against the oracle at radius = bound");
  auto* vin = add_input(verify);
  verify->add_option("--expected", o.expected, "expected-values JSON for a single instance")->needs(vin);
  auto* vrand = verify->add_option("--random", o.random, "number of seeded random instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "sampler seed")->needs(vrand);
  vin->excludes(vrand);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }
  if (verify->parsed() && o.input.empty() && o.random == 0 && verify->count("--random") == 0) {
    std::cerr << "error: verify needs --input or --random\n";
    return kBadInput;
  }

  try {
    if (mld->parsed()) return cmd_mld(o);
    if (witness->parsed()) return cmd_witness(o);
    if (bound->parsed()) return cmd_bound(o);
    if (gamma->parsed()) return cmd_gamma(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (family->parsed()) return cmd_family(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kBadInput : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
