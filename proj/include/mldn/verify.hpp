#pragma once

// Cross-checks a constructed witness against the brute-force lattice oracle
// run at radius = the witness bound.

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mldn/family.hpp"
#include "mldn/io.hpp"
#include "mldn/mld.hpp"
#include "mldn/witness.hpp"

namespace mldn {

enum class VerifyStatus { Ok, BoundViolation, MldMismatch };

inline std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Ok: return "OK";
    case VerifyStatus::BoundViolation: return "BOUND_VIOLATION";
    case VerifyStatus::MldMismatch: return "MLD_MISMATCH";
  }
  return "?";
}

struct VerifyReport {
  std::string id;
  MldValue mld = MldValue::minus_infinity();
  Divisor divisor;
  std::int64_t logdisc = 0;
  std::int64_t bound = 0;
  std::optional<std::int64_t> oracle_min_logdisc;
  VerifyStatus status = VerifyStatus::Ok;
  std::string detail;
};

inline VerifyReport verify_instance(const Instance& inst, const std::optional<Expected>& expected = {},
                                    unsigned workers = 1) {
  VerifyReport rep;
  rep.id = inst.id;
  WitnessResult w = full_solve(inst.rideal, inst.coefficient_override());
  rep.mld = w.mld;
  rep.divisor = w.divisor;
  rep.logdisc = w.logdisc;
  rep.bound = w.bound;

  auto fail = [&](VerifyStatus s, std::string why) {
    if (rep.status == VerifyStatus::Ok) {
      rep.status = s;
      rep.detail = std::move(why);
    }
  };

  NewtonPolygon poly = weighted_minkowski_sum(inst.rideal);
  std::int64_t radius = std::max<std::int64_t>(w.bound, 2);
  Rat witness_value = log_discrepancy(poly, w.divisor);
  if (w.logdisc > w.bound) fail(VerifyStatus::BoundViolation, "witness log discrepancy exceeds the bound");

  if (w.mld.is_finite()) {
    OracleReport oracle = brute_force_oracle(poly, radius, workers);
    auto best = std::min_element(oracle.argmins.begin(), oracle.argmins.end(), [](const Divisor& a, const Divisor& b) {
      return a.logdisc() != b.logdisc() ? a.logdisc() < b.logdisc() : a < b;
    });
    rep.oracle_min_logdisc = best->logdisc();
    if (oracle.min_value != w.mld.value()) fail(VerifyStatus::MldMismatch, "oracle minimum differs from the mld");
    if (witness_value != w.mld.value()) fail(VerifyStatus::MldMismatch, "witness does not attain the mld");
    if (oracle.any_negative) fail(VerifyStatus::MldMismatch, "oracle found a negative value");
  } else {
    if (witness_value >= 0) fail(VerifyStatus::MldMismatch, "witness value is not negative");
    try {
      rep.oracle_min_logdisc = minimal_computing_logdisc(poly, radius).logdisc;
    } catch (const Error& e) {
      if (e.code() != Errc::NoComputingDivisorInRadius) throw;
      fail(VerifyStatus::BoundViolation, "no negative divisor within the bound");
    }
  }

  if (expected) {
    if (expected->mld != w.mld.str()) fail(VerifyStatus::MldMismatch, "expected mld " + expected->mld);
    if (expected->witness != w.divisor) fail(VerifyStatus::MldMismatch, "expected a different witness");
    if (expected->bound != w.bound) fail(VerifyStatus::MldMismatch, "expected a different bound");
    if (!rep.oracle_min_logdisc || expected->min_logdisc != *rep.oracle_min_logdisc)
      fail(VerifyStatus::MldMismatch, "expected a different minimal computing log discrepancy");
  }
  return rep;
}

/// Verifies all instances, in parallel over instances; output order matches input order.
inline std::vector<VerifyReport> verify_all(const std::vector<Instance>& instances, unsigned workers = worker_count()) {
  std::vector<VerifyReport> out(instances.size());
  unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(instances.size())));
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < instances.size(); i += n) out[i] = verify_instance(instances[i]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::string to_text(const VerifyReport& r) {
  std::string line = r.id + " " + status_name(r.status) + " mld=" + r.mld.str() + " divisor=(" +
                     std::to_string(r.divisor.x) + "," + std::to_string(r.divisor.y) +
                     ") logdisc=" + std::to_string(r.logdisc) + " bound=" + std::to_string(r.bound) +
                     " oracle_min_logdisc=" + (r.oracle_min_logdisc ? std::to_string(*r.oracle_min_logdisc) : "none");
  if (!r.detail.empty()) line += " detail=\"" + r.detail + "\"";
  return line;
}

inline Json to_json(const VerifyReport& r) {
  Json j = {{"id", r.id},
            {"status", status_name(r.status)},
            {"mld", r.mld.str()},
            {"divisor", to_json(r.divisor)},
            {"logdisc", r.logdisc},
            {"bound", r.bound}};
  j["oracle_min_logdisc"] = r.oracle_min_logdisc ? Json(*r.oracle_min_logdisc) : Json(nullptr);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace mldn
