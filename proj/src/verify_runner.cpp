#include "hassett/verify_runner.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "hassett/errors.hpp"

namespace hassett {

namespace {

void append(SuiteResult& suite, VerificationReport report) {
  suite.passed = suite.passed && report.passed;
  suite.reports.push_back(std::move(report));
}

// Generator-by-generator comparison of two linear maps; the report keeps the
// first mismatching image difference.
template <typename Left, typename Right>
void compare_on_generators(VerificationReport& r, const ModuliSpace& domain, Left&& lhs,
                           Right&& rhs) {
  r.passed = true;
  for (const Generator& gen : enumerate_generators(domain)) {
    DivisorClass c(domain);
    c.add(gen, 1);
    DivisorClass diff = lhs(c) - rhs(c);
    if (!diff.is_zero()) {
      r.passed = false;
      r.difference = diff;
      r.detail = "first mismatch at " + gen.str();
      return;
    }
  }
}

VerificationReport full_reduction_pushforward_report(const ModuliSpace& space) {
  VerificationReport r = make_report("full-reduction-pushforward", space);
  ModuliSpace unit = unit_weight_space(space.genus(), space.marks());
  ReductionMap map(unit, space);
  r.params["source"] = unit.str();
  compare_on_generators(
      r, unit, [&](const DivisorClass& c) { return full_reduction_pushforward(space, c); },
      [&](const DivisorClass& c) { return map.pushforward(c); });
  if (r.passed) r.detail = "specialized pushforward tables match the general reduction";
  return r;
}

VerificationReport full_reduction_pullback_report(const ModuliSpace& space) {
  VerificationReport r = make_report("full-reduction-pullback", space);
  ModuliSpace unit = unit_weight_space(space.genus(), space.marks());
  ReductionMap map(unit, space);
  r.params["source"] = unit.str();
  compare_on_generators(
      r, space, [&](const DivisorClass& c) { return full_reduction_pullback(c); },
      [&](const DivisorClass& c) { return map.pullback(c); });
  if (r.passed) r.detail = "specialized pullback tables match the general reduction";
  return r;
}

VerificationReport roundtrip_report(const ModuliSpace& source, const ModuliSpace& target) {
  VerificationReport r = make_report("reduction-roundtrip", source);
  r.params["target"] = target.str();
  ReductionMap map(source, target);
  compare_on_generators(
      r, target,
      [&](const DivisorClass& c) { return map.pushforward(map.pullback(c)); },
      [&](const DivisorClass& c) { return c; });
  if (r.passed) r.detail = "pushforward after pullback is the identity";
  return r;
}

VerificationReport push_functoriality_report(const ModuliSpace& source, const ModuliSpace& mid,
                                             const ModuliSpace& last) {
  VerificationReport r = make_report("pushforward-functoriality", source);
  r.params["mid"] = mid.str();
  r.params["target"] = last.str();
  ReductionMap first_leg(source, mid), second_leg(mid, last), direct(source, last);
  compare_on_generators(
      r, source,
      [&](const DivisorClass& c) { return second_leg.pushforward(first_leg.pushforward(c)); },
      [&](const DivisorClass& c) { return direct.pushforward(c); });
  if (r.passed) r.detail = "two-step pushforward equals the direct pushforward";
  return r;
}

VerificationReport pull_functoriality_report(const ModuliSpace& source, const ModuliSpace& mid,
                                             const ModuliSpace& last) {
  VerificationReport r = make_report("pullback-functoriality", source);
  r.params["mid"] = mid.str();
  r.params["target"] = last.str();
  ReductionMap first_leg(source, mid), second_leg(mid, last), direct(source, last);
  compare_on_generators(
      r, last,
      [&](const DivisorClass& c) { return first_leg.pullback(second_leg.pullback(c)); },
      [&](const DivisorClass& c) { return direct.pullback(c); });
  if (r.passed) r.detail = "two-step pullback equals the direct pullback";
  return r;
}

// Constant target weight for the constant-weight pullback identity: 1/d with d >= max(2, n),
// so n*tau <= 1 holds; clamped under every weight of the space.
Rational sampled_tau(const ModuliSpace& space, std::uint64_t seed, std::string& requested) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(space.genus()),
                    static_cast<std::uint32_t>(space.marks()), std::uint32_t{3}};
  std::mt19937_64 rng(seq);
  long long d = std::max(2, space.marks()) + static_cast<long long>(rng() % 5);
  Rational tau(1, d);
  requested = tau.str();
  for (int i = 1; i <= space.marks(); ++i) tau = std::min(tau, space.weight(i));
  return tau;
}

VerificationReport constant_weight_pullback_report(const ModuliSpace& space, std::uint64_t seed) {
  std::string requested;
  Rational tau = sampled_tau(space, seed, requested);
  VerificationReport r = verify_constant_weight_pullback(space, tau);
  r.params["tau_requested"] = requested;
  return r;
}

void run_nodal_family(SuiteResult& suite, const ModuliSpace& space) {
  for (const Generator& gen : enumerate_nodal_generators(space)) {
    append(suite, verify_nodal_restriction(space, gen.side_genus(), gen.side_set()));
  }
}

void run_coincident_family(SuiteResult& suite, const ModuliSpace& space) {
  for (const MarkSet& merged : enumerate_coincident_subsets(space)) {
    append(suite, verify_coincident_restriction(space, merged));
  }
}

int share_of(int total, int parts, int index) {
  return total / parts + (index < total % parts ? 1 : 0);
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "canonical-class",       "delta-presentations",
      "delta-routes",          "full-reduction-pushforward",
      "full-reduction-pullback",    "reduction-roundtrip",
      "pushforward-functoriality", "pullback-functoriality",
      "nodal-restriction",     "irr-restriction",
      "coincident-restriction", "delta-decomposition",
      "constant-weight-pullback"};
  return names;
}

bool is_identity_name(const std::string& name) {
  const auto& names = identity_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_identity_on_space(const std::string& name, const ModuliSpace& space,
                                  std::uint64_t seed) {
  SuiteResult suite;
  if (name == "canonical-class") {
    append(suite, verify_canonical_polarization(space));
  } else if (name == "delta-presentations") {
    append(suite, verify_delta_presentations(space));
  } else if (name == "delta-routes") {
    append(suite, verify_delta_routes(space));
  } else if (name == "full-reduction-pushforward") {
    append(suite, full_reduction_pushforward_report(space));
  } else if (name == "full-reduction-pullback") {
    append(suite, full_reduction_pullback_report(space));
  } else if (name == "reduction-roundtrip") {
    for (const ModuliSpace& target : sample_reduction_targets(space, 6, seed)) {
      append(suite, roundtrip_report(space, target));
    }
  } else if (name == "pushforward-functoriality") {
    for (const auto& [mid, last] : sample_chains(space, 4, seed)) {
      append(suite, push_functoriality_report(space, mid, last));
    }
  } else if (name == "pullback-functoriality") {
    for (const auto& [mid, last] : sample_chains(space, 4, seed)) {
      append(suite, pull_functoriality_report(space, mid, last));
    }
  } else if (name == "nodal-restriction") {
    run_nodal_family(suite, space);
  } else if (name == "irr-restriction") {
    if (space.genus() >= 1) append(suite, verify_irr_restriction(space));
  } else if (name == "coincident-restriction") {
    run_coincident_family(suite, space);
  } else if (name == "delta-decomposition") {
    append(suite, verify_delta_decomposition(space));
  } else if (name == "constant-weight-pullback") {
    append(suite, constant_weight_pullback_report(space, seed));
  } else {
    throw Error("unknown identity family '" + name + "'");
  }
  return suite;
}

SuiteResult run_grid_suite(const GridOptions& options,
                           std::map<std::string, double>* family_seconds) {
  SuiteResult suite;
  auto timed = [&](const std::string& family, auto&& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    if (family_seconds) {
      (*family_seconds)[family] +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  for (int g : options.genera) {
    for (int n = options.min_marks; n <= options.max_marks; ++n) {
      const std::vector<ModuliSpace> spaces = cell_spaces(g, n, options);
      if (spaces.empty()) continue;
      const int parts = static_cast<int>(spaces.size());
      timed("canonical-class", [&] {
        for (const ModuliSpace& s : spaces) append(suite, verify_canonical_polarization(s));
      });
      timed("delta-presentations", [&] {
        for (const ModuliSpace& s : spaces) append(suite, verify_delta_presentations(s));
      });
      timed("delta-routes", [&] {
        for (const ModuliSpace& s : spaces) append(suite, verify_delta_routes(s));
      });
      timed("full-reduction-pushforward", [&] {
        for (const ModuliSpace& s : spaces) append(suite, full_reduction_pushforward_report(s));
      });
      timed("full-reduction-pullback", [&] {
        for (const ModuliSpace& s : spaces) append(suite, full_reduction_pullback_report(s));
      });
      timed("reduction-roundtrip", [&] {
        for (int i = 0; i < parts; ++i) {
          int want = share_of(options.reduction_maps_per_cell, parts, i);
          for (const ModuliSpace& target :
               sample_reduction_targets(spaces[i], want, options.seed)) {
            append(suite, roundtrip_report(spaces[i], target));
          }
        }
      });
      timed("pushforward-functoriality", [&] {
        for (int i = 0; i < parts; ++i) {
          int want = share_of(options.chains_per_cell, parts, i);
          for (const auto& [mid, last] : sample_chains(spaces[i], want, options.seed)) {
            append(suite, push_functoriality_report(spaces[i], mid, last));
          }
        }
      });
      timed("pullback-functoriality", [&] {
        for (int i = 0; i < parts; ++i) {
          int want = share_of(options.chains_per_cell, parts, i);
          for (const auto& [mid, last] : sample_chains(spaces[i], want, options.seed)) {
            append(suite, pull_functoriality_report(spaces[i], mid, last));
          }
        }
      });
      timed("nodal-restriction", [&] {
        for (const ModuliSpace& s : spaces) run_nodal_family(suite, s);
      });
      timed("irr-restriction", [&] {
        for (const ModuliSpace& s : spaces) {
          if (s.genus() >= 1) append(suite, verify_irr_restriction(s));
        }
      });
      timed("coincident-restriction", [&] {
        for (const ModuliSpace& s : spaces) run_coincident_family(suite, s);
      });
      timed("delta-decomposition", [&] {
        for (const ModuliSpace& s : spaces) append(suite, verify_delta_decomposition(s));
      });
      timed("constant-weight-pullback", [&] {
        for (const ModuliSpace& s : spaces) append(suite, constant_weight_pullback_report(s, options.seed));
      });
    }
  }
  return suite;
}

}  // namespace hassett
