#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hassett/grid.hpp"
#include "hassett/lcm_models.hpp"

namespace hassett {

struct SuiteResult {
  std::vector<VerificationReport> reports;
  bool passed = true;
};

/// The identity families the runner knows, in canonical order.
const std::vector<std::string>& identity_names();
bool is_identity_name(const std::string& name);

/// Runs one family on one space. Families needing auxiliary data (reduction
/// targets, chains, the constant weight tau) derive it deterministically from
/// the seed. Throws Error for an unknown family name.
SuiteResult run_identity_on_space(const std::string& name, const ModuliSpace& space,
                                  std::uint64_t seed);

/// Runs every family over the sampled grid. When family_seconds is non-null,
/// wall-clock time per family accumulates into it (never into the reports, so
/// output stays byte-reproducible).
SuiteResult run_grid_suite(const GridOptions& options,
                           std::map<std::string, double>* family_seconds = nullptr);

}  // namespace hassett
