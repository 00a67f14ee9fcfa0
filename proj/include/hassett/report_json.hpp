#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "hassett/lcm_models.hpp"
#include "hassett/verify_runner.hpp"

namespace hassett {

using ordered_json = nlohmann::ordered_json;

/// [{"generator": "psi(1)", "coefficient": "3/2"}, ...] in canonical
/// generator order; coefficients are exact rational strings.
ordered_json class_to_json(const DivisorClass& c);

ordered_json report_to_json(const VerificationReport& report);

/// Top-level document: {"schema_version": 1, "seed": ..., "reports": [...],
/// "passed": ...}. Deliberately carries no timestamps or timings so equal
/// runs serialize to identical bytes.
ordered_json suite_to_json(const SuiteResult& suite,
                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace hassett
