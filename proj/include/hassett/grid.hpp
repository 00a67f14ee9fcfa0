#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hassett/space.hpp"

namespace hassett {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct GridOptions {
  std::vector<int> genera{1, 2, 3};
  int min_marks = 0;
  int max_marks = 5;
  int samples_per_cell = 20;
  int reduction_maps_per_cell = 50;
  int chains_per_cell = 30;
  std::uint64_t seed = kDefaultSeed;
};

/// Deterministic weight samples for one (genus, marks) cell: first the walls
/// (all weights 1, 1/n, 1/2, 1/3) where stable, then seeded draws p/d with
/// d <= 10, deduplicated. A cell admitting no stable space comes back empty.
std::vector<ModuliSpace> cell_spaces(int genus, int marks, const GridOptions& options);

/// Every sampled space, cells ordered by genus then by marking count.
std::vector<ModuliSpace> grid_spaces(const GridOptions& options);

/// Seeded reduction targets for one source: each target weight is
/// min(source weight, fresh draw). A markless space only reduces to itself.
std::vector<ModuliSpace> sample_reduction_targets(const ModuliSpace& source, int count,
                                                  std::uint64_t seed);

/// Seeded two-step reduction chains source -> first -> second.
std::vector<std::pair<ModuliSpace, ModuliSpace>> sample_chains(const ModuliSpace& source,
                                                               int count, std::uint64_t seed);

}  // namespace hassett
