#include "hassett/grid.hpp"

#include <algorithm>
#include <random>

namespace hassett {

namespace {

// The whole identity of the sampling point goes into the seed sequence, so a
// run is reproducible from (seed, cell) alone and different sources within a
// cell draw independent streams.
std::mt19937_64 seeded_rng(std::uint64_t seed, int genus, int marks, std::uint64_t salt,
                           const WeightDatum* weights = nullptr) {
  std::vector<std::uint32_t> material{
      static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(genus), static_cast<std::uint32_t>(marks),
      static_cast<std::uint32_t>(salt),  static_cast<std::uint32_t>(salt >> 32)};
  if (weights) {
    for (const Rational& w : weights->weights()) {
      material.push_back(static_cast<std::uint32_t>(w.num()));
      material.push_back(static_cast<std::uint32_t>(w.den()));
    }
  }
  std::seed_seq seq(material.begin(), material.end());
  return std::mt19937_64(seq);
}

Rational draw_weight(std::mt19937_64& rng) {
  long long d = 2 + static_cast<long long>(rng() % 9);  // denominator 2..10
  long long p = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(d));
  return Rational(p, d);
}

bool stable(int genus, const std::vector<Rational>& weights) {
  Rational s(2 * genus - 2);
  for (const Rational& w : weights) s += w;
  return s > Rational(0);
}

}  // namespace

std::vector<ModuliSpace> cell_spaces(int genus, int marks, const GridOptions& options) {
  std::vector<ModuliSpace> out;
  auto push = [&](const std::vector<Rational>& w) {
    if (!stable(genus, w)) return;
    ModuliSpace space(genus, WeightDatum(w));
    if (std::find(out.begin(), out.end(), space) == out.end()) out.push_back(space);
  };
  if (marks == 0) {
    push({});
    return out;
  }
  push(std::vector<Rational>(marks, Rational(1)));
  push(std::vector<Rational>(marks, Rational(1, marks)));
  push(std::vector<Rational>(marks, Rational(1, 2)));
  push(std::vector<Rational>(marks, Rational(1, 3)));
  std::mt19937_64 rng = seeded_rng(options.seed, genus, marks, 0);
  int attempts = 0;
  const int cap = options.samples_per_cell * 40;
  while (static_cast<int>(out.size()) < options.samples_per_cell && attempts < cap) {
    ++attempts;
    std::vector<Rational> w;
    w.reserve(marks);
    for (int i = 0; i < marks; ++i) w.push_back(draw_weight(rng));
    push(w);
  }
  return out;
}

std::vector<ModuliSpace> grid_spaces(const GridOptions& options) {
  std::vector<ModuliSpace> out;
  for (int g : options.genera) {
    for (int n = options.min_marks; n <= options.max_marks; ++n) {
      for (ModuliSpace& s : cell_spaces(g, n, options)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<ModuliSpace> sample_reduction_targets(const ModuliSpace& source, int count,
                                                  std::uint64_t seed) {
  std::vector<ModuliSpace> out;
  if (count <= 0) return out;
  if (source.marks() == 0) {
    out.push_back(source);
    return out;
  }
  std::mt19937_64 rng =
      seeded_rng(seed, source.genus(), source.marks(), 1, &source.weights());
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> w;
    w.reserve(source.marks());
    for (int i = 1; i <= source.marks(); ++i) {
      w.push_back(std::min(source.weight(i), draw_weight(rng)));
    }
    if (stable(source.genus(), w)) out.emplace_back(source.genus(), WeightDatum(std::move(w)));
  }
  return out;
}

std::vector<std::pair<ModuliSpace, ModuliSpace>> sample_chains(const ModuliSpace& source,
                                                               int count, std::uint64_t seed) {
  std::vector<std::pair<ModuliSpace, ModuliSpace>> out;
  if (count <= 0) return out;
  if (source.marks() == 0) {
    out.emplace_back(source, source);
    return out;
  }
  std::mt19937_64 rng =
      seeded_rng(seed, source.genus(), source.marks(), 2, &source.weights());
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> mid, last;
    mid.reserve(source.marks());
    last.reserve(source.marks());
    for (int i = 1; i <= source.marks(); ++i) {
      mid.push_back(std::min(source.weight(i), draw_weight(rng)));
    }
    for (int i = 0; i < source.marks(); ++i) last.push_back(std::min(mid[i], draw_weight(rng)));
    if (stable(source.genus(), mid) && stable(source.genus(), last)) {
      out.emplace_back(ModuliSpace(source.genus(), WeightDatum(std::move(mid))),
                       ModuliSpace(source.genus(), WeightDatum(std::move(last))));
    }
  }
  return out;
}

}  // namespace hassett
