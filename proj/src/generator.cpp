#include "hassett/generator.hpp"

#include <algorithm>

#include "hassett/errors.hpp"

namespace hassett {

Generator Generator::psi(int mark) {
  Generator g(GeneratorKind::Psi);
  g.a_ = mark;
  return g;
}

Generator Generator::nodal(int side_genus, MarkSet side_set) {
  Generator g(GeneratorKind::BoundaryNodal);
  g.a_ = side_genus;
  g.set_ = side_set;
  return g;
}

Generator Generator::section_pair(int first, int second) {
  if (first == second) throw InvalidGeneratorError("coincident-section pair needs two distinct markings");
  Generator g(GeneratorKind::SectionPair);
  g.a_ = std::min(first, second);
  g.b_ = std::max(first, second);
  return g;
}

std::string Generator::str() const {
  switch (kind_) {
    case GeneratorKind::Kappa:
      return "kappa";
    case GeneratorKind::Lambda:
      return "lambda";
    case GeneratorKind::Psi:
      return "psi(" + std::to_string(a_) + ")";
    case GeneratorKind::BoundaryIrr:
      return "Dirr";
    case GeneratorKind::BoundaryNodal:
      return "D(" + std::to_string(a_) + ";" + set_.str() + ")";
    case GeneratorKind::SectionPair:
      return "Dsec(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }
  return "?";
}

int Generator::compare(const Generator& o) const {
  if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_) ? -1 : 1;
  if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
  if (kind_ == GeneratorKind::BoundaryNodal) return set_.compare(o.set_);
  if (b_ != o.b_) return b_ < o.b_ ? -1 : 1;
  return 0;
}

namespace {

bool side_in_range(const ModuliSpace& space, int side_genus, const MarkSet& side_set) {
  return side_genus >= 0 && side_genus <= space.genus() &&
         side_set.subset_of(space.all_marks());
}

// Canonical representative test: smaller side genus wins; on a tie the side
// containing the lowest marking is kept (both sides partition all markings).
bool nodal_is_canonical(const ModuliSpace& space, int side_genus, const MarkSet& side_set) {
  int other = space.genus() - side_genus;
  if (side_genus != other) return side_genus < other;
  if (space.marks() == 0) return side_set.empty();
  return side_set.contains(1);
}

}  // namespace

bool nodal_stratum_exists(const ModuliSpace& space, int side_genus, const MarkSet& side_set) {
  const MarkSet other_set = side_set.complement_in(space.marks());
  if (side_genus == 0 && !(space.subset_weight(side_set) > Rational(1))) return false;
  if (space.genus() - side_genus == 0 && !(space.subset_weight(other_set) > Rational(1)))
    return false;
  return true;
}

std::optional<Generator> normalize_nodal_index(const ModuliSpace& space, int side_genus,
                                               const MarkSet& side_set) {
  if (!side_in_range(space, side_genus, side_set))
    throw InvalidGeneratorError("boundary index (" + std::to_string(side_genus) + ";" +
                                side_set.str() + ") out of range on " + space.str());
  const int g = space.genus();
  const MarkSet other_set = side_set.complement_in(space.marks());
  // Convention: a genus-0 side with at most one marking makes the class zero.
  if ((side_genus == 0 && side_set.count() <= 1) || (g - side_genus == 0 && other_set.count() <= 1))
    return std::nullopt;
  if (side_genus == 0 && !(space.subset_weight(side_set) > Rational(1)))
    throw InvalidGeneratorError("boundary stratum (" + std::to_string(side_genus) + ";" +
                                side_set.str() + ") does not exist on " + space.str() +
                                ": genus-0 side needs subset weight > 1, got " +
                                space.subset_weight(side_set).str());
  if (g - side_genus == 0 && !(space.subset_weight(other_set) > Rational(1)))
    throw InvalidGeneratorError("boundary stratum (" + std::to_string(side_genus) + ";" +
                                side_set.str() + ") does not exist on " + space.str() +
                                ": genus-0 side needs subset weight > 1, got " +
                                space.subset_weight(other_set).str());
  if (nodal_is_canonical(space, side_genus, side_set))
    return Generator::nodal(side_genus, side_set);
  return Generator::nodal(g - side_genus, other_set);
}

bool is_valid_generator(const ModuliSpace& space, const Generator& gen) {
  switch (gen.kind()) {
    case GeneratorKind::Kappa:
    case GeneratorKind::Lambda:
      return true;
    case GeneratorKind::Psi:
      return gen.psi_index() >= 1 && gen.psi_index() <= space.marks();
    case GeneratorKind::BoundaryIrr:
      return space.genus() >= 1;
    case GeneratorKind::BoundaryNodal: {
      if (!side_in_range(space, gen.side_genus(), gen.side_set())) return false;
      const MarkSet other = gen.side_set().complement_in(space.marks());
      if (gen.side_genus() == 0 && gen.side_set().count() <= 1) return false;
      if (space.genus() - gen.side_genus() == 0 && other.count() <= 1) return false;
      return nodal_stratum_exists(space, gen.side_genus(), gen.side_set()) &&
             nodal_is_canonical(space, gen.side_genus(), gen.side_set());
    }
    case GeneratorKind::SectionPair: {
      if (gen.first() < 1 || gen.second() > space.marks() || gen.first() >= gen.second())
        return false;
      Rational w = space.weight(gen.first()) + space.weight(gen.second());
      return !(w > Rational(1));
    }
  }
  return false;
}

Generator make_section_pair(const ModuliSpace& space, int first, int second) {
  Generator gen = Generator::section_pair(first, second);
  if (gen.second() > space.marks() || gen.first() < 1)
    throw InvalidGeneratorError("coincident-section pair (" + std::to_string(first) + "," +
                                std::to_string(second) + ") out of range on " + space.str());
  Rational w = space.weight(gen.first()) + space.weight(gen.second());
  if (w > Rational(1))
    throw InvalidGeneratorError("coincident-section divisor needs weight(i)+weight(j) <= 1, got " +
                                w.str() + " for (" + std::to_string(first) + "," +
                                std::to_string(second) + ") on " + space.str());
  return gen;
}

Generator make_psi(const ModuliSpace& space, int mark) {
  if (mark < 1 || mark > space.marks())
    throw InvalidGeneratorError("psi index " + std::to_string(mark) + " out of range on " +
                                space.str());
  return Generator::psi(mark);
}

std::vector<Generator> enumerate_nodal_generators(const ModuliSpace& space) {
  std::vector<Generator> out;
  const int g = space.genus();
  const int n = space.marks();
  const std::uint64_t subset_count = std::uint64_t(1) << n;
  for (int j = 0; 2 * j <= g; ++j) {
    for (std::uint64_t bits = 0; bits < subset_count; ++bits) {
      MarkSet set = MarkSet::from_bits(bits);
      if (!nodal_is_canonical(space, j, set)) continue;
      if (j == 0 && set.count() <= 1) continue;
      if (g - j == 0 && set.complement_in(n).count() <= 1) continue;
      if (!nodal_stratum_exists(space, j, set)) continue;
      out.push_back(Generator::nodal(j, set));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> enumerate_section_pairs(const ModuliSpace& space) {
  std::vector<Generator> out;
  for (int i = 1; i <= space.marks(); ++i)
    for (int j = i + 1; j <= space.marks(); ++j)
      if (!(space.weight(i) + space.weight(j) > Rational(1)))
        out.push_back(Generator::section_pair(i, j));
  return out;
}

namespace {

void gather_coincident(const ModuliSpace& space, int next, MarkSet cur, Rational weight,
                       std::vector<MarkSet>& out) {
  if (cur.count() >= 2) out.push_back(cur);
  for (int i = next; i <= space.marks(); ++i) {
    Rational w2 = weight + space.weight(i);
    if (!(w2 > Rational(1))) gather_coincident(space, i + 1, cur.with(i), w2, out);
  }
}

}  // namespace

std::vector<MarkSet> enumerate_coincident_subsets(const ModuliSpace& space) {
  std::vector<MarkSet> out;
  gather_coincident(space, 1, MarkSet(), Rational(0), out);
  return out;
}

std::vector<Generator> enumerate_generators(const ModuliSpace& space) {
  std::vector<Generator> out;
  out.push_back(Generator::kappa());
  out.push_back(Generator::lambda());
  for (int i = 1; i <= space.marks(); ++i) out.push_back(Generator::psi(i));
  if (space.genus() >= 1) out.push_back(Generator::irr());
  for (const Generator& gen : enumerate_nodal_generators(space)) out.push_back(gen);
  for (const Generator& gen : enumerate_section_pairs(space)) out.push_back(gen);
  return out;
}

}  // namespace hassett
