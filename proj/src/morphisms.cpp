#include "hassett/morphisms.hpp"

#include <array>
#include <optional>
#include <utility>

#include "hassett/errors.hpp"

namespace hassett {

namespace {

struct SideRep {
  int genus;
  MarkSet marks;
};

// Both representations (side genus, side marks) of a separating stratum.
std::array<SideRep, 2> stratum_sides(const ModuliSpace& space, const Generator& gen) {
  const MarkSet& s = gen.side_set();
  return {SideRep{gen.side_genus(), s},
          SideRep{space.genus() - gen.side_genus(), s.complement_in(space.marks())}};
}

// The side of a source stratum that degenerates under smaller weights: genus
// zero with new subset weight <= 1. Stability of the new weights guarantees
// at most one side qualifies.
std::optional<MarkSet> collapsing_side(const ModuliSpace& space, const Generator& gen,
                                       const WeightDatum& new_weights) {
  for (const SideRep& side : stratum_sides(space, gen)) {
    if (side.genus == 0 && new_weights.subset_weight(side.marks) <= Rational(1)) {
      return side.marks;
    }
  }
  return std::nullopt;
}

Generator pair_from_set(const MarkSet& two) {
  std::vector<int> e = two.elements();
  return Generator::section_pair(e[0], e[1]);
}

// Adds the canonical form of the named stratum when it exists; silently skips
// both nonexistent strata and conventional zeroes.
void add_stratum_if_exists(DivisorClass& out, int side_genus, const MarkSet& side_marks,
                           const Rational& coef) {
  const ModuliSpace& space = out.space();
  if (!nodal_stratum_exists(space, side_genus, side_marks)) return;
  out.add(normalize_nodal_index(space, side_genus, side_marks), coef);
}

}  // namespace

ReductionMap::ReductionMap(ModuliSpace source, ModuliSpace target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.genus() != target_.genus() || source_.marks() != target_.marks()) {
    throw InvalidMorphismError("reduction needs equal genus and marking count, got " +
                               source_.str() + " -> " + target_.str());
  }
  for (int i = 1; i <= source_.marks(); ++i) {
    if (target_.weight(i) > source_.weight(i)) {
      throw InvalidMorphismError("reduction cannot raise the weight of mark " +
                                 std::to_string(i) + ": " + source_.str() + " -> " +
                                 target_.str());
    }
  }
}

DivisorClass ReductionMap::push_generator(const Generator& gen) const {
  DivisorClass out(target_);
  switch (gen.kind()) {
    case GeneratorKind::Lambda:
    case GeneratorKind::BoundaryIrr:
    case GeneratorKind::SectionPair:
      out.add(gen, 1);
      break;
    case GeneratorKind::Kappa:
      out.add(Generator::kappa(), 1);
      // minus the image of every stratum contracted onto a section collision
      for (const Generator& nod : enumerate_nodal_generators(source_)) {
        auto side = collapsing_side(source_, nod, target_.weights());
        if (side && side->count() == 2) out.add(pair_from_set(*side), -1);
      }
      break;
    case GeneratorKind::Psi:
      out.add(gen, 1);
      for (const Generator& nod : enumerate_nodal_generators(source_)) {
        auto side = collapsing_side(source_, nod, target_.weights());
        if (side && side->count() == 2 && side->contains(gen.psi_index())) {
          out.add(pair_from_set(*side), 1);
        }
      }
      break;
    case GeneratorKind::BoundaryNodal: {
      auto side = collapsing_side(source_, gen, target_.weights());
      if (!side) {
        out.add(gen, 1);  // stratum survives, same canonical form
      } else if (side->count() == 2) {
        out.add(pair_from_set(*side), 1);
      }
      // a collapsing side with >= 3 sections drops to codimension >= 2
      break;
    }
  }
  return out;
}

DivisorClass ReductionMap::pull_generator(const Generator& gen) const {
  DivisorClass out(source_);
  switch (gen.kind()) {
    case GeneratorKind::Lambda:
    case GeneratorKind::BoundaryIrr:
    case GeneratorKind::BoundaryNodal:
      out.add(gen, 1);
      break;
    case GeneratorKind::Kappa:
      out.add(Generator::kappa(), 1);
      for (const Generator& nod : enumerate_nodal_generators(source_)) {
        if (collapsing_side(source_, nod, target_.weights())) out.add(nod, 1);
      }
      break;
    case GeneratorKind::Psi:
      out.add(gen, 1);
      for (const Generator& nod : enumerate_nodal_generators(source_)) {
        auto side = collapsing_side(source_, nod, target_.weights());
        if (side && side->contains(gen.psi_index())) out.add(nod, -1);
      }
      break;
    case GeneratorKind::SectionPair: {
      MarkSet pair = MarkSet::of({gen.first(), gen.second()});
      if (source_.subset_weight(pair) <= Rational(1)) out.add(gen, 1);
      for (const Generator& nod : enumerate_nodal_generators(source_)) {
        auto side = collapsing_side(source_, nod, target_.weights());
        if (side && pair.subset_of(*side)) out.add(nod, 1);
      }
      break;
    }
  }
  return out;
}

DivisorClass ReductionMap::pushforward(const DivisorClass& on_source) const {
  require_space(on_source, source_, "reduction pushforward");
  DivisorClass out(target_);
  for (const auto& [gen, coef] : on_source.terms()) out += coef * push_generator(gen);
  return out;
}

DivisorClass ReductionMap::pullback(const DivisorClass& on_target) const {
  require_space(on_target, target_, "reduction pullback");
  DivisorClass out(source_);
  for (const auto& [gen, coef] : on_target.terms()) out += coef * pull_generator(gen);
  return out;
}

namespace {

// On the unit-weight space a two-section stratum exists unless the genus is
// zero and fewer than two sections would remain outside it.
bool unit_pair_stratum_exists(const ModuliSpace& space, int marks_outside) {
  return space.genus() >= 1 || marks_outside >= 2;
}

}  // namespace

DivisorClass full_reduction_pushforward(const ModuliSpace& target,
                                        const DivisorClass& on_unit_space) {
  const ModuliSpace unit = unit_weight_space(target.genus(), target.marks());
  require_space(on_unit_space, unit, "full reduction pushforward");
  const int n = target.marks();
  DivisorClass out(target);
  for (const auto& [gen, coef] : on_unit_space.terms()) {
    switch (gen.kind()) {
      case GeneratorKind::Lambda:
      case GeneratorKind::BoundaryIrr:
        out.add(gen, coef);
        break;
      case GeneratorKind::Kappa:
        out.add(gen, coef);
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            if (target.subset_weight(MarkSet::of({i, j})) <= Rational(1) &&
                unit_pair_stratum_exists(target, n - 2)) {
              out.add(Generator::section_pair(i, j), -coef);
            }
          }
        }
        break;
      case GeneratorKind::Psi: {
        out.add(gen, coef);
        int i = gen.psi_index();
        for (int j = 1; j <= n; ++j) {
          if (j != i && target.subset_weight(MarkSet::of({i, j})) <= Rational(1) &&
              unit_pair_stratum_exists(target, n - 2)) {
            out.add(Generator::section_pair(i, j), coef);
          }
        }
        break;
      }
      case GeneratorKind::BoundaryNodal: {
        std::optional<MarkSet> collapsed;
        for (const SideRep& side : stratum_sides(unit, gen)) {
          if (side.genus == 0 && target.subset_weight(side.marks) <= Rational(1)) {
            collapsed = side.marks;
          }
        }
        if (!collapsed) {
          out.add(gen, coef);
        } else if (collapsed->count() == 2) {
          out.add(pair_from_set(*collapsed), coef);
        }
        break;
      }
      case GeneratorKind::SectionPair:
        // unit weights admit no coincident sections
        throw InvalidGeneratorError("section-pair generator on a unit-weight space");
    }
  }
  return out;
}

DivisorClass full_reduction_pullback(const DivisorClass& on_target) {
  const ModuliSpace& target = on_target.space();
  const ModuliSpace unit = unit_weight_space(target.genus(), target.marks());
  const std::vector<MarkSet> light = enumerate_coincident_subsets(target);
  DivisorClass out(unit);
  for (const auto& [gen, coef] : on_target.terms()) {
    switch (gen.kind()) {
      case GeneratorKind::Lambda:
      case GeneratorKind::BoundaryIrr:
      case GeneratorKind::BoundaryNodal:
        out.add(gen, coef);
        break;
      case GeneratorKind::Kappa:
        out.add(gen, coef);
        for (const MarkSet& s : light) add_stratum_if_exists(out, 0, s, coef);
        break;
      case GeneratorKind::Psi:
        out.add(gen, coef);
        for (const MarkSet& s : light) {
          if (s.contains(gen.psi_index())) add_stratum_if_exists(out, 0, s, -coef);
        }
        break;
      case GeneratorKind::SectionPair: {
        MarkSet pair = MarkSet::of({gen.first(), gen.second()});
        for (const MarkSet& s : light) {
          if (pair.subset_of(s)) add_stratum_if_exists(out, 0, s, coef);
        }
        break;
      }
    }
  }
  return out;
}

DivisorClass forgetful_pullback(const ModuliSpace& source, const DivisorClass& on_target) {
  const ModuliSpace& target = on_target.space();
  const int n = target.marks();
  const int p = source.marks();
  if (source.genus() != target.genus() || p != n + 1) {
    throw InvalidMorphismError("forgetting the last section of " + source.str() +
                               " does not give " + target.str());
  }
  for (int i = 1; i <= n; ++i) {
    if (!(source.weight(i) == target.weight(i))) {
      throw InvalidMorphismError("retained weights differ at mark " + std::to_string(i));
    }
  }
  const Rational one(1);
  DivisorClass out(source);
  for (const auto& [gen, coef] : on_target.terms()) {
    switch (gen.kind()) {
      case GeneratorKind::Lambda:
      case GeneratorKind::BoundaryIrr:
        out.add(gen, coef);
        break;
      case GeneratorKind::Kappa:
        out.add(gen, coef);
        for (int i = 1; i <= n; ++i) {
          if (source.weight(i) + source.weight(p) > one) {
            add_stratum_if_exists(out, 0, MarkSet::of({i, p}), coef);
          }
        }
        break;
      case GeneratorKind::Psi: {
        out.add(gen, coef);
        int i = gen.psi_index();
        if (source.weight(i) + source.weight(p) > one) {
          add_stratum_if_exists(out, 0, MarkSet::of({i, p}), -coef);
        }
        break;
      }
      case GeneratorKind::BoundaryNodal: {
        auto plain = normalize_nodal_index(source, gen.side_genus(), gen.side_set());
        auto with_p = normalize_nodal_index(source, gen.side_genus(), gen.side_set().with(p));
        out.add(plain, coef);
        // the two lifts can land on the same stratum (equal-genus split with
        // no retained sections); the preimage is still a single divisor
        if (!(plain && with_p && *plain == *with_p)) out.add(with_p, coef);
        break;
      }
      case GeneratorKind::SectionPair: {
        out.add(gen, coef);
        MarkSet three = MarkSet::of({gen.first(), gen.second(), p});
        if (source.subset_weight(three) > one) add_stratum_if_exists(out, 0, three, coef);
        break;
      }
    }
  }
  return out;
}

namespace {

Generator require_stratum(const ModuliSpace& space, int side_genus, const MarkSet& side_marks) {
  std::optional<Generator> canon = normalize_nodal_index(space, side_genus, side_marks);
  if (!canon) {
    throw InvalidGeneratorError(
        "no boundary divisor here: a genus-0 side would carry fewer than two sections");
  }
  return *canon;
}

ModuliSpace glued_factor(const ModuliSpace& ambient, int genus, const MarkSet& marks) {
  std::vector<Rational> w;
  for (int i : marks.elements()) w.push_back(ambient.weight(i));
  w.push_back(Rational(1));  // the node
  return ModuliSpace(genus, WeightDatum(std::move(w)));
}

}  // namespace

NodalBoundaryMap::NodalBoundaryMap(ModuliSpace ambient, int side_genus, MarkSet side_marks)
    : ambient_(std::move(ambient)),
      side_genus_(side_genus),
      side_marks_(side_marks),
      stratum_(require_stratum(ambient_, side_genus, side_marks)),
      left_(glued_factor(ambient_, side_genus, side_marks)),
      right_(glued_factor(ambient_, ambient_.genus() - side_genus,
                          side_marks.complement_in(ambient_.marks()))) {}

int NodalBoundaryMap::left_index(int ambient_mark) const {
  int rank = 0;
  for (int m : side_marks_.elements()) {
    ++rank;
    if (m == ambient_mark) return rank;
  }
  return 0;
}

int NodalBoundaryMap::right_index(int ambient_mark) const {
  int rank = 0;
  for (int m : side_marks_.complement_in(ambient_.marks()).elements()) {
    ++rank;
    if (m == ambient_mark) return rank;
  }
  return 0;
}

MarkSet NodalBoundaryMap::left_set(const MarkSet& ambient_marks) const {
  MarkSet out;
  for (int m : ambient_marks.elements()) out = out.with(left_index(m));
  return out;
}

MarkSet NodalBoundaryMap::right_set(const MarkSet& ambient_marks) const {
  MarkSet out;
  for (int m : ambient_marks.elements()) out = out.with(right_index(m));
  return out;
}

void NodalBoundaryMap::restrict_generator(const Generator& gen, const Rational& coef,
                                          PairClass& out) const {
  const int p = left_node();
  const int q = right_node();
  switch (gen.kind()) {
    case GeneratorKind::Lambda:
      out.left.add(gen, coef);
      out.right.add(gen, coef);
      break;
    case GeneratorKind::Kappa:
      out.left.add(Generator::kappa(), coef);
      out.left.add(Generator::psi(p), coef);
      out.right.add(Generator::kappa(), coef);
      out.right.add(Generator::psi(q), coef);
      break;
    case GeneratorKind::Psi: {
      int i = gen.psi_index();
      if (side_marks_.contains(i)) {
        out.left.add(Generator::psi(left_index(i)), coef);
      } else {
        out.right.add(Generator::psi(right_index(i)), coef);
      }
      break;
    }
    case GeneratorKind::BoundaryIrr:
      // a genus-0 factor carries no non-separating degenerations
      if (left_.genus() >= 1) out.left.add(gen, coef);
      if (right_.genus() >= 1) out.right.add(gen, coef);
      break;
    case GeneratorKind::SectionPair: {
      bool a = side_marks_.contains(gen.first());
      bool b = side_marks_.contains(gen.second());
      if (a && b) {
        out.left.add(Generator::section_pair(left_index(gen.first()), left_index(gen.second())),
                     coef);
      } else if (!a && !b) {
        out.right.add(
            Generator::section_pair(right_index(gen.first()), right_index(gen.second())), coef);
      }
      // sections on opposite sides of the node never meet
      break;
    }
    case GeneratorKind::BoundaryNodal: {
      if (gen == stratum_) {
        // self-restriction picks up the two sides of the normal bundle; the
        // stratum can additionally reappear inside a factor, which the
        // generic survey below finds (the embeddings matching the stratum
        // itself normalize to conventional zeroes there, so nothing is
        // counted twice)
        out.left.add(Generator::psi(p), -coef);
        out.right.add(Generator::psi(q), -coef);
      }
      const MarkSet comp = side_marks_.complement_in(ambient_.marks());
      const int right_genus = ambient_.genus() - side_genus_;
      const auto sides = stratum_sides(ambient_, gen);
      for (size_t k = 0; k < sides.size(); ++k) {
        const SideRep& rep = sides[k];
        // a markless stratum splitting the genus exactly in half lists the
        // same side twice
        if (k == 1 && rep.genus == sides[0].genus && rep.marks == sides[0].marks) break;
        if (rep.genus <= side_genus_ && rep.marks.subset_of(side_marks_)) {
          out.left.add(normalize_nodal_index(left_, rep.genus, left_set(rep.marks)), coef);
        }
        if (rep.genus <= right_genus && rep.marks.subset_of(comp)) {
          out.right.add(normalize_nodal_index(right_, rep.genus, right_set(rep.marks)), coef);
        }
      }
      break;
    }
  }
}

PairClass NodalBoundaryMap::restrict(const DivisorClass& on_ambient) const {
  require_space(on_ambient, ambient_, "boundary restriction");
  PairClass out{DivisorClass(left_), DivisorClass(right_)};
  for (const auto& [gen, coef] : on_ambient.terms()) restrict_generator(gen, coef, out);
  return out;
}

ModuliSpace irr_gluing_space(const ModuliSpace& ambient) {
  if (ambient.genus() < 1) {
    throw InvalidMorphismError("genus-0 spaces have no non-separating boundary divisor");
  }
  std::vector<Rational> w = ambient.weights().weights();
  w.push_back(Rational(1));
  w.push_back(Rational(1));
  return ModuliSpace(ambient.genus() - 1, WeightDatum(std::move(w)));
}

DivisorClass irr_restriction(const DivisorClass& on_ambient) {
  const ModuliSpace& ambient = on_ambient.space();
  const ModuliSpace glued = irr_gluing_space(ambient);
  const int p = ambient.marks() + 1;
  const int q = ambient.marks() + 2;
  DivisorClass out(glued);
  for (const auto& [gen, coef] : on_ambient.terms()) {
    switch (gen.kind()) {
      case GeneratorKind::Lambda:
      case GeneratorKind::Psi:
      case GeneratorKind::SectionPair:
        out.add(gen, coef);
        break;
      case GeneratorKind::Kappa:
        out.add(gen, coef);
        out.add(Generator::psi(p), coef);
        out.add(Generator::psi(q), coef);
        break;
      case GeneratorKind::BoundaryIrr:
        if (glued.genus() >= 1) out.add(gen, coef);
        out.add(Generator::psi(p), -coef);
        out.add(Generator::psi(q), -coef);
        // separating strata whose node stops separating once the two new
        // sections are glued into a loop
        for (const Generator& nod : enumerate_nodal_generators(glued)) {
          if (nod.side_set().contains(p) != nod.side_set().contains(q)) out.add(nod, coef);
        }
        break;
      case GeneratorKind::BoundaryNodal: {
        auto outside = normalize_nodal_index(glued, gen.side_genus(), gen.side_set());
        std::optional<Generator> inside;
        if (gen.side_genus() >= 1) {
          inside = normalize_nodal_index(glued, gen.side_genus() - 1,
                                         gen.side_set().with(p).with(q));
        }
        out.add(outside, coef);
        // both lifts coincide exactly when the split is genus-symmetric with
        // no sections; the preimage is one divisor, not two
        if (!(outside && inside && *outside == *inside)) out.add(inside, coef);
        break;
      }
    }
  }
  return out;
}

namespace {

ModuliSpace merged_target(const ModuliSpace& ambient, const MarkSet& merged) {
  if (!merged.subset_of(ambient.all_marks()) || merged.count() < 2) {
    throw InvalidMorphismError("coincident-section locus needs >= 2 valid section indices, got " +
                               merged.str() + " on " + ambient.str());
  }
  Rational w = ambient.subset_weight(merged);
  if (w > Rational(1)) {
    throw InvalidMorphismError("sections " + merged.str() + " cannot coincide: total weight " +
                               w.str() + " exceeds 1");
  }
  std::vector<Rational> weights;
  for (int i = 1; i <= ambient.marks(); ++i) {
    if (!merged.contains(i)) weights.push_back(ambient.weight(i));
  }
  weights.push_back(w);
  return ModuliSpace(ambient.genus(), WeightDatum(std::move(weights)));
}

}  // namespace

CoincidentMap::CoincidentMap(ModuliSpace ambient, MarkSet merged)
    : ambient_(std::move(ambient)), merged_(merged), target_(merged_target(ambient_, merged)) {}

int CoincidentMap::target_index(int ambient_mark) const {
  int rank = 0;
  for (int i = 1; i <= ambient_.marks(); ++i) {
    if (merged_.contains(i)) continue;
    ++rank;
    if (i == ambient_mark) return rank;
  }
  return 0;
}

DivisorClass CoincidentMap::restrict(const DivisorClass& on_ambient) const {
  require_space(on_ambient, ambient_, "coincident restriction");
  // Individual separating boundary generators do not restrict to anything
  // expressible here; only their total does. Demand one shared coefficient.
  std::optional<Rational> shared;
  for (const Generator& nod : enumerate_nodal_generators(ambient_)) {
    Rational c = on_ambient.coefficient(nod);
    if (!shared) {
      shared = c;
    } else if (!(*shared == c)) {
      throw PartialDomainError(
          "restriction to a coincident-section locus is defined only when every separating "
          "boundary generator carries the same coefficient");
    }
  }
  const int p = merged_index();
  const Rational one(1);
  DivisorClass out(target_);
  for (const auto& [gen, coef] : on_ambient.terms()) {
    switch (gen.kind()) {
      case GeneratorKind::Kappa:
      case GeneratorKind::Lambda:
      case GeneratorKind::BoundaryIrr:
        out.add(gen, coef);
        break;
      case GeneratorKind::Psi: {
        int i = gen.psi_index();
        out.add(Generator::psi(merged_.contains(i) ? p : target_index(i)), coef);
        break;
      }
      case GeneratorKind::BoundaryNodal:
        break;  // handled through the shared coefficient below
      case GeneratorKind::SectionPair: {
        bool a = merged_.contains(gen.first());
        bool b = merged_.contains(gen.second());
        if (a && b) {
          // the locus lies inside this divisor; self-restriction
          out.add(Generator::psi(p), -coef);
        } else if (!a && !b) {
          out.add(Generator::section_pair(target_index(gen.first()), target_index(gen.second())),
                  coef);
        } else {
          int outside = a ? gen.second() : gen.first();
          if (ambient_.weight(outside) + target_.weight(p) <= one) {
            out.add(Generator::section_pair(target_index(outside), p), coef);
          }
          // otherwise the merged section is too heavy to meet this one
        }
        break;
      }
    }
  }
  if (shared && !shared->is_zero()) {
    for (const Generator& nod : enumerate_nodal_generators(target_)) out.add(nod, *shared);
  }
  return out;
}

}  // namespace hassett
