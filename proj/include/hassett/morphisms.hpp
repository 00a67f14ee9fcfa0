#pragma once

#include <vector>

#include "hassett/divisor_class.hpp"
#include "hassett/generator.hpp"
#include "hassett/space.hpp"

namespace hassett {

/// Weight reduction: same genus, same marking count, every target weight
/// bounded by the matching source weight. Divisor classes transfer in both
/// directions; pushforward followed by pullback is the identity on the
/// target, and both directions compose functorially.
class ReductionMap {
 public:
  ReductionMap(ModuliSpace source, ModuliSpace target);

  const ModuliSpace& source() const { return source_; }
  const ModuliSpace& target() const { return target_; }

  DivisorClass pushforward(const DivisorClass& on_source) const;
  DivisorClass pullback(const DivisorClass& on_target) const;

 private:
  DivisorClass push_generator(const Generator& gen) const;
  DivisorClass pull_generator(const Generator& gen) const;

  ModuliSpace source_;
  ModuliSpace target_;
};

/// Independent tables for the reduction whose source has every weight equal
/// to one. Exists purely as a cross-check against ReductionMap; the two code
/// paths share no logic.
DivisorClass full_reduction_pushforward(const ModuliSpace& target,
                                        const DivisorClass& on_unit_space);
DivisorClass full_reduction_pullback(const DivisorClass& on_target);

/// Pullback along the map forgetting the last section of `source`. The class
/// must live on the space obtained from `source` by dropping that section;
/// the remaining weights must agree.
DivisorClass forgetful_pullback(const ModuliSpace& source, const DivisorClass& on_target);

/// A class on a product of two spaces that splits as (pullback from the left
/// factor) + (pullback from the right factor). All restrictions to separating
/// boundary divisors have this shape.
struct PairClass {
  DivisorClass left;
  DivisorClass right;
};

/// Restriction of divisor classes to a separating boundary divisor, written
/// on the two factors glued at a node. The node is a fresh section of weight
/// one appended after the retained sections of each factor.
class NodalBoundaryMap {
 public:
  /// The side data may be either representative of the stratum; the given
  /// side becomes the left factor. Throws InvalidGeneratorError when the
  /// stratum does not exist or is a conventional zero.
  NodalBoundaryMap(ModuliSpace ambient, int side_genus, MarkSet side_marks);

  const ModuliSpace& ambient() const { return ambient_; }
  const Generator& stratum() const { return stratum_; }  // canonical form

  const ModuliSpace& left_space() const { return left_; }
  const ModuliSpace& right_space() const { return right_; }
  int left_node() const { return left_.marks(); }    // index of the node section
  int right_node() const { return right_.marks(); }

  PairClass restrict(const DivisorClass& on_ambient) const;

 private:
  void restrict_generator(const Generator& gen, const Rational& coef, PairClass& out) const;
  int left_index(int ambient_mark) const;
  int right_index(int ambient_mark) const;
  MarkSet left_set(const MarkSet& ambient_marks) const;
  MarkSet right_set(const MarkSet& ambient_marks) const;

  ModuliSpace ambient_;
  int side_genus_;
  MarkSet side_marks_;
  Generator stratum_;
  ModuliSpace left_;
  ModuliSpace right_;
};

/// Domain of the restriction to the non-separating boundary divisor: genus
/// drops by one and the two preimages of the node become sections of weight
/// one (the last two marks).
ModuliSpace irr_gluing_space(const ModuliSpace& ambient);

/// Restriction of a class to the non-separating boundary divisor, written on
/// the gluing space. Requires ambient genus >= 1.
DivisorClass irr_restriction(const DivisorClass& on_ambient);

/// Restriction of divisor classes to the locus where all sections in a set
/// coincide (subset weight <= 1, at least two sections). That locus is a copy
/// of the space where the set is replaced by one section carrying the total
/// weight, appended after the retained sections.
class CoincidentMap {
 public:
  CoincidentMap(ModuliSpace ambient, MarkSet merged);

  const ModuliSpace& ambient() const { return ambient_; }
  const ModuliSpace& target() const { return target_; }
  const MarkSet& merged() const { return merged_; }
  int merged_index() const { return target_.marks(); }  // the appended section

  /// Partial: defined only when every separating boundary generator in the
  /// class carries one common coefficient (the non-separating boundary moves
  /// independently). Throws PartialDomainError otherwise.
  DivisorClass restrict(const DivisorClass& on_ambient) const;

 private:
  int target_index(int ambient_mark) const;

  ModuliSpace ambient_;
  MarkSet merged_;
  ModuliSpace target_;
};

}  // namespace hassett
