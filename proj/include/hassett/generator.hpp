#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hassett/space.hpp"

namespace hassett {

enum class GeneratorKind : int {
  Kappa = 0,
  Lambda = 1,
  Psi = 2,
  BoundaryIrr = 3,
  BoundaryNodal = 4,
  SectionPair = 5,
};

/// One formal generator of the divisor-class group of a space.
///
/// Separating boundary generators D(j;I) are kept in canonical form: a class
/// never stores both a representative and its flip (g-j, complement). Use
/// normalize_nodal_index to construct them; the raw nodal() factory performs
/// no validation and is meant for enumeration/normalization internals.
class Generator {
 public:
  static Generator kappa() { return Generator(GeneratorKind::Kappa); }
  static Generator lambda() { return Generator(GeneratorKind::Lambda); }
  static Generator irr() { return Generator(GeneratorKind::BoundaryIrr); }
  static Generator psi(int mark);
  static Generator nodal(int side_genus, MarkSet side_set);
  static Generator section_pair(int first, int second);  // sorts the pair

  GeneratorKind kind() const { return kind_; }
  int psi_index() const { return a_; }
  int side_genus() const { return a_; }
  const MarkSet& side_set() const { return set_; }
  int first() const { return a_; }
  int second() const { return b_; }

  std::string str() const;

  int compare(const Generator& o) const;
  friend bool operator==(const Generator& a, const Generator& b) { return a.compare(b) == 0; }
  friend bool operator<(const Generator& a, const Generator& b) { return a.compare(b) < 0; }

 private:
  explicit Generator(GeneratorKind kind) : kind_(kind) {}
  GeneratorKind kind_;
  int a_ = 0;
  int b_ = 0;
  MarkSet set_;
};

/// True when the generator exists on the space and (for separating boundary
/// generators) is the canonical representative.
bool is_valid_generator(const ModuliSpace& space, const Generator& gen);

/// Does the stratum with the given side data exist on the space? Bounds are
/// assumed checked. A genus-0 side must carry subset weight > 1.
bool nodal_stratum_exists(const ModuliSpace& space, int side_genus, const MarkSet& side_set);

/// Canonical form of a separating boundary index pair.
///
/// Returns nullopt when the convention forces the class to vanish (a genus-0
/// side with at most one marking, on either representative). Throws
/// InvalidGeneratorError when the indices are out of range or the stratum does
/// not exist (a genus-0 side with >= 2 markings of subset weight <= 1).
std::optional<Generator> normalize_nodal_index(const ModuliSpace& space, int side_genus,
                                               const MarkSet& side_set);

/// Coincident-section generator; requires weight(i) + weight(j) <= 1.
Generator make_section_pair(const ModuliSpace& space, int first, int second);

Generator make_psi(const ModuliSpace& space, int mark);

/// Every generator of the space, in canonical order: kappa, lambda, psi(1..n),
/// Dirr (genus >= 1), separating boundary generators, coincident-section
/// generators.
std::vector<Generator> enumerate_generators(const ModuliSpace& space);

/// Canonical separating boundary generators only (same order as above).
std::vector<Generator> enumerate_nodal_generators(const ModuliSpace& space);

/// Valid coincident-section generators only.
std::vector<Generator> enumerate_section_pairs(const ModuliSpace& space);

/// Subsets of >= 2 markings with subset weight <= 1, i.e. the index sets of
/// nonempty coincident-section loci. Found by pruned search, so large mark
/// counts stay cheap as long as few subsets qualify.
std::vector<MarkSet> enumerate_coincident_subsets(const ModuliSpace& space);

}  // namespace hassett
