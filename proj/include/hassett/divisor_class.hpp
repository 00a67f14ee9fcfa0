#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hassett/generator.hpp"
#include "hassett/rational.hpp"
#include "hassett/space.hpp"

namespace hassett {

/// A formal rational combination of generators on one fixed space.
/// Zero coefficients are pruned; every inserted generator is validated
/// against the space. Purely linear operations — no relations are applied
/// until normal_form.
class DivisorClass {
 public:
  explicit DivisorClass(ModuliSpace space) : space_(std::move(space)) {}

  const ModuliSpace& space() const { return space_; }
  const std::map<Generator, Rational>& terms() const { return terms_; }
  Rational coefficient(const Generator& gen) const;
  bool is_zero() const { return terms_.empty(); }

  DivisorClass& add(const Generator& gen, const Rational& coefficient);
  DivisorClass& add(const std::optional<Generator>& gen, const Rational& coefficient);

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& scalar);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& scalar, DivisorClass c) { return c *= scalar; }
  friend DivisorClass operator*(DivisorClass c, const Rational& scalar) { return c *= scalar; }

  /// Raw identity: same space and identical term maps.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  std::string str() const;  // "2*kappa + 3/2*psi(1) - Dsec(1,2)", "0"

 private:
  ModuliSpace space_;
  std::map<Generator, Rational> terms_;
};

DivisorClass make_class(const ModuliSpace& space,
                        std::vector<std::pair<Generator, Rational>> terms);

/// The aggregate combinations D_nod (Dirr plus all separating boundary
/// generators), D_sec (all coincident-section generators) and total psi.
struct AggregateClasses {
  DivisorClass nodal;
  DivisorClass section;
  DivisorClass psi;
};
AggregateClasses aggregate_classes(const ModuliSpace& space);

/// Eliminates kappa via kappa = 12*lambda - D_nod. Idempotent and linear.
DivisorClass normal_form(const DivisorClass& c);

/// Optional per-space rewriting rules applied after the kappa elimination,
/// e.g. extra relic relations a caller wants to quotient by. Each rule maps a
/// generator to a replacement class; replacements may not mention any rule
/// generator (this keeps application a single pass and loop-free).
class RelationSet {
 public:
  RelationSet(ModuliSpace space, std::vector<std::pair<Generator, DivisorClass>> rules);
  const ModuliSpace& space() const { return space_; }
  DivisorClass apply(const DivisorClass& c) const;

 private:
  ModuliSpace space_;
  std::vector<std::pair<Generator, DivisorClass>> rules_;
};

DivisorClass normal_form(const DivisorClass& c, const RelationSet& relations);

/// Equality modulo the built-in relation (and optional extra relations).
/// Throws SpaceMismatchError when the spaces differ.
bool classes_equal(const DivisorClass& a, const DivisorClass& b);
bool classes_equal(const DivisorClass& a, const DivisorClass& b, const RelationSet& relations);

/// Throws SpaceMismatchError unless the class lives on the expected space.
void require_space(const DivisorClass& c, const ModuliSpace& expected, const char* what);

}  // namespace hassett
