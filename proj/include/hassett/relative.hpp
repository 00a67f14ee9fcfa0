#pragma once

#include <map>
#include <string>

#include "hassett/divisor_class.hpp"
#include "hassett/rational.hpp"
#include "hassett/space.hpp"

namespace hassett {

/// A rational combination of the relative dualizing class and the section
/// classes on the universal curve over a space. Only linear expressions are
/// represented; products are consumed by push_quadratic.
class RelativeExpression {
 public:
  static RelativeExpression omega(const ModuliSpace& space);
  static RelativeExpression section(const ModuliSpace& space, int mark);

  const ModuliSpace& space() const { return space_; }
  const Rational& omega_coefficient() const { return omega_; }
  Rational section_coefficient(int mark) const;

  RelativeExpression& operator+=(const RelativeExpression& o);
  RelativeExpression& operator*=(const Rational& scalar);
  friend RelativeExpression operator+(RelativeExpression a, const RelativeExpression& b) {
    return a += b;
  }
  friend RelativeExpression operator*(const Rational& scalar, RelativeExpression e) {
    return e *= scalar;
  }

  std::string str() const;  // "2*omega + s(1) - 1/2*s(2)"

 private:
  explicit RelativeExpression(ModuliSpace space) : space_(std::move(space)) {}
  ModuliSpace space_;
  Rational omega_;
  std::map<int, Rational> sections_;
};

/// Fiberwise intersection number of two relative classes, pushed down to the
/// base: omega.omega gives kappa, omega.s_i gives psi_i, s_i.s_i gives
/// -psi_i, and two distinct sections meet exactly in the coincident-section
/// divisor (zero when their weights forbid coinciding).
DivisorClass push_quadratic(const RelativeExpression& a, const RelativeExpression& b);

/// push_quadratic against a single section class.
DivisorClass push_against_section(const RelativeExpression& a, int mark);

}  // namespace hassett
