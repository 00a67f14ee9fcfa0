#include "hassett/relative.hpp"

#include <sstream>

#include "hassett/errors.hpp"
#include "hassett/generator.hpp"

namespace hassett {

RelativeExpression RelativeExpression::omega(const ModuliSpace& space) {
  RelativeExpression e(space);
  e.omega_ = 1;
  return e;
}

RelativeExpression RelativeExpression::section(const ModuliSpace& space, int mark) {
  if (mark < 1 || mark > space.marks()) {
    throw InvalidGeneratorError("no section " + std::to_string(mark) + " on " + space.str());
  }
  RelativeExpression e(space);
  e.sections_[mark] = 1;
  return e;
}

Rational RelativeExpression::section_coefficient(int mark) const {
  auto it = sections_.find(mark);
  return it == sections_.end() ? Rational(0) : it->second;
}

RelativeExpression& RelativeExpression::operator+=(const RelativeExpression& o) {
  if (!(o.space_ == space_)) {
    throw SpaceMismatchError("relative classes on " + space_.str() + " and " + o.space_.str());
  }
  omega_ += o.omega_;
  for (const auto& [mark, coef] : o.sections_) {
    Rational& slot = sections_[mark];
    slot += coef;
    if (slot.is_zero()) sections_.erase(mark);
  }
  return *this;
}

RelativeExpression& RelativeExpression::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    omega_ = 0;
    sections_.clear();
    return *this;
  }
  omega_ *= scalar;
  for (auto& [mark, coef] : sections_) coef *= scalar;
  return *this;
}

std::string RelativeExpression::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coef, const std::string& name) {
    if (coef.is_zero()) return;
    Rational mag = coef.abs();
    if (first) {
      if (coef.sign() < 0) os << "-";
      first = false;
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << name;
  };
  emit(omega_, "omega");
  for (const auto& [mark, coef] : sections_) emit(coef, "s(" + std::to_string(mark) + ")");
  return first ? "0" : os.str();
}

DivisorClass push_quadratic(const RelativeExpression& a, const RelativeExpression& b) {
  const ModuliSpace& space = a.space();
  if (!(b.space() == space)) {
    throw SpaceMismatchError("relative classes on " + space.str() + " and " + b.space().str());
  }
  const Rational one(1);
  DivisorClass out(space);
  out.add(Generator::kappa(), a.omega_coefficient() * b.omega_coefficient());
  for (int i = 1; i <= space.marks(); ++i) {
    Rational ai = a.section_coefficient(i);
    Rational bi = b.section_coefficient(i);
    // omega.s_i from either side, then the self-intersection s_i.s_i
    Rational psi_coef = a.omega_coefficient() * bi + ai * b.omega_coefficient() - ai * bi;
    out.add(Generator::psi(i), psi_coef);
    for (int j = i + 1; j <= space.marks(); ++j) {
      if (space.weight(i) + space.weight(j) > one) continue;  // sections never meet
      Rational cross = ai * b.section_coefficient(j) + a.section_coefficient(j) * bi;
      out.add(Generator::section_pair(i, j), cross);
    }
  }
  return out;
}

DivisorClass push_against_section(const RelativeExpression& a, int mark) {
  return push_quadratic(a, RelativeExpression::section(a.space(), mark));
}

}  // namespace hassett
