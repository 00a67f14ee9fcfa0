#include "hassett/divisor_class.hpp"

#include <sstream>

#include "hassett/errors.hpp"

namespace hassett {

Rational DivisorClass::coefficient(const Generator& gen) const {
  auto it = terms_.find(gen);
  return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::add(const Generator& gen, const Rational& coefficient) {
  if (coefficient.is_zero()) return *this;
  if (!is_valid_generator(space_, gen)) {
    throw InvalidGeneratorError("generator " + gen.str() + " is not valid on " + space_.str());
  }
  Rational& slot = terms_[gen];
  slot += coefficient;
  if (slot.is_zero()) terms_.erase(gen);
  return *this;
}

DivisorClass& DivisorClass::add(const std::optional<Generator>& gen,
                                const Rational& coefficient) {
  if (gen) add(*gen, coefficient);
  return *this;  // absent generator = conventional zero
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_space(o, space_, "class addition");
  for (const auto& [gen, coef] : o.terms_) add(gen, coef);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_space(o, space_, "class subtraction");
  for (const auto& [gen, coef] : o.terms_) add(gen, -coef);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [gen, coef] : terms_) coef *= scalar;
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out(*this);
  for (auto& [gen, coef] : out.terms_) coef = -coef;
  return out;
}

std::string DivisorClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [gen, coef] : terms_) {
    Rational mag = coef.abs();
    if (first) {
      if (coef.sign() < 0) os << "-";
      first = false;
    } else {
      os << (coef.sign() < 0 ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << gen.str();
  }
  return os.str();
}

DivisorClass make_class(const ModuliSpace& space,
                        std::vector<std::pair<Generator, Rational>> terms) {
  DivisorClass out(space);
  for (const auto& [gen, coef] : terms) out.add(gen, coef);
  return out;
}

AggregateClasses aggregate_classes(const ModuliSpace& space) {
  AggregateClasses agg{DivisorClass(space), DivisorClass(space), DivisorClass(space)};
  if (space.genus() >= 1) agg.nodal.add(Generator::irr(), 1);
  for (const Generator& gen : enumerate_nodal_generators(space)) agg.nodal.add(gen, 1);
  for (const Generator& gen : enumerate_section_pairs(space)) agg.section.add(gen, 1);
  for (int i = 1; i <= space.marks(); ++i) agg.psi.add(Generator::psi(i), 1);
  return agg;
}

DivisorClass normal_form(const DivisorClass& c) {
  Rational k = c.coefficient(Generator::kappa());
  if (k.is_zero()) return c;
  DivisorClass out = c;
  out.add(Generator::kappa(), -k);
  // kappa = 12*lambda - D_nod
  out.add(Generator::lambda(), Rational(12) * k);
  out -= k * aggregate_classes(c.space()).nodal;
  return out;
}

RelationSet::RelationSet(ModuliSpace space,
                         std::vector<std::pair<Generator, DivisorClass>> rules)
    : space_(std::move(space)), rules_(std::move(rules)) {
  for (auto& [gen, replacement] : rules_) {
    if (!is_valid_generator(space_, gen)) {
      throw InvalidGeneratorError("relation rewrites invalid generator " + gen.str());
    }
    if (gen.kind() == GeneratorKind::Kappa) {
      throw InvalidGeneratorError("kappa is already eliminated by the built-in relation");
    }
    require_space(replacement, space_, "relation replacement");
    replacement = normal_form(replacement);
  }
  // Single-pass substitution only works when no replacement mentions a
  // rewritten generator; reject rule sets that would need iteration.
  for (const auto& [gen, replacement] : rules_) {
    (void)gen;
    for (const auto& [lhs, unused] : rules_) {
      (void)unused;
      if (!replacement.coefficient(lhs).is_zero()) {
        throw InvalidGeneratorError("relation replacement mentions rewritten generator " +
                                    lhs.str());
      }
    }
  }
}

DivisorClass RelationSet::apply(const DivisorClass& c) const {
  DivisorClass out = normal_form(c);
  for (const auto& [gen, replacement] : rules_) {
    Rational coef = out.coefficient(gen);
    if (coef.is_zero()) continue;
    out.add(gen, -coef);
    out += coef * replacement;
  }
  return out;
}

DivisorClass normal_form(const DivisorClass& c, const RelationSet& relations) {
  require_space(c, relations.space(), "relation application");
  return relations.apply(c);
}

bool classes_equal(const DivisorClass& a, const DivisorClass& b) {
  require_space(b, a.space(), "class comparison");
  return normal_form(a - b).is_zero();
}

bool classes_equal(const DivisorClass& a, const DivisorClass& b, const RelationSet& relations) {
  require_space(b, a.space(), "class comparison");
  return normal_form(a - b, relations).is_zero();
}

void require_space(const DivisorClass& c, const ModuliSpace& expected, const char* what) {
  if (!(c.space() == expected)) {
    throw SpaceMismatchError(std::string(what) + ": class on " + c.space().str() +
                             ", expected " + expected.str());
  }
}

}  // namespace hassett
