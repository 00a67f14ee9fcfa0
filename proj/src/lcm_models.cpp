#include "hassett/lcm_models.hpp"

#include <utility>
#include <vector>

#include "hassett/errors.hpp"
#include "hassett/relative.hpp"

namespace hassett {

VerificationReport make_report(std::string identity, const ModuliSpace& space) {
  return VerificationReport{std::move(identity), space,        false,
                            DivisorClass(space), std::nullopt, {},
                            ""};
}

DivisorClass canonical_polarization(const ModuliSpace& space) {
  AggregateClasses agg = aggregate_classes(space);
  DivisorClass out(space);
  out.add(Generator::lambda(), 13);
  out -= Rational(2) * agg.nodal;
  out += agg.psi;
  return out;
}

DivisorClass canonical_polarization_kappa_form(const ModuliSpace& space) {
  AggregateClasses agg = aggregate_classes(space);
  DivisorClass out(space);
  out.add(Generator::kappa(), Rational(13, 12));
  out -= Rational(11, 12) * agg.nodal;
  out += agg.psi;
  return out;
}

DivisorClass delta_class(const ModuliSpace& space) {
  DivisorClass out(space);
  out.add(Generator::kappa(), 2);
  for (int i = 1; i <= space.marks(); ++i) {
    out.add(Generator::psi(i), Rational(1) + space.weight(i));
  }
  return out;
}

DivisorClass delta_class_alternative(const ModuliSpace& space) {
  DivisorClass out = canonical_polarization(space);
  out.add(Generator::lambda(), 11);
  for (int i = 1; i <= space.marks(); ++i) out.add(Generator::psi(i), space.weight(i));
  return out;
}

DivisorClass delta_on_unit(const ModuliSpace& target) {
  DivisorClass out(unit_weight_space(target.genus(), target.marks()));
  out.add(Generator::kappa(), 2);
  for (int i = 1; i <= target.marks(); ++i) {
    out.add(Generator::psi(i), Rational(1) + target.weight(i));
  }
  return out;
}

DivisorClass delta_pushforward(const ModuliSpace& space) {
  DivisorClass out = delta_class(space);
  for (const Generator& pair : enumerate_section_pairs(space)) {
    out.add(pair, space.weight(pair.first()) + space.weight(pair.second()));
  }
  return out;
}

DivisorClass delta_pushforward_via_reduction(const ModuliSpace& space) {
  return full_reduction_pushforward(space, delta_on_unit(space));
}

DivisorClass delta_pushforward_via_relative(const ModuliSpace& space) {
  RelativeExpression weighted = RelativeExpression::omega(space);
  RelativeExpression total = Rational(2) * RelativeExpression::omega(space);
  for (int i = 1; i <= space.marks(); ++i) {
    weighted += space.weight(i) * RelativeExpression::section(space, i);
    total += RelativeExpression::section(space, i);
  }
  return push_quadratic(weighted, total);
}

VerificationReport verify_canonical_polarization(const ModuliSpace& space) {
  VerificationReport r = make_report("canonical-class", space);
  r.difference =
      normal_form(canonical_polarization(space) - canonical_polarization_kappa_form(space));
  r.passed = r.difference.is_zero();
  r.detail = "13*lambda - 2*Dnod + psi vs 13/12*kappa - 11/12*Dnod + psi, modulo the kappa relation";
  return r;
}

VerificationReport verify_delta_presentations(const ModuliSpace& space) {
  VerificationReport r = make_report("delta-presentations", space);
  r.difference = normal_form(delta_class(space) - delta_class_alternative(space));
  r.passed = r.difference.is_zero();
  r.detail = "2*kappa + sum(1+a_i)psi_i vs polarization + 11*lambda + sum a_i psi_i";
  return r;
}

VerificationReport verify_delta_routes(const ModuliSpace& space) {
  VerificationReport r = make_report("delta-routes", space);
  DivisorClass closed = delta_pushforward(space);
  r.difference = delta_pushforward_via_reduction(space) - closed;
  r.difference_right = delta_pushforward_via_relative(space) - closed;
  r.passed = r.difference.is_zero() && r.difference_right->is_zero();
  r.detail = "reduction-table route (left) and relative-calculus route (right) vs closed form";
  return r;
}

VerificationReport verify_nodal_restriction(const ModuliSpace& space, int side_genus,
                                            const MarkSet& side_marks) {
  NodalBoundaryMap map(space, side_genus, side_marks);
  VerificationReport r = make_report("nodal-restriction", space);
  r.params["side_genus"] = std::to_string(side_genus);
  r.params["subset"] = side_marks.str();
  PairClass lhs = map.restrict(canonical_polarization(space));
  DivisorClass rhs_left = canonical_polarization(map.left_space());
  rhs_left.add(Generator::psi(map.left_node()), 1);
  DivisorClass rhs_right = canonical_polarization(map.right_space());
  rhs_right.add(Generator::psi(map.right_node()), 1);
  r.difference = lhs.left - rhs_left;
  r.difference_right = lhs.right - rhs_right;
  r.passed = r.difference.is_zero() && r.difference_right->is_zero();
  r.detail = "restriction of the polarization vs factor polarization + psi at the node";
  return r;
}

VerificationReport verify_irr_restriction(const ModuliSpace& space) {
  VerificationReport r = make_report("irr-restriction", space);
  DivisorClass lhs = irr_restriction(canonical_polarization(space));
  ModuliSpace glued = irr_gluing_space(space);
  DivisorClass rhs = canonical_polarization(glued);
  rhs.add(Generator::psi(space.marks() + 1), 1);
  rhs.add(Generator::psi(space.marks() + 2), 1);
  r.difference = lhs - rhs;
  r.passed = r.difference.is_zero();
  r.detail = "restriction of the polarization vs gluing-space polarization + psi_p + psi_q";
  return r;
}

VerificationReport verify_coincident_restriction(const ModuliSpace& space,
                                                 const MarkSet& merged) {
  CoincidentMap map(space, merged);
  VerificationReport r = make_report("coincident-restriction", space);
  r.params["subset"] = merged.str();
  const ModuliSpace& target = map.target();
  DivisorClass lhs = map.restrict(delta_pushforward(space));
  RelativeExpression weighted = RelativeExpression::omega(target);
  for (int u = 1; u <= target.marks(); ++u) {
    weighted += target.weight(u) * RelativeExpression::section(target, u);
  }
  DivisorClass rhs = delta_pushforward(target) +
                     Rational(merged.count() - 1) *
                         push_against_section(weighted, map.merged_index());
  r.difference = lhs - rhs;
  r.passed = r.difference.is_zero();
  r.detail = "restricted delta pushforward vs target delta pushforward + correction";
  return r;
}

VerificationReport verify_delta_decomposition(const ModuliSpace& space) {
  VerificationReport r = make_report("delta-decomposition", space);
  const ModuliSpace unit = unit_weight_space(space.genus(), space.marks());
  std::vector<MarkSet> light = enumerate_coincident_subsets(space);
  DivisorClass residual(unit);
  bool signs_ok = true;
  for (const MarkSet& s : light) {
    Rational coef = Rational(s.count() - 2) * (Rational(1) - space.subset_weight(s));
    if (coef.sign() < 0) signs_ok = false;
    if (!nodal_stratum_exists(unit, 0, s)) continue;
    residual.add(normalize_nodal_index(unit, 0, s), coef);
  }
  DivisorClass rhs = full_reduction_pullback(delta_pushforward(space)) + residual;
  r.difference = delta_on_unit(space) - rhs;
  r.passed = r.difference.is_zero() && signs_ok;
  r.detail = signs_ok ? "residual coefficients (|I|-2)(1-w_I) all nonnegative"
                      : "residual has a negative coefficient";
  return r;
}

VerificationReport verify_constant_weight_pullback(const ModuliSpace& space, const Rational& tau) {
  const int n = space.marks();
  if (tau.sign() <= 0 || tau > Rational(1)) {
    throw InvalidMorphismError("constant weight tau must lie in (0,1], got " + tau.str());
  }
  if (Rational(n) * tau > Rational(1)) {
    throw InvalidMorphismError("identity requires n*tau <= 1, got n=" + std::to_string(n) +
                               ", tau=" + tau.str());
  }
  for (int i = 1; i <= n; ++i) {
    if (tau > space.weight(i)) {
      throw InvalidMorphismError("tau=" + tau.str() + " exceeds the weight of mark " +
                                 std::to_string(i));
    }
  }
  VerificationReport r = make_report("constant-weight-pullback", space);
  r.params["tau"] = tau.str();
  ModuliSpace tau_space(space.genus(), WeightDatum(std::vector<Rational>(n, tau)));
  ReductionMap map(space, tau_space);
  DivisorClass two_kappa_psi(tau_space);
  two_kappa_psi.add(Generator::kappa(), 2);
  for (int i = 1; i <= n; ++i) two_kappa_psi.add(Generator::psi(i), 1);
  DivisorClass lhs = map.pullback(two_kappa_psi);
  DivisorClass rhs(space);
  rhs.add(Generator::kappa(), 2);
  for (int i = 1; i <= n; ++i) rhs.add(Generator::psi(i), 1);
  for (const Generator& nod : enumerate_nodal_generators(space)) {
    if (nod.side_genus() != 0) continue;
    int size = nod.side_set().count();
    if (Rational(size) * tau <= Rational(1)) rhs.add(nod, -Rational(size - 2));
  }
  r.difference = lhs - rhs;
  r.passed = r.difference.is_zero();
  r.detail = "pullback of 2*kappa + psi to constant-weight target vs explicit correction";
  return r;
}

}  // namespace hassett
