#pragma once

#include <map>
#include <optional>
#include <string>

#include "hassett/divisor_class.hpp"
#include "hassett/morphisms.hpp"

namespace hassett {

/// Outcome of checking one divisor-class identity on one space. `difference`
/// holds LHS - RHS, zero exactly when the check passed. Identities comparing
/// a pair of classes (restriction to a separating boundary divisor, or two
/// alternative computation routes) put the second comparison into
/// difference_right.
struct VerificationReport {
  std::string identity;
  ModuliSpace space;
  bool passed = false;
  DivisorClass difference;
  std::optional<DivisorClass> difference_right;
  std::map<std::string, std::string> params;
  std::string detail;
};

VerificationReport make_report(std::string identity, const ModuliSpace& space);

/// 13*lambda - 2*D_nod + psi, the polarization class whose section ring cuts
/// out the birational models, and the same class written over kappa:
/// 13/12*kappa - 11/12*D_nod + psi.
DivisorClass canonical_polarization(const ModuliSpace& space);
DivisorClass canonical_polarization_kappa_form(const ModuliSpace& space);

/// 2*kappa + sum_i (1 + a_i) psi_i, and the equivalent presentation
/// (canonical polarization) + 11*lambda + sum_i a_i psi_i.
DivisorClass delta_class(const ModuliSpace& space);
DivisorClass delta_class_alternative(const ModuliSpace& space);

/// delta_class built with the weights of `target` but living on the
/// unit-weight space of the same genus and marking count.
DivisorClass delta_on_unit(const ModuliSpace& target);

/// Pushforward of delta_on_unit along the full weight reduction, in closed
/// form: 2*kappa + sum (1 + a_i) psi_i + sum_{w_ij <= 1} w_ij D_{i=j}.
DivisorClass delta_pushforward(const ModuliSpace& space);
/// The same class computed through the reduction transfer tables, and through
/// the relative intersection calculus ((omega + sum a_i s_i).(2 omega + sum s_i)).
DivisorClass delta_pushforward_via_reduction(const ModuliSpace& space);
DivisorClass delta_pushforward_via_relative(const ModuliSpace& space);

/// The two presentations of each class agree modulo the kappa relation.
VerificationReport verify_canonical_polarization(const ModuliSpace& space);
VerificationReport verify_delta_presentations(const ModuliSpace& space);

/// All three computations of the delta pushforward coincide termwise.
VerificationReport verify_delta_routes(const ModuliSpace& space);

/// Restricting the canonical polarization T to a separating boundary divisor
/// gives T + psi_node on each factor.
VerificationReport verify_nodal_restriction(const ModuliSpace& space, int side_genus,
                                            const MarkSet& side_marks);

/// Restricting T to the non-separating boundary divisor gives T + psi_p +
/// psi_q on the gluing space.
VerificationReport verify_irr_restriction(const ModuliSpace& space);

/// Restricting the delta pushforward to a coincident-section locus gives the
/// target's own delta pushforward plus (|I| - 1) times the pushed product of
/// (omega + sum of all weighted sections) with the merged section.
VerificationReport verify_coincident_restriction(const ModuliSpace& space, const MarkSet& merged);

/// On the unit-weight space, delta_on_unit splits as the pullback of its own
/// pushforward plus the effective residual sum (|I|-2)(1-w_I) D_{0,I} over
/// subsets of weight <= 1.
VerificationReport verify_delta_decomposition(const ModuliSpace& space);

/// Pulling 2*kappa + psi back along the reduction to constant weight tau
/// (requires n*tau <= 1 and tau below every weight) subtracts
/// (|I|-2) D_{0,I} for every stratum with a light genus-0 side.
VerificationReport verify_constant_weight_pullback(const ModuliSpace& space, const Rational& tau);

}  // namespace hassett
