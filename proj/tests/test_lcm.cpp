#include "doctest.h"

#include "hassett/divisor_class.hpp"
#include "hassett/errors.hpp"
#include "hassett/lcm_models.hpp"
#include "hassett/space.hpp"

#include <vector>

using namespace hassett;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

const std::vector<ModuliSpace>& sample_spaces() {
  static const std::vector<ModuliSpace> spaces = {
      make_space(1, {r(1)}),
      make_space(1, {r(1), r(1)}),
      make_space(1, {r(1, 2), r(1, 2)}),
      make_space(1, {r(1, 3), r(1, 3), r(1, 3)}),
      make_space(2, {}),
      make_space(2, {r(1), r(1, 2)}),
      make_space(2, {r(1, 5), r(1, 5), r(3, 5)}),
      make_space(3, {r(1, 2), r(1, 4)}),
      make_space(0, {r(1), r(1), r(1), r(1, 2)}),
  };
  return spaces;
}

}  // namespace

TEST_CASE("polarization class, explicit coefficients") {
  ModuliSpace m = make_space(1, {r(1), r(1)});
  DivisorClass t = canonical_polarization(m);
  CHECK(t.coefficient(Generator::lambda()) == r(13));
  CHECK(t.coefficient(Generator::irr()) == r(-2));
  CHECK(t.coefficient(Generator::nodal(0, MarkSet::of({1, 2}))) == r(-2));
  CHECK(t.coefficient(Generator::psi(1)) == r(1));
  CHECK(t.coefficient(Generator::psi(2)) == r(1));
  CHECK(t.coefficient(Generator::kappa()).is_zero());

  DivisorClass k = canonical_polarization_kappa_form(m);
  CHECK(k.coefficient(Generator::kappa()) == r(13, 12));
  CHECK(k.coefficient(Generator::irr()) == r(-11, 12));
  CHECK(k.coefficient(Generator::lambda()).is_zero());
}

TEST_CASE("delta class, explicit coefficients") {
  ModuliSpace m = make_space(2, {r(1, 3), r(2, 3)});
  DivisorClass d = delta_class(m);
  CHECK(d.coefficient(Generator::kappa()) == r(2));
  CHECK(d.coefficient(Generator::psi(1)) == r(4, 3));
  CHECK(d.coefficient(Generator::psi(2)) == r(5, 3));
  CHECK(d.terms().size() == 3);

  // the weights enter delta_on_unit even though it lives on unit weights
  ModuliSpace unit = unit_weight_space(2, 2);
  DivisorClass du = delta_on_unit(m);
  CHECK(du.space() == unit);
  CHECK(du.coefficient(Generator::psi(1)) == r(4, 3));
}

TEST_CASE("delta pushforward closed form") {
  ModuliSpace m = make_space(1, {r(1, 2), r(1, 2)});
  CHECK(delta_pushforward(m) == make_class(m, {{Generator::kappa(), r(2)},
                                               {Generator::psi(1), r(3, 2)},
                                               {Generator::psi(2), r(3, 2)},
                                               {Generator::section_pair(1, 2), r(1)}}));
  // no coincident-section terms at unit weights, and never any boundary terms
  ModuliSpace heavy = make_space(1, {r(1), r(1)});
  CHECK(delta_pushforward(heavy) == make_class(heavy, {{Generator::kappa(), r(2)},
                                                       {Generator::psi(1), r(2)},
                                                       {Generator::psi(2), r(2)}}));
  for (const ModuliSpace& space : sample_spaces()) {
    DivisorClass d = delta_pushforward(space);
    for (const auto& [gen, coef] : d.terms())
      CHECK((gen.kind() == GeneratorKind::Kappa || gen.kind() == GeneratorKind::Psi ||
             gen.kind() == GeneratorKind::SectionPair));
  }
}

TEST_CASE("class presentations agree on sample spaces") {
  for (const ModuliSpace& space : sample_spaces()) {
    VerificationReport a = verify_canonical_polarization(space);
    CHECK(a.passed);
    CHECK(a.difference.is_zero());
    CHECK(a.identity == "canonical-class");
    VerificationReport b = verify_delta_presentations(space);
    CHECK(b.passed);
    VerificationReport c = verify_delta_routes(space);
    CHECK(c.passed);
    CHECK(c.difference.is_zero());
    REQUIRE(c.difference_right.has_value());
    CHECK(c.difference_right->is_zero());
  }
}

TEST_CASE("restriction to separating boundary divisors") {
  VerificationReport a =
      verify_nodal_restriction(make_space(2, {r(1), r(1)}), 1, MarkSet::of({1, 2}));
  CHECK(a.passed);
  CHECK(a.identity == "nodal-restriction");
  CHECK(a.params.at("side_genus") == "1");
  CHECK(a.difference.is_zero());
  REQUIRE(a.difference_right.has_value());
  CHECK(a.difference_right->is_zero());

  CHECK(verify_nodal_restriction(make_space(1, {r(1, 2), r(1, 2), r(1, 2)}), 0,
                                 MarkSet::of({1, 2, 3}))
            .passed);
  CHECK(verify_nodal_restriction(make_space(3, {}), 1, MarkSet()).passed);
  CHECK(verify_nodal_restriction(make_space(2, {r(1), r(1, 3)}), 0, MarkSet::of({1, 2})).passed);

  // conventional zero: nothing to restrict to
  CHECK_THROWS_AS(verify_nodal_restriction(make_space(2, {r(1)}), 0, MarkSet::of({1})),
                  InvalidGeneratorError);
}

TEST_CASE("restriction to the non-separating boundary divisor") {
  for (const ModuliSpace& space : sample_spaces()) {
    if (space.genus() == 0) {
      CHECK_THROWS_AS(verify_irr_restriction(space), InvalidMorphismError);
      continue;
    }
    VerificationReport rep = verify_irr_restriction(space);
    CHECK(rep.passed);
    CHECK(rep.identity == "irr-restriction");
    CHECK(rep.difference.is_zero());
  }
}

TEST_CASE("restriction to coincident-section loci") {
  VerificationReport a =
      verify_coincident_restriction(make_space(1, {r(1, 3), r(1, 3), r(1, 3)}), MarkSet::of({1, 2}));
  CHECK(a.passed);
  CHECK(a.identity == "coincident-restriction");
  CHECK(a.difference.is_zero());

  CHECK(verify_coincident_restriction(make_space(1, {r(1, 4), r(1, 4), r(1, 4)}),
                                      MarkSet::of({1, 2, 3}))
            .passed);
  CHECK(verify_coincident_restriction(make_space(2, {r(1, 2), r(1, 2)}), MarkSet::of({1, 2}))
            .passed);
  CHECK(verify_coincident_restriction(make_space(0, {r(1), r(1), r(1, 4), r(1, 4), r(1, 4)}),
                                      MarkSet::of({3, 4, 5}))
            .passed);

  CHECK_THROWS_AS(verify_coincident_restriction(make_space(1, {r(1), r(1)}), MarkSet::of({1, 2})),
                  InvalidMorphismError);
}

TEST_CASE("decomposition over the unit-weight space") {
  // residual term (|I|-2)(1-w_I) D(0;I): one triple of weight 3/4 gives 1/4
  ModuliSpace m = make_space(1, {r(1, 4), r(1, 4), r(1, 4)});
  VerificationReport rep = verify_delta_decomposition(m);
  CHECK(rep.passed);
  CHECK(rep.identity == "delta-decomposition");
  CHECK(rep.difference.is_zero());

  ModuliSpace unit = unit_weight_space(1, 3);
  DivisorClass residual = delta_on_unit(m) - full_reduction_pullback(delta_pushforward(m));
  CHECK(residual ==
        make_class(unit, {{Generator::nodal(0, MarkSet::of({1, 2, 3})), r(1, 4)}}));

  // pairs contribute nothing: |I| - 2 = 0
  ModuliSpace m2 = make_space(1, {r(1, 2), r(1, 2)});
  DivisorClass residual2 =
      delta_on_unit(m2) - full_reduction_pullback(delta_pushforward(m2));
  CHECK(residual2.is_zero());
  CHECK(verify_delta_decomposition(m2).passed);

  for (const ModuliSpace& space : sample_spaces()) CHECK(verify_delta_decomposition(space).passed);
}

TEST_CASE("constant-weight pullback identity") {
  ModuliSpace m = make_space(1, {r(1), r(1), r(1)});
  VerificationReport rep = verify_constant_weight_pullback(m, r(1, 4));
  CHECK(rep.passed);
  CHECK(rep.identity == "constant-weight-pullback");
  CHECK(rep.params.at("tau") == "1/4");
  CHECK(rep.difference.is_zero());

  CHECK(verify_constant_weight_pullback(make_space(2, {r(1, 2), r(1, 2)}), r(1, 2)).passed);
  CHECK(verify_constant_weight_pullback(make_space(1, {r(1)}), r(1)).passed);

  // hypotheses: 0 < tau <= min weight and n*tau <= 1
  CHECK_THROWS_AS(verify_constant_weight_pullback(m, r(1, 2)), InvalidMorphismError);  // 3*tau > 1
  CHECK_THROWS_AS(verify_constant_weight_pullback(make_space(1, {r(1, 8)}), r(1, 4)),
                  InvalidMorphismError);  // tau above a weight
  CHECK_THROWS_AS(verify_constant_weight_pullback(m, r(0)), InvalidMorphismError);
  CHECK_THROWS_AS(verify_constant_weight_pullback(m, r(-1, 4)), InvalidMorphismError);
}

TEST_CASE("reports carry the inputs") {
  ModuliSpace m = make_space(1, {r(1, 2), r(1, 2)});
  VerificationReport rep = verify_canonical_polarization(m);
  CHECK(rep.space == m);
  CHECK(!rep.detail.empty());  // says which two presentations were compared

  VerificationReport c = verify_coincident_restriction(m, MarkSet::of({1, 2}));
  CHECK(c.params.at("subset") == "{1,2}");
}
