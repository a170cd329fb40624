#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "families.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace gradecheck;
using testutil::graded;
using testutil::pl;
using testutil::pp;

namespace {

std::vector<FieldElement> params(const FieldDesc& f, int n) {
  std::vector<FieldElement> out;
  for (int i = 0; i < n; ++i) out.push_back(FieldElement::from_integer(f, i));
  return out;
}

}  // namespace

TEST_CASE("family specs require a fat critical component") {
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();

  // Linear hsop: critical degree 2, one-dimensional piece, invalid.
  CHECK_THROWS_AS(make_family_spec(*R, pl(r, "x + 2*y")), PreconditionError);

  // Squared hsop: critical degree 3 with a 2-dimensional piece.
  FamilySpec spec = make_family_spec(*R, pl(r, "(x + 2*y)^2"));
  CHECK(spec.critical_degree == 3);
  CHECK(spec.quotient_basis.size() == 2);
  // Oracle: the degree-3 piece of R/(x+2y)^2 has dimension 2.
  std::vector<Polynomial> gens = {pp(r, "x^3*y - x*y^3"), pp(r, "(x+2*y)^2")};
  CHECK(oracle::quotient_dim(r, gens, 3) == 2);
}

TEST_CASE("family ideals: preimages of principal classes") {
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();
  FamilySpec spec = make_family_spec(*R, pl(r, "(x + 2*y)^2"));

  SUBCASE("the class of x^3 produces the expected ideal") {
    Ideal fam = construct_family_ideal(*R, spec, pp(r, "x^3"));
    Ideal expected = R->in_ring(pl(r, "(x+2*y)^2, x^3"));
    CHECK(ideal_equal(fam, expected));
    CHECK(krull_dimension(fam) == 0);
  }
  SUBCASE("the zero class falls back to the hsop ideal") {
    Ideal fam = construct_family_ideal(*R, spec, r->zero());
    CHECK(ideal_equal(fam, R->in_ring(pl(r, "(x+2*y)^2"))));
  }
  SUBCASE("lifts of the same class give equal ideals") {
    Polynomial shifted = pp(r, "x^3") + pp(r, "(x+2*y)^2") * pp(r, "x");
    Ideal a = construct_family_ideal(*R, spec, pp(r, "x^3"));
    Ideal b = construct_family_ideal(*R, spec, shifted);
    CHECK(ideal_equal(a, b));
  }
  SUBCASE("wrong degree is rejected") {
    CHECK_THROWS_AS(construct_family_ideal(*R, spec, pp(r, "x^2")), PreconditionError);
  }
}

TEST_CASE("hsop annihilation inside the family ideal") {
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();
  FamilySpec spec = make_family_spec(*R, pl(r, "(x + 2*y)^2"));
  Ideal fam = construct_family_ideal(*R, spec, pp(r, "x^3"));
  CHECK(koszul_top_annihilation_check(fam, spec.hsop));

  // Negative control: an ideal missing the hsop entry.
  Ideal broken = R->in_ring(pl(r, "x^3"));
  CHECK_FALSE(koszul_top_annihilation_check(broken, spec.hsop));

  // Length-one hsop means a single membership test.
  auto line = graded("ring GF(32003)[x,y]\nideal x^2");
  FamilySpec lspec{pl(line->poly_ring(), "y^2"), 3,
                   standard_monomials(line->in_ring(pl(line->poly_ring(), "y^2")), 3)};
  Ideal lfam = line->in_ring(pl(line->poly_ring(), "y^2, x*y"));
  CHECK(koszul_top_annihilation_check(lfam, lspec.hsop));
}

TEST_CASE("family ideal equality tracks principal-image equality") {
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();
  FamilySpec spec = make_family_spec(*R, pl(r, "(x + 2*y)^2"));
  Ideal base = R->in_ring(spec.hsop);
  Polynomial u = r->monomial(spec.quotient_basis[0]);
  Polynomial v = r->monomial(spec.quotient_basis[1]);

  const FieldDesc& f = r->field();
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      Polynomial ya = u + v * FieldElement::from_integer(f, a);
      Polynomial yb = u + v * FieldElement::from_integer(f, b);
      bool ideals_equal = ideal_equal(construct_family_ideal(*R, spec, ya),
                                      construct_family_ideal(*R, spec, yb));
      bool images_equal =
          normal_form(ya, ideal_sum(base, Ideal(r, {yb}))).is_zero() &&
          normal_form(yb, ideal_sum(base, Ideal(r, {ya}))).is_zero();
      CHECK(ideals_equal == images_equal);
      CHECK(ideals_equal == (a == b));
    }
}

TEST_CASE("distinct principal ideals from independent basis elements") {
  SUBCASE("polynomial ring in degree 1: ten distinct pairs") {
    auto R = graded("ring GF(32003)[x,y]");
    DistinctnessReport rep =
        sample_distinct_principal_ideals(*R, 1, params(R->poly_ring()->field(), 5));
    CHECK(rep.pairs_checked == 10);
    CHECK(rep.all_distinct());
    // Oracle on one pair: x + 2y does not reduce to zero against (x + 3y).
    auto r = R->poly_ring();
    CHECK_FALSE(oracle::member(pp(r, "x + 2*y"), pl(r, "x + 3*y")));
  }
  SUBCASE("the quartic hypersurface in degree 1") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    DistinctnessReport rep =
        sample_distinct_principal_ideals(*R, 1, params(R->poly_ring()->field(), 5));
    CHECK(rep.pairs_checked == 10);
    CHECK(rep.all_distinct());
  }
  SUBCASE("a single sample is vacuously distinct") {
    auto R = graded("ring GF(32003)[x,y]");
    DistinctnessReport rep =
        sample_distinct_principal_ideals(*R, 1, params(R->poly_ring()->field(), 1));
    CHECK(rep.vacuous);
    CHECK(rep.pairs_checked == 0);
  }
  SUBCASE("thin components are rejected") {
    auto R = graded("ring GF(32003)[x]");
    CHECK_THROWS_AS(sample_distinct_principal_ideals(*R, 1, params(R->poly_ring()->field(), 3)),
                    PreconditionError);
  }
}

TEST_CASE("one-dimensional family") {
  SUBCASE("the two-quadric CI meets the hypotheses") {
    // Oracle search over the corpus: dim 1, CM, mu = 2 (not a hypersurface),
    // e = 4 > embdim - dim + 1 = 3 (not minimal multiplicity).
    auto R = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
    REQUIRE(R->dim() == 1);
    REQUIRE_FALSE(R->is_hypersurface());
    REQUIRE_FALSE(has_minimal_multiplicity(*R));
    DistinctnessReport rep =
        one_dim_family(*R, Rng(21), params(R->poly_ring()->field(), 5));
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.pairs_checked == 10);
    CHECK(rep.all_distinct());
    CHECK(rep.elements.size() == 3);
  }
  SUBCASE("hypersurfaces make the family vacuous") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3");
    DistinctnessReport rep =
        one_dim_family(*R, Rng(21), params(R->poly_ring()->field(), 5));
    CHECK(rep.vacuous);
    CHECK(rep.note.find("hypersurface") != std::string::npos);
  }
  SUBCASE("repeated parameters give the same ideal and are skipped") {
    auto R = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
    std::vector<FieldElement> twice = {FieldElement::from_integer(R->poly_ring()->field(), 3),
                                       FieldElement::from_integer(R->poly_ring()->field(), 3)};
    DistinctnessReport rep = one_dim_family(*R, Rng(21), twice);
    CHECK(rep.pairs_checked == 0);
  }
  SUBCASE("wrong dimension is an error") {
    auto R = graded("ring GF(32003)[x,y]");
    CHECK_THROWS_AS(one_dim_family(*R, Rng(21), params(R->poly_ring()->field(), 3)),
                    PreconditionError);
  }
}
