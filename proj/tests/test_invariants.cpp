#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invariants.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace gradecheck;
using testutil::graded;
using testutil::pl;
using testutil::pp;

namespace {
const CheckOptions kOpts{};
}

TEST_CASE("minimal reduction detection") {
  SUBCASE("the quartic hypersurface reduces by x+2y with reduction number 3") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    ReductionCheck rc = is_minimal_reduction(*R, pl(R->poly_ring(), "x + 2*y"));
    CHECK(rc.is_hsop);
    CHECK(rc.is_reduction);
    CHECK(rc.reduction_number == 3);
  }
  SUBCASE("wrong length is not an hsop") {
    auto R = graded("ring GF(32003)[x,y]");
    ReductionCheck rc = is_minimal_reduction(*R, pl(R->poly_ring(), "x"));
    CHECK_FALSE(rc.is_hsop);
    CHECK_FALSE(rc.is_reduction);
  }
  SUBCASE("the variable generates the maximal ideal of k[x]") {
    auto R = graded("ring GF(32003)[x]");
    ReductionCheck rc = is_minimal_reduction(*R, pl(R->poly_ring(), "x"));
    CHECK(rc.is_hsop);
    CHECK(rc.is_reduction);
    CHECK(rc.reduction_number == 0);
  }
  SUBCASE("degree-2 entries are rejected as minimal reduction candidates") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    ReductionCheck rc = is_minimal_reduction(*R, pl(R->poly_ring(), "(x+2*y)^2"));
    CHECK_FALSE(rc.is_hsop);
  }
}

TEST_CASE("stretched") {
  SUBCASE("the quartic hypersurface is stretched") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    StretchedResult st = is_stretched(*R, Rng(5), kOpts);
    CHECK(st.value);
    CHECK(st.witness.size() == 1);
    CHECK(st.witness_dims == std::vector<long long>{1, 1, 1, 1});
  }
  SUBCASE("the fat Artinian cone is not: its degree-2 piece has dimension 6") {
    auto R = graded(
        "ring GF(32003)[x,y,z]\nideal x^3, x^2*y, x^2*z, x*y^2, x*y*z, x*z^2, y^3, y^2*z, "
        "y*z^2, z^3");
    // Oracle: all 6 degree-2 monomials survive.
    CHECK(hilbert_function(R->ideal(), 2) == 6);
    StretchedResult st = is_stretched(*R, Rng(5), kOpts);
    CHECK(st.dim0_direct);
    CHECK_FALSE(st.value);
  }
  SUBCASE("the chain k[x]/(x^4) is stretched, read off directly") {
    auto R = graded("ring GF(32003)[x]\nideal x^4");
    StretchedResult st = is_stretched(*R, Rng(5), kOpts);
    CHECK(st.dim0_direct);
    CHECK(st.value);
  }
  SUBCASE("non-CM input is an error") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^2, x*y");
    CHECK_THROWS_AS(is_stretched(*R, Rng(5), kOpts), PreconditionError);
  }
}

TEST_CASE("threshold check on supplied hsops") {
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();

  SUBCASE("linear hsop: threshold 2, all pieces small") {
    HSopCheck c = check_hsop_super_stretched(*R, pl(r, "x + 2*y"));
    CHECK(c.threshold == 2);
    CHECK(c.verdict);
    REQUIRE(c.dims.size() >= 2);
    CHECK(c.dims[0] == std::pair<int, long long>{2, 1});
    CHECK(c.dims[1] == std::pair<int, long long>{3, 1});
  }
  SUBCASE("squared hsop: threshold 3 fails with dimension 2") {
    HSopCheck c = check_hsop_super_stretched(*R, pl(r, "(x + 2*y)^2"));
    CHECK(c.threshold == 3);
    CHECK_FALSE(c.verdict);
    CHECK(c.failing_degree == 3);
    CHECK(c.dims[0] == std::pair<int, long long>{3, 2});
  }
  SUBCASE("cubic hypersurface modulo y") {
    auto R3 = graded("ring GF(32003)[x,y]\nideal x^3");
    HSopCheck c = check_hsop_super_stretched(*R3, pl(R3->poly_ring(), "y"));
    CHECK(c.threshold == 2);
    CHECK(c.verdict);
  }
  SUBCASE("not an hsop") {
    CHECK_THROWS_AS(check_hsop_super_stretched(*R, pl(r, "x*y")), PreconditionError);
    CHECK_THROWS_AS(check_hsop_super_stretched(*R, pl(r, "x, y")), PreconditionError);
  }
}

TEST_CASE("super-stretched via the finite criterion") {
  SUBCASE("the quartic hypersurface is stretched but not super-stretched") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    SuperStretchedResult ss = is_super_stretched(*R, Rng(5), kOpts);
    CHECK(ss.stretched.value);
    CHECK_FALSE(ss.m3_equality);
    CHECK_FALSE(ss.value);
  }
  SUBCASE("multiplicity-3 hypersurface is super-stretched") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3");
    SuperStretchedResult ss = is_super_stretched(*R, Rng(5), kOpts);
    CHECK(ss.value);
    CHECK(ss.m3_equality);
  }
  SUBCASE("the two-quadric complete intersection is super-stretched") {
    auto R = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
    CHECK(is_super_stretched(*R, Rng(5), kOpts).value);
  }
  SUBCASE("audit sampling stays consistent") {
    CheckOptions audit = kOpts;
    audit.audit = true;
    audit.audit_samples = 8;
    auto yes = graded("ring GF(32003)[x,y]\nideal x^3");
    SuperStretchedResult a = is_super_stretched(*yes, Rng(5), audit);
    REQUIRE(a.audit);
    CHECK(a.audit->consistent);
    CHECK(a.audit->failing_samples == 0);
    auto no = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    SuperStretchedResult b = is_super_stretched(*no, Rng(5), audit);
    REQUIRE(b.audit);
    CHECK(b.audit->consistent);
  }
}

TEST_CASE("minimal multiplicity") {
  CHECK(has_minimal_multiplicity(*graded("ring GF(32003)[x,y]\nideal y^2")));
  CHECK_FALSE(has_minimal_multiplicity(*graded("ring GF(32003)[x,y]\nideal x^3")));
  CHECK(has_minimal_multiplicity(*graded("ring GF(32003)[x,y,z]")));
}

TEST_CASE("h-vector classification") {
  CHECK(classify_h_vector({1, 1, 1, 1}) == HClass::other);
  CHECK(classify_h_vector({1, 2, 1}) == HClass::one_n_one);
  CHECK(classify_h_vector({1}) == HClass::one);
  CHECK(classify_h_vector({1, 7}) == HClass::one_n);
  CHECK(classify_h_vector({1, 1, 1}) == HClass::one_n_one);
  CHECK(classify_h_vector({1, 2, 2}) == HClass::other);
  CHECK(h_class_name(HClass::one_n) == "(1,n)");
}

TEST_CASE("countable-type obstruction rules") {
  SUBCASE("the quartic is obstructed for not being super-stretched") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    ObstructionResult obs = countable_type_obstruction(*R, Rng(5), kOpts);
    CHECK(obs.obstructed);
    CHECK(obs.reason == "not super-stretched");
    CHECK(obs.rules[0]);
    CHECK(obs.rules[1]);  // (1,1,1,1) is also outside the shape list
  }
  SUBCASE("a quadric hypersurface passes every rule") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^2");
    ObstructionResult obs = countable_type_obstruction(*R, Rng(5), kOpts);
    CHECK_FALSE(obs.obstructed);
    for (bool rule : obs.rules) CHECK_FALSE(rule);
  }
  SUBCASE("dimension-1 Gorenstein non-hypersurface: the two-quadric CI") {
    // Search over the corpus confirms this is the witness where the
    // Gorenstein rule evaluates true; the earlier hypersurface/minimal
    // multiplicity rule fires first by design.
    auto R = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
    REQUIRE(R->dim() == 1);
    REQUIRE(R->gorenstein());
    REQUIRE_FALSE(R->is_hypersurface());
    ObstructionResult obs = countable_type_obstruction(*R, Rng(5), kOpts);
    CHECK(obs.obstructed);
    CHECK(obs.reason == "dimension 1 and neither a hypersurface nor of minimal multiplicity");
    CHECK(obs.rules[2]);
    CHECK(obs.rules[3]);  // the Gorenstein rule holds on its own
  }
  SUBCASE("dimension 0 is outside the rules") {
    auto R = graded("ring GF(32003)[x]\nideal x^4");
    CHECK_THROWS_AS(countable_type_obstruction(*R, Rng(5), kOpts), PreconditionError);
  }
  SUBCASE("dimension >= 3 non-Gorenstein without minimal multiplicity") {
    // Cone over k[a,b]/(a^2, ab, b^3): h-vector (1,2,1) so super-stretched,
    // socle type 2 so not Gorenstein, e = 4 > embdim - dim + 1 = 3.
    auto R = graded("ring GF(32003)[a,b,u,v,w]\nideal a^2, a*b, b^3");
    REQUIRE(R->dim() == 3);
    REQUIRE(R->h_vector().entries == std::vector<long long>{1, 2, 1});
    REQUIRE_FALSE(R->gorenstein());
    REQUIRE(R->socle_data().type == 2);
    REQUIRE_FALSE(has_minimal_multiplicity(*R));
    REQUIRE(is_super_stretched(*R, Rng(5), kOpts).value);
    ObstructionResult obs = countable_type_obstruction(*R, Rng(5), kOpts);
    CHECK(obs.obstructed);
    CHECK(obs.reason == "dimension >= 3, not Gorenstein, and not of minimal multiplicity");
    CHECK(obs.rules[4]);
    CHECK_FALSE(obs.rules[0]);
    CHECK_FALSE(obs.rules[1]);
  }
}

TEST_CASE("threshold failures propagate to containing systems of parameters") {
  // If an hsop (ys) inside (xs) satisfied the threshold condition, (xs)
  // would too; contrapositive on the quartic: (x+2y)^2 fails, so any hsop
  // inside it, e.g. its square, must fail as well.
  auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  auto r = R->poly_ring();
  HSopCheck outer = check_hsop_super_stretched(*R, pl(r, "(x+2*y)^2"));
  REQUIRE_FALSE(outer.verdict);
  HSopCheck inner = check_hsop_super_stretched(*R, pl(r, "(x+2*y)^4"));
  CHECK_FALSE(inner.verdict);
  CHECK(inner.threshold == 5);
  CHECK(inner.failing_degree == 5);
}

TEST_CASE("two-quadric CI: quotients are sharp at the threshold") {
  // The socle degree of R/(sop) equals exactly sum deg - d + 2, so the
  // recorded dims are (threshold, 1) then (threshold + 1, 0) for every hsop.
  auto R = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Rng child = rng.split(trial);
    std::vector<Polynomial> sop = sample_hsop(*R, 3, child);
    HSopCheck c = check_hsop_super_stretched(*R, sop);
    INFO("hsop degree ", c.degrees[0]);
    CHECK(c.verdict);
    REQUIRE(c.dims.size() == 2);
    CHECK(c.dims[0].second == 1);
    CHECK(c.dims[1].second == 0);
  }
}

TEST_CASE("colon-power identity verifier") {
  auto R2 = graded("ring GF(32003)[x,y]");
  CHECK(verify_colon_power_identity(*R2, pl(R2->poly_ring(), "x, y"), 2));
  CHECK(verify_colon_power_identity(*R2, pl(R2->poly_ring(), "x, y"), 1));
  auto R3 = graded("ring GF(32003)[x,y,z]");
  CHECK(verify_colon_power_identity(*R3, pl(R3->poly_ring(), "x, y, z"), 3));
  CHECK_THROWS_AS(verify_colon_power_identity(*R2, pl(R2->poly_ring(), "x, x*y"), 2),
                  PreconditionError);
}

TEST_CASE("bracket-power product identity verifier") {
  auto R = graded("ring GF(32003)[x,y]");
  CHECK(verify_frobenius_product_identity(*R, pl(R->poly_ring(), "x, y"), 2));
  CHECK(verify_frobenius_product_identity(*R, pl(R->poly_ring(), "x, y"), 1));
  auto R3 = graded("ring GF(32003)[x,y,z]");
  Rng rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> quadrics;
    for (int i = 0; i < 3; ++i) quadrics.push_back(R3->poly_ring()->random_homogeneous(2, rng));
    CHECK(verify_frobenius_product_identity(*R3, quadrics, 2));
  }
}

TEST_CASE("determinant injectivity verifier") {
  SUBCASE("squares inside the variables") {
    auto R = graded("ring GF(32003)[x,y]");
    DeltaCheck d = verify_delta_injectivity(*R, pl(R->poly_ring(), "x^2, y^2"),
                                            pl(R->poly_ring(), "x, y"));
    CHECK(d.ok);
    CHECK(d.delta == pp(R->poly_ring(), "x*y"));
  }
  SUBCASE("identical hsops give a unit determinant") {
    auto R = graded("ring GF(32003)[x,y]");
    DeltaCheck d = verify_delta_injectivity(*R, pl(R->poly_ring(), "x, y"),
                                            pl(R->poly_ring(), "x, y"));
    CHECK(d.ok);
    CHECK(d.delta.degree() == 0);
  }
  SUBCASE("inside the quartic hypersurface") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    DeltaCheck d = verify_delta_injectivity(*R, pl(R->poly_ring(), "(x+2*y)^2"),
                                            pl(R->poly_ring(), "x+2*y"));
    CHECK(d.colon_ok);
    CHECK(d.dim_inequality_ok);
    // dim(R/(x+2y))_2 = 1 <= dim(R/(x+2y)^2)_3 = 2
    CHECK(hilbert_function(R->in_ring(pl(R->poly_ring(), "x+2*y")), 2) == 1);
    CHECK(hilbert_function(R->in_ring(pl(R->poly_ring(), "(x+2*y)^2")), 3) == 2);
  }
  SUBCASE("containment failure is a precondition error") {
    auto R = graded("ring GF(32003)[x,y]");
    CHECK_THROWS_AS(verify_delta_injectivity(*R, pl(R->poly_ring(), "x, y"),
                                             pl(R->poly_ring(), "x^2, y^2")),
                    PreconditionError);
  }
}

TEST_CASE("determinant identity on random mixed-power hsops") {
  // 25 instances beyond the acceptance suite's 25: linear hsops against
  // invertible constant mixes of their t-th powers.
  int instances = 0;
  std::vector<std::string> hosts = {"ring GF(32003)[x,y]", "ring GF(32003)[x,y,z]",
                                    "ring GF(32003)[x,y]\nideal x^4",
                                    "ring GF(32003)[x,y,z]\nideal x^2, y^2"};
  for (int round = 0; instances < 25; ++round) {
    auto R = graded(hosts[round % hosts.size()], 900 + round);
    Rng rng(1000 + round);
    std::vector<Polynomial> xs = sample_linear_sop(*R, rng);
    unsigned t = 1 + static_cast<unsigned>(rng.below(3));
    std::vector<Polynomial> ys;
    for (size_t i = 0; i < xs.size(); ++i) {
      Polynomial acc = R->poly_ring()->zero();
      for (size_t k = 0; k < xs.size(); ++k) {
        FieldElement c = i == k ? FieldElement::one(R->poly_ring()->field())
                                : FieldElement::random(R->poly_ring()->field(), rng);
        acc = acc + poly_pow(xs[k], t) * c;
      }
      ys.push_back(std::move(acc));
    }
    if (krull_dimension(R->in_ring(ys)) != 0) continue;
    INFO("instance ", instances, " on ", hosts[round % hosts.size()]);
    CHECK(verify_delta_injectivity(*R, ys, xs).ok);
    ++instances;
  }
}

TEST_CASE("reduction identity J m^2 = m^3") {
  auto cubic = graded("ring GF(32003)[x,y]\nideal x^3");
  CHECK(verify_m3_reduction(*cubic, pl(cubic->poly_ring(), "y")));
  // Oracle: each degree-3 monomial of k[x,y]/(x^3) lies in y*m^2.
  {
    auto r = cubic->poly_ring();
    std::vector<Polynomial> ym2 = {pp(r, "x^3"), pp(r, "y*x^2"), pp(r, "y*x*y"), pp(r, "y*y^2")};
    for (const char* mono : {"x^2*y", "x*y^2", "y^3"})
      CHECK(oracle::member(pp(r, mono), ym2));
  }

  auto quartic = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  CHECK_FALSE(verify_m3_reduction(*quartic, pl(quartic->poly_ring(), "x + 2*y")));

  auto line = graded("ring GF(32003)[x]");
  CHECK(verify_m3_reduction(*line, pl(line->poly_ring(), "x")));

  // Dimension zero: the chain k[x]/(x^4) is super-stretched yet the empty
  // reduction cannot absorb m^3; the identity is a positive-dimension fact.
  auto chain = graded("ring GF(32003)[x]\nideal x^4");
  CHECK(is_super_stretched(*chain, Rng(5), kOpts).value);
  CHECK_FALSE(verify_m3_reduction(*chain, {}));
}

TEST_CASE("powers of a good reduction satisfy the threshold") {
  auto cubic = graded("ring GF(32003)[x,y]\nideal x^3");
  CHECK(verify_frobenius_sop_threshold(*cubic, pl(cubic->poly_ring(), "y"), 2));
  CHECK(verify_frobenius_sop_threshold(*cubic, pl(cubic->poly_ring(), "y"), 1));

  auto two = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
  Rng rng(7);
  std::vector<Polynomial> J = sample_linear_sop(*two, rng);
  REQUIRE(is_minimal_reduction(*two, J).is_reduction);
  for (unsigned t = 1; t <= 4; ++t) CHECK(verify_frobenius_sop_threshold(*two, J, t));

  // The quartic fails the J m^2 = m^3 precondition.
  auto quartic = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
  CHECK_THROWS_AS(
      verify_frobenius_sop_threshold(*quartic, pl(quartic->poly_ring(), "x + 2*y"), 2),
      PreconditionError);
}

TEST_CASE("complete intersection classification") {
  CHECK(ci_classification(*graded("ring GF(32003)[x,y]\nideal x^4"), Rng(5), kOpts) ==
        CiClass::hypersurface);
  CHECK(ci_classification(*graded("ring GF(32003)[x,y,z]\nideal x^2, y^2"), Rng(5), kOpts) ==
        CiClass::two_quadrics);
  // (1,2,2,1) is not stretched, so the dichotomy does not apply.
  auto mixed = graded("ring GF(32003)[x,y,z]\nideal x^2, y^3");
  CHECK(mixed->h_vector().entries == std::vector<long long>{1, 2, 2, 1});
  CHECK(ci_classification(*mixed, Rng(5), kOpts) == CiClass::not_applicable);
}

TEST_CASE("corpus-wide consequences") {
  CheckOptions audit = kOpts;
  audit.audit = true;
  audit.audit_samples = 20;
  audit.audit_degree_bound = 3;

  for (const auto& entry : testutil::corpus()) {
    auto R = graded(entry.dsl);
    INFO(entry.name);
    SuperStretchedResult ss = is_super_stretched(*R, Rng(11), audit);
    REQUIRE(ss.audit);
    // No sampled hsop may contradict the finite-criterion verdict.
    CHECK(ss.audit->consistent);
    if (!ss.value && R->dim() > 0)
      CHECK((!ss.stretched.value || !ss.m3_equality));

    if (ss.value && R->dim() > 0) {
      // Super-stretched rings have h-vector (1), (1,n), or (1,n,1).
      CHECK(classify_h_vector(R->h_vector().entries) != HClass::other);
      // Every sampled minimal reduction satisfies J m^2 = m^3.
      Rng rng(13);
      for (int s = 0; s < 3; ++s) {
        std::vector<Polynomial> J = sample_linear_sop(*R, rng);
        if (is_minimal_reduction(*R, J).is_reduction) CHECK(verify_m3_reduction(*R, J));
      }
    }

    // Positive-dimensional hypersurfaces of multiplicity <= 3 are
    // super-stretched.
    if (R->dim() > 0 && R->is_hypersurface() && R->multiplicity() <= 3) CHECK(ss.value);

    // Minimal multiplicity iff some sampled linear reduction has J m = m^2
    // iff the h-vector is (1) or (1,n).
    bool mm = has_minimal_multiplicity(*R);
    HClass cls = classify_h_vector(R->h_vector().entries);
    CHECK(mm == (cls == HClass::one || cls == HClass::one_n));
    Rng rng2(17);
    std::vector<Polynomial> J =
        R->dim() == 0 ? std::vector<Polynomial>{} : sample_linear_sop(*R, rng2);
    Ideal m = R->maximal_ideal();
    bool jm_eq_m2 = R->equal_in_ring(ideal_product(Ideal(R->poly_ring(), J), m),
                                     ideal_power(m, 2));
    CHECK(jm_eq_m2 == mm);
  }

  // The stretched two-quadric CI agrees with its super-stretched verdict.
  auto ci = graded("ring GF(32003)[x,y,z]\nideal x^2, y^2");
  CHECK(is_stretched(*ci, Rng(11), kOpts).value ==
        is_super_stretched(*ci, Rng(11), kOpts).value);
}

TEST_CASE("classically known rings pass the necessary conditions") {
  SUBCASE("the triangle cone: minimal multiplicity, not Gorenstein") {
    auto R = graded("ring GF(32003)[x,y,z]\nideal x*y - z^2, y*z - x^2, x*z - y^2");
    CHECK(R->dim() == 1);
    CHECK(R->embdim() == 3);
    CHECK(R->multiplicity() == 3);
    CHECK(R->h_vector().entries == std::vector<long long>{1, 2});
    // Oracle: dims of the quotient by a fixed verified regular form.
    auto r = R->poly_ring();
    std::vector<Polynomial> gens = {pp(r, "x*y - z^2"), pp(r, "y*z - x^2"),
                                    pp(r, "x*z - y^2"), pp(r, "x + 2*y + 4*z")};
    REQUIRE(is_regular_sequence(R->ideal(), {pp(r, "x + 2*y + 4*z")}));
    CHECK(oracle::quotient_dim(r, gens, 0) == 1);
    CHECK(oracle::quotient_dim(r, gens, 1) == 2);
    CHECK(oracle::quotient_dim(r, gens, 2) == 0);
    CHECK_FALSE(R->gorenstein());
    CHECK_FALSE(R->is_hypersurface());
    CHECK(has_minimal_multiplicity(*R));
    CHECK(is_super_stretched(*R, Rng(5), kOpts).value);
    CHECK_FALSE(countable_type_obstruction(*R, Rng(5), kOpts).obstructed);
  }
  SUBCASE("the quadric cone in three variables") {
    auto R = graded("ring GF(32003)[x,y,z]\nideal y^2 + z^2");
    CHECK(R->dim() == 2);
    CHECK(R->multiplicity() == 2);
    CHECK(R->h_vector().entries == std::vector<long long>{1, 1});
    CHECK(R->gorenstein());
    CHECK(is_super_stretched(*R, Rng(5), kOpts).value);
    CHECK_FALSE(countable_type_obstruction(*R, Rng(5), kOpts).obstructed);
  }
}

TEST_CASE("linear generators are presentation artifacts") {
  // k[x,y,z]/(z, x^2) is k[x,y]/(x^2) in disguise: one linear minimal
  // generator cuts one variable.
  auto R = graded("ring GF(32003)[x,y,z]\nideal z, x^2");
  CHECK(R->embdim() == 2);
  CHECK(R->dim() == 1);
  CHECK(R->minimal_gen_count() == 2);
  CHECK(R->linear_gen_count() == 1);
  CHECK(R->is_hypersurface());
  CHECK(R->is_complete_intersection());
  CHECK(R->h_vector().entries == std::vector<long long>{1, 1});
  CHECK(has_minimal_multiplicity(*R));
  ObstructionResult obs = countable_type_obstruction(*R, Rng(5), kOpts);
  CHECK_FALSE(obs.obstructed);

  // A hidden linear form: substituting z = -x leaves the quadric x^2 - x*y.
  auto S = graded("ring GF(32003)[x,y,z]\nideal z + x, x^2 + y*z");
  CHECK(S->embdim() == 2);
  CHECK(S->is_hypersurface());
  CHECK(S->multiplicity() == 2);

  // When the quadric is absorbed by the linear form the ring is free.
  auto T = graded("ring GF(32003)[x,y,z]\nideal z + x, x^2 + x*z");
  CHECK(T->minimal_gen_count() == 1);
  CHECK_FALSE(T->is_hypersurface());
  CHECK(T->h_vector().entries == std::vector<long long>{1});
}

TEST_CASE("aggregate report") {
  SUBCASE("the quartic hypersurface") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3*y - x*y^3");
    RingReport rep = build_report(*R, Rng(5), kOpts);
    CHECK(rep.cm);
    CHECK(rep.hvector == std::vector<long long>{1, 1, 1, 1});
    CHECK(rep.stretched == true);
    CHECK(rep.super_stretched == false);
    CHECK(rep.obstruction == "not super-stretched");
    CHECK(rep.h_class == HClass::other);
  }
  SUBCASE("the cubic hypersurface passes") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^3");
    RingReport rep = build_report(*R, Rng(5), kOpts);
    CHECK(rep.hvector == std::vector<long long>{1, 1, 1});
    CHECK(rep.super_stretched == true);
    CHECK(rep.h_class == HClass::one_n_one);
    CHECK(rep.obstruction == "none_found");
  }
  SUBCASE("free rings are trivially fine") {
    auto R = graded("ring GF(32003)[x,y,z]");
    RingReport rep = build_report(*R, Rng(5), kOpts);
    CHECK(rep.hvector == std::vector<long long>{1});
    CHECK(rep.min_mult == true);
    CHECK(rep.gorenstein == true);
    CHECK(rep.super_stretched == true);
    CHECK(rep.obstruction == "none_found");
  }
  SUBCASE("non-CM rings withhold structural verdicts") {
    auto R = graded("ring GF(32003)[x,y]\nideal x^2, x*y");
    RingReport rep = build_report(*R, Rng(5), kOpts);
    CHECK_FALSE(rep.cm);
    CHECK(rep.hvector_seed_dependent);
    CHECK_FALSE(rep.gorenstein.has_value());
    CHECK_FALSE(rep.stretched.has_value());
    CHECK_FALSE(rep.obstruction.has_value());
  }
}
