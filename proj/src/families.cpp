#include "families.hpp"

#include "linalg.hpp"

namespace gradecheck {

FamilySpec make_family_spec(const GradedRing& R, const std::vector<Polynomial>& hsop) {
  const int d = R.dim();
  if (static_cast<int>(hsop.size()) != d)
    throw PreconditionError("family spec needs an hsop of length dim");
  int degsum = 0;
  for (const Polynomial& f : hsop) {
    if (f.is_zero() || !f.is_homogeneous())
      throw PreconditionError("family spec hsop entries must be homogeneous nonzero");
    degsum += f.degree();
  }
  Ideal quotient = R.in_ring(hsop);
  if (krull_dimension(quotient) != 0)
    throw PreconditionError("family spec: not an hsop (quotient is not Artinian)");

  FamilySpec spec;
  spec.hsop = hsop;
  spec.critical_degree = degsum - d + 2;
  spec.quotient_basis =
      standard_monomials(quotient, static_cast<uint32_t>(spec.critical_degree));
  if (spec.quotient_basis.size() < 2)
    throw PreconditionError(
        "family spec: the quotient has dimension < 2 at the critical degree " +
        std::to_string(spec.critical_degree));
  return spec;
}

Ideal construct_family_ideal(const GradedRing& R, const FamilySpec& spec,
                             const Polynomial& ybar) {
  if (!ybar.is_zero() &&
      (!ybar.is_homogeneous() || ybar.degree() != spec.critical_degree))
    throw PreconditionError("family class must be homogeneous of the critical degree");
  Ideal base = R.in_ring(spec.hsop);
  Polynomial lift = normal_form(ybar, base);  // canonical, lift-independent
  Ideal out = lift.is_zero() ? base : ideal_sum(base, Ideal(R.poly_ring(), {lift}));
  if (krull_dimension(out) != 0)
    throw InternalError("family ideal is not Artinian");
  return out;
}

bool koszul_top_annihilation_check(const Ideal& family_ideal,
                                   const std::vector<Polynomial>& hsop) {
  for (const Polynomial& x : hsop)
    if (!normal_form(x, family_ideal).is_zero()) return false;
  return true;
}

DistinctnessReport sample_distinct_principal_ideals(const GradedRing& R, uint32_t degree,
                                                    const std::vector<FieldElement>& samples) {
  std::vector<Monomial> basis = standard_monomials(R.ideal(), degree);
  if (basis.size() < 2)
    throw PreconditionError("degree " + std::to_string(degree) +
                            " component has dimension < 2");
  DistinctnessReport rep;
  rep.degree = static_cast<int>(degree);
  Polynomial x = R.poly_ring()->monomial(basis[0]);
  Polynomial y = R.poly_ring()->monomial(basis[1]);
  rep.elements = {x.str(), y.str()};

  std::vector<Ideal> ideals;
  ideals.reserve(samples.size());
  for (const FieldElement& a : samples) ideals.push_back(R.in_ring({x + y * a}));

  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i] == samples[j]) continue;  // same parameter, same ideal
      ++rep.pairs_checked;
      if (ideal_equal(ideals[i], ideals[j]))
        rep.collisions.emplace_back(samples[i].str(), samples[j].str());
    }
  if (rep.pairs_checked == 0) {
    rep.vacuous = true;
    rep.note = "fewer than two distinct parameters: nothing to compare";
  }
  return rep;
}

namespace {

// Rank of the degree-1 classes of the given forms in R_1.
size_t rank_in_degree_one(const GradedRing& R, const std::vector<Polynomial>& forms) {
  std::vector<Monomial> basis = standard_monomials(R.ideal(), 1);
  DenseMatrix m(0, basis.size(), R.poly_ring()->field());
  for (const Polynomial& f : forms) {
    Polynomial nf = normal_form(f, R.ideal());
    std::vector<FieldElement> row(basis.size(), FieldElement::zero(R.poly_ring()->field()));
    for (const Term& t : nf.terms())
      for (size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == t.mono) {
          row[k] = t.coeff;
          break;
        }
    m.append_row(row);
  }
  return row_reduce(m);
}

}  // namespace

DistinctnessReport one_dim_family(const GradedRing& R, Rng rng,
                                  const std::vector<FieldElement>& samples) {
  if (R.dim() != 1) throw PreconditionError("the one-dimensional family needs dim R = 1");
  const CmCertificate& cert = R.cm();
  if (!cert.value)
    throw PreconditionError("Cohen-Macaulay verification failed: " + cert.diagnostic);

  DistinctnessReport rep;
  if (R.is_hypersurface()) {
    rep.vacuous = true;
    rep.note = "hypersurface: the family hypotheses exclude this ring";
    return rep;
  }
  if (has_minimal_multiplicity(R)) {
    rep.vacuous = true;
    rep.note = "minimal multiplicity: the family hypotheses exclude this ring";
    return rep;
  }

  // x: a sampled linear minimal reduction.
  std::vector<Polynomial> xs = sample_linear_sop(R, rng);
  ReductionCheck rc = is_minimal_reduction(R, xs);
  if (!rc.is_reduction) {
    rep.vacuous = true;
    rep.note = "sampled linear form is not a reduction: " + rc.note;
    return rep;
  }
  Polynomial x = xs[0];

  // a, b: degree-1 forms with {x, a, b} independent in R_1 and a^2 or a*b
  // surviving modulo x*m.
  Ideal xm = R.in_ring(ideal_product(Ideal(R.poly_ring(), {x}), R.maximal_ideal()));
  std::vector<Polynomial> candidates;
  for (size_t i = 0; i < R.poly_ring()->nvars(); ++i)
    candidates.push_back(R.poly_ring()->variable(i));
  for (int extra = 0; extra < 4; ++extra)
    candidates.push_back(R.poly_ring()->random_linear_form(rng));

  Polynomial a, b;
  bool found = false;
  for (size_t i = 0; i < candidates.size() && !found; ++i)
    for (size_t j = 0; j < candidates.size() && !found; ++j) {
      if (i == j) continue;
      if (rank_in_degree_one(R, {x, candidates[i], candidates[j]}) != 3) continue;
      Polynomial aa = candidates[i] * candidates[i];
      Polynomial ab = candidates[i] * candidates[j];
      if (!normal_form(aa, xm).is_zero() || !normal_form(ab, xm).is_zero()) {
        a = candidates[i];
        b = candidates[j];
        found = true;
      }
    }
  if (!found) {
    rep.vacuous = true;
    rep.note = "could not verify the hypotheses: no independent pair with a^2 or a*b "
               "outside x*m";
    return rep;
  }
  rep.elements = {x.str(), a.str(), b.str()};
  rep.degree = 1;

  std::vector<Ideal> ideals;
  ideals.reserve(samples.size());
  for (const FieldElement& alpha : samples)
    ideals.push_back(R.in_ring({x, a + b * alpha}));

  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i] == samples[j]) continue;
      ++rep.pairs_checked;
      if (ideal_equal(ideals[i], ideals[j]))
        rep.collisions.emplace_back(samples[i].str(), samples[j].str());
    }
  return rep;
}

}  // namespace gradecheck
