#pragma once

#include "invariants.hpp"

namespace gradecheck {

// The finite, checkable fragment of the uncountable-family constructions: an
// hsop whose quotient has a fat graded piece at the critical degree
// c = sum deg(x_j) - d + 2, with the basis of that piece.
struct FamilySpec {
  std::vector<Polynomial> hsop;
  int critical_degree = 0;
  std::vector<Monomial> quotient_basis;
};

// Validates the hsop and the dim >= 2 requirement at the critical degree.
FamilySpec make_family_spec(const GradedRing& R, const std::vector<Polynomial>& hsop);

// Preimage ideal of the principal ideal generated by a degree-c class: the
// hsop plus a canonical lift (the class's normal form). Verified Artinian.
Ideal construct_family_ideal(const GradedRing& R, const FamilySpec& spec,
                             const Polynomial& ybar);

// Each hsop element must lie in the family ideal.
bool koszul_top_annihilation_check(const Ideal& family_ideal,
                                   const std::vector<Polynomial>& hsop);

struct DistinctnessReport {
  bool vacuous = false;
  std::string note;
  int degree = -1;
  std::vector<std::string> elements;  // the basis elements / forms used
  int pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> collisions;
  bool all_distinct() const { return collisions.empty(); }
};

// Pairwise inequality of the principal ideals (x + alpha y) for two
// independent degree-i basis elements and the sampled parameters.
DistinctnessReport sample_distinct_principal_ideals(const GradedRing& R, uint32_t degree,
                                                    const std::vector<FieldElement>& samples);

// Dimension-1 family (x, a + alpha b) under the non-hypersurface,
// non-minimal-multiplicity hypotheses; vacuous (with the reason) otherwise.
DistinctnessReport one_dim_family(const GradedRing& R, Rng rng,
                                  const std::vector<FieldElement>& samples);

}  // namespace gradecheck
