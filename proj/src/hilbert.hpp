#pragma once

#include <vector>

#include "groebner.hpp"
#include "intpoly.hpp"

namespace gradecheck {

// Hilbert series of S/I in lowest terms: numerator / (1 - t)^dim with
// numerator(1) != 0 whenever dim > 0.
struct HilbertData {
  IntPoly numerator;
  int dim = 0;
};

// Exact series computed on the leading-term ideal by recursive pivot
// splitting, then normalized. Requires a proper homogeneous ideal.
HilbertData hilbert_series(const Ideal& I);

// dim_k (S/I)_i: the number of standard monomials of degree i.
long long hilbert_function(const Ideal& I, uint32_t i);

// Degree-i monomials not divisible by any leading monomial of I.
std::vector<Monomial> standard_monomials(const Ideal& I, uint32_t i);

// Numerator recursion on a bare monomial list (exposed for tests).
IntPoly hilbert_numerator_from_monomials(std::vector<Monomial> lts, size_t nvars);

// Socle (0 : m) of an Artinian quotient S/A: a basis of homogeneous normal
// forms, its k-dimension, and the top degree present.
struct SocleData {
  std::vector<Polynomial> basis;
  int type = 0;
  int socle_degree = 0;
};

SocleData socle(const Ideal& artinian);

}  // namespace gradecheck
