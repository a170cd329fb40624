#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace gradecheck {

// Ideal of a PolyRing: a generator list plus a lazily computed reduced
// Groebner basis under the ring's order. The reduced basis (monic,
// auto-reduced, sorted ascending by leading monomial) is unique for a fixed
// order, so ideal equality is basis equality. The cache is shared by copies
// and synchronized, so concurrent readers are safe.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  // Reduced Groebner basis; empty for the zero ideal.
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> gb;
  };
  std::shared_ptr<Cache> cache_;
};

// Remainder of f on division by the reduced basis of I; zero iff f is in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

// Full multivariate division of f by the list gs (in list order). When
// `quotients` is non-null it receives one quotient per divisor such that
// f = sum q_i g_i + remainder.
Polynomial reduce_by_list(const Polynomial& f, const std::vector<Polynomial>& gs,
                          std::vector<Polynomial>* quotients = nullptr);

bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned t);  // t = 0 gives the unit ideal

// Bracket power on the designated generator sequence: the ideal generated by
// the t-th powers of the current generators. Generator-dependent by design.
Ideal frobenius_power(const Ideal& a, unsigned t);  // t >= 1

// {g : g f in I}, computed by intersecting with (f) and dividing exactly.
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon_ideal(const Ideal& I, const Ideal& J);

// Intersection via an auxiliary elimination variable with a block order.
Ideal intersect(const Ideal& I, const Ideal& J);

// Krull dimension of S/I, computed combinatorially from the leading-term
// ideal. Returns -1 for the unit ideal.
int krull_dimension(const Ideal& I);

// Minimal leading monomials of the reduced basis.
std::vector<Monomial> leading_monomials(const Ideal& I);

// Homogeneous minimal generating set, degree by degree (graded Nakayama).
std::vector<Polynomial> minimal_generators(const Ideal& I);

// Exact quotient f / g; throws InternalError if the division is not exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Determinant over the polynomial ring by fraction-free elimination.
Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m, const RingPtr& ring);

// Witness for (y_1..y_n) contained in (x_1..x_m) modulo an optional base
// ideal: a matrix A of homogeneous entries with y_i = sum_j a_ij x_j (mod
// base), and det(A) in the square case. `variant` perturbs the division
// order, producing a different valid witness.
struct ContainmentWitness {
  std::vector<Polynomial> sources;  // the y_i
  std::vector<Polynomial> targets;  // the x_j
  std::vector<std::vector<Polynomial>> matrix;
  std::optional<Polynomial> det;  // square case only
};

ContainmentWitness containment_witness(const std::vector<Polynomial>& sources,
                                       const std::vector<Polynomial>& targets,
                                       const Ideal* base = nullptr,
                                       unsigned variant = 0);

// True when each element is a nonzerodivisor modulo base + its predecessors.
// On failure, `why` (if non-null) names the failing step.
bool is_regular_sequence(const Ideal& base, const std::vector<Polynomial>& seq,
                         std::string* why = nullptr);

}  // namespace gradecheck
