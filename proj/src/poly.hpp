#pragma once

#include <memory>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"
#include "rng.hpp"

namespace gradecheck {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  FieldElement coeff;
};

// Sparse multivariate polynomial: terms strictly descending under the ring
// order, no zero coefficients. Every polynomial belongs to exactly one ring;
// mixing rings throws.
class Polynomial {
 public:
  Polynomial() = default;  // invalid placeholder for containers

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldElement& leading_coefficient() const { return leading_term().coeff; }

  int degree() const;  // max total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  Polynomial homogeneous_component(uint32_t i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend class PolyRing;
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_pow(const Polynomial& f, unsigned e);
void check_same_ring(const Polynomial& a, const Polynomial& b);

// The ambient polynomial ring: variable names, coefficient field, monomial
// order, and the Groebner pair budget inherited by derived computations.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr create(std::vector<std::string> variables, FieldDesc field,
                        MonomialOrder order = {}, size_t pair_budget = 100000);

  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variable_names() const { return vars_; }
  const FieldDesc& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  size_t pair_budget() const { return pair_budget_; }

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const FieldElement& c) const;
  Polynomial constant(long long v) const;
  Polynomial variable(size_t i) const;
  Polynomial monomial(const Monomial& m) const;
  Polynomial monomial(const Monomial& m, const FieldElement& c) const;
  // Sorts descending, merges equal monomials, prunes zeros.
  Polynomial from_terms(std::vector<Term> terms) const;

  // Degree-1 form with coefficients drawn uniformly from the field; rejection
  // sampling guarantees the result is nonzero. Deterministic given the rng.
  Polynomial random_linear_form(Rng& rng) const;
  // Nonzero homogeneous polynomial of the given degree with uniform
  // coefficients on every monomial.
  Polynomial random_homogeneous(uint32_t degree, Rng& rng) const;

  std::string describe() const;  // e.g. "GF(32003)[x,y]"

 private:
  PolyRing(std::vector<std::string> vars, FieldDesc field, MonomialOrder order,
           size_t pair_budget)
      : vars_(std::move(vars)), field_(field), order_(order), pair_budget_(pair_budget) {}

  std::vector<std::string> vars_;
  FieldDesc field_;
  MonomialOrder order_;
  size_t pair_budget_;
};

}  // namespace gradecheck
