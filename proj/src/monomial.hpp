#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace gradecheck {

// Exponent vector with cached total degree. Exponents are stored densely;
// rings guard the variable count (n <= 16).
class Monomial {
 public:
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps);

  size_t nvars() const { return e_.size(); }
  uint32_t degree() const { return deg_; }
  uint32_t exponent(size_t i) const { return e_[i]; }
  const std::vector<uint32_t>& exponents() const { return e_; }
  bool is_constant() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& m) const;       // *this | m
  Monomial quotient_by(const Monomial& d) const;  // *this / d, requires d | *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  uint32_t support_mask() const;

  // Elimination-ring plumbing: add/remove a fresh first variable slot.
  Monomial with_leading_slot(uint32_t exp) const;
  Monomial without_leading_slot() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<uint32_t> e_;
  uint32_t deg_ = 0;
};

enum class OrderKind : uint8_t { grevlex, elim_first };

// grevlex is the working default; elim_first(k) compares a leading block of k
// variables first (grevlex within each block), which eliminates that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  uint32_t block = 0;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block;
  }
  std::string name() const {
    return kind == OrderKind::grevlex ? "grevlex"
                                      : "elim(" + std::to_string(block) + ")+grevlex";
  }
};

// Returns <0, 0, >0 as a < b, a == b, a > b under the order.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

// All exponent vectors of the given total degree, in a fixed deterministic
// order (descending lexicographic).
std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t degree);

}  // namespace gradecheck
