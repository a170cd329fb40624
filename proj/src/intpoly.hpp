#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace gradecheck {

// Dense univariate polynomial over the integers, used for Hilbert numerators.
// Coefficients are stored ascending with no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;  // zero
  explicit IntPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly one() { return IntPoly({1}); }
  static IntPoly power_term(unsigned degree, long long coeff);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<long long>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  long long eval_one() const;

  // Exact quotient by (1 - t); requires eval_one() == 0.
  IntPoly divided_by_one_minus_t() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

}  // namespace gradecheck
