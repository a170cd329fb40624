#include "intpoly.hpp"

namespace gradecheck {

IntPoly IntPoly::power_term(unsigned degree, long long coeff) {
  std::vector<long long> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<long long> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

long long IntPoly::eval_one() const {
  long long s = 0;
  for (long long v : c_) s += v;
  return s;
}

IntPoly IntPoly::divided_by_one_minus_t() const {
  if (eval_one() != 0) throw InternalError("numerator not divisible by (1 - t)");
  if (c_.empty()) return IntPoly();
  // f = (1 - t) q  <=>  q_i = f_i + q_{i-1}
  std::vector<long long> q(c_.size() - 1, 0);
  long long acc = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    acc += c_[i];
    q[i] = acc;
  }
  return IntPoly(std::move(q));
}

std::string IntPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long v = c_[i];
    if (v == 0) continue;
    if (!out.empty()) {
      out += v > 0 ? " + " : " - ";
      v = v > 0 ? v : -v;
    } else if (v < 0) {
      out += "-";
      v = -v;
    }
    if (i == 0)
      out += std::to_string(v);
    else {
      if (v != 1) out += std::to_string(v) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gradecheck
