#include "monomial.hpp"

#include <algorithm>
#include <numeric>

namespace gradecheck {

Monomial::Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), uint32_t{0});
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<uint32_t> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
  std::vector<uint32_t> e(e_);
  for (size_t i = 0; i < e.size(); ++i) {
    if (d.e_[i] > e[i]) throw InternalError("monomial quotient is not exact");
    e[i] -= d.e_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<uint32_t> e(a.e_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

uint32_t Monomial::support_mask() const {
  uint32_t m = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) m |= 1u << i;
  return m;
}

Monomial Monomial::with_leading_slot(uint32_t exp) const {
  std::vector<uint32_t> e;
  e.reserve(e_.size() + 1);
  e.push_back(exp);
  e.insert(e.end(), e_.begin(), e_.end());
  return Monomial(std::move(e));
}

Monomial Monomial::without_leading_slot() const {
  return Monomial(std::vector<uint32_t>(e_.begin() + 1, e_.end()));
}

namespace {

// grevlex on the slice [lo, hi): higher degree wins; on ties the smaller
// exponent at the last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  uint32_t da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  const size_t n = a.nvars();
  if (order.kind == OrderKind::grevlex) return grevlex_range(a, b, 0, n);
  const size_t k = std::min<size_t>(order.block, n);
  if (int c = grevlex_range(a, b, 0, k)) return c;
  return grevlex_range(a, b, k, n);
}

namespace {

void enumerate(size_t nvars, size_t pos, uint32_t remaining, std::vector<uint32_t>& acc,
               std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    acc[pos] = remaining;
    out.push_back(Monomial(acc));
    return;
  }
  for (uint32_t e = remaining + 1; e-- > 0;) {
    acc[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, acc, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(size_t{0}));
    return out;
  }
  std::vector<uint32_t> acc(nvars, 0);
  enumerate(nvars, 0, degree, acc, out);
  return out;
}

}  // namespace gradecheck
