#include "field.hpp"

namespace gradecheck {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldDesc FieldDesc::gf(uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("GF modulus must be prime, got " + std::to_string(p));
  if (p > 0x7fffffffu) throw PreconditionError("GF modulus must be < 2^31");
  return FieldDesc{FieldKind::prime, p};
}

std::string FieldDesc::name() const {
  return kind == FieldKind::rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

namespace {

long long mod_reduce(long long v, uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return r;
}

// Extended Euclid; p prime, 0 < a < p.
long long mod_inverse(long long a, uint32_t p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InternalError("modular inverse of a zero divisor");
  return t < 0 ? t + p : t;
}

}  // namespace

FieldElement FieldElement::from_integer(const FieldDesc& f, long long v) {
  FieldElement e(f);
  if (f.kind == FieldKind::prime)
    e.r_ = mod_reduce(v, f.p);
  else
    e.q_ = mpq_class(static_cast<long>(v));
  return e;
}

FieldElement FieldElement::random(const FieldDesc& f, Rng& rng) {
  if (f.kind == FieldKind::prime)
    return from_integer(f, static_cast<long long>(rng.below(f.p)));
  return from_integer(f, static_cast<long long>(rng.below(2001)) - 1000);
}

bool FieldElement::is_zero() const {
  return f_.kind == FieldKind::prime ? r_ == 0 : sgn(q_) == 0;
}

bool FieldElement::is_one() const {
  return f_.kind == FieldKind::prime ? r_ == 1 : q_ == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement e(f_);
  if (f_.kind == FieldKind::prime)
    e.r_ = (r_ + o.r_) % f_.p;
  else
    e.q_ = q_ + o.q_;
  return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement e(f_);
  if (f_.kind == FieldKind::prime)
    e.r_ = (r_ - o.r_ + f_.p) % f_.p;
  else
    e.q_ = q_ - o.q_;
  return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement e(f_);
  if (f_.kind == FieldKind::prime)
    e.r_ = (r_ * o.r_) % f_.p;  // p < 2^31, product fits in 64 bits
  else
    e.q_ = q_ * o.q_;
  return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement e(f_);
  if (f_.kind == FieldKind::prime)
    e.r_ = r_ == 0 ? 0 : f_.p - r_;
  else
    e.q_ = -q_;
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in the coefficient field");
  FieldElement e(f_);
  if (f_.kind == FieldKind::prime)
    e.r_ = mod_inverse(r_, f_.p);
  else
    e.q_ = 1 / q_;
  return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return f_.kind == FieldKind::prime ? r_ == o.r_ : q_ == o.q_;
}

std::string FieldElement::str() const {
  return f_.kind == FieldKind::prime ? std::to_string(r_) : q_.get_str();
}

long long FieldElement::residue() const {
  if (f_.kind != FieldKind::prime) throw InternalError("residue() on a rational");
  return r_;
}

const mpq_class& FieldElement::rational() const {
  if (f_.kind != FieldKind::rationals) throw InternalError("rational() on a prime-field value");
  return q_;
}

}  // namespace gradecheck
