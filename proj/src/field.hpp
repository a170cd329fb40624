#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "rng.hpp"

namespace gradecheck {

enum class FieldKind : uint8_t { rationals, prime };

// Describes the coefficient field: QQ or GF(p) for a prime p < 2^31.
struct FieldDesc {
  FieldKind kind = FieldKind::prime;
  uint32_t p = 32003;

  static FieldDesc rational() { return FieldDesc{FieldKind::rationals, 0}; }
  static FieldDesc gf(uint32_t p);

  bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }
  std::string name() const;
};

bool is_prime(uint64_t n);

// One exact scalar. GF(p) values are kept reduced to [0, p); rational values
// are kept in lowest terms with positive denominator (mpq_class guarantees
// canonical form). No floating point anywhere.
class FieldElement {
 public:
  FieldElement() = default;  // zero of GF(32003); containers only

  static FieldElement zero(const FieldDesc& f) { return FieldElement(f); }
  static FieldElement one(const FieldDesc& f) { return from_integer(f, 1); }
  static FieldElement from_integer(const FieldDesc& f, long long v);
  // Uniform over GF(p); for QQ a uniform integer in [-1000, 1000].
  static FieldElement random(const FieldDesc& f, Rng& rng);

  const FieldDesc& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;

  // Representation accessors (tests and printing).
  long long residue() const;          // GF(p) only
  const mpq_class& rational() const;  // QQ only

 private:
  explicit FieldElement(const FieldDesc& f) : f_(f) {}
  void check_same(const FieldElement& o) const {
    if (f_ != o.f_) throw RingMismatchError();
  }

  FieldDesc f_{};
  long long r_ = 0;  // residue when prime
  mpq_class q_;      // value when rational
};

}  // namespace gradecheck
