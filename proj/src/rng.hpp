#pragma once

#include <cstdint>

namespace gradecheck {

// Deterministic splittable generator (splitmix64). Not cryptographic; it only
// has to make "generic" choices over a large prime field reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0, by rejection.
  uint64_t below(uint64_t n) {
    const uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
    uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Independent child stream, a pure function of (current state, salt).
  // Results do not depend on how sibling streams are consumed.
  Rng split(uint64_t salt) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL + 0x9e3779b97f4a7c15ULL * salt));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace gradecheck
