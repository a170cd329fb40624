#pragma once

#include <memory>
#include <string>

#include "dsl.hpp"
#include "ring.hpp"

namespace testutil {

using namespace gradecheck;

inline ParsedInput parse(const std::string& dsl) { return parse_input(dsl); }

inline std::unique_ptr<GradedRing> graded(const std::string& dsl, uint64_t seed = 7) {
  ParsedInput in = parse_input(dsl);
  return std::make_unique<GradedRing>(in.ring, Ideal(in.ring, in.generators), seed);
}

// Polynomial literal via the expression parser.
inline Polynomial pp(const RingPtr& ring, const std::string& text) {
  return parse_polynomial_list(ring, text).at(0);
}

inline std::vector<Polynomial> pl(const RingPtr& ring, const std::string& text) {
  return parse_polynomial_list(ring, text);
}

inline Ideal ideal_of(const RingPtr& ring, const std::string& text) {
  return Ideal(ring, parse_polynomial_list(ring, text));
}

// The fixed test corpus: polynomial rings, hypersurfaces of multiplicity
// 2/3/4, the two-quadric complete intersection, a fat Artinian cone, the
// quartic x^3*y - x*y^3, and an Artinian chain.
struct CorpusEntry {
  const char* name;
  const char* dsl;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> rings = {
      {"poly1", "ring GF(32003)[x]"},
      {"poly2", "ring GF(32003)[x,y]"},
      {"poly3", "ring GF(32003)[x,y,z]"},
      {"hyp2", "ring GF(32003)[x,y]\nideal x^2"},
      {"hyp3", "ring GF(32003)[x,y]\nideal x^3"},
      {"hyp4", "ring GF(32003)[x,y]\nideal x^4"},
      {"hyp3z", "ring GF(32003)[x,y,z]\nideal x^3"},
      {"hyp2z", "ring GF(32003)[x,y,z]\nideal x^2"},
      {"two_quadrics", "ring GF(32003)[x,y,z]\nideal x^2, y^2"},
      {"cone3",
       "ring GF(32003)[x,y,z]\nideal x^3, x^2*y, x^2*z, x*y^2, x*y*z, x*z^2, y^3, y^2*z, "
       "y*z^2, z^3"},
      {"quartic", "ring GF(32003)[x,y]\nideal x^3*y - x*y^3"},
      {"chain4", "ring GF(32003)[x]\nideal x^4"},
  };
  return rings;
}

}  // namespace testutil
