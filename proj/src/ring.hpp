#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "rng.hpp"

namespace gradecheck {

// Hilbert function of a verified Artinian reduction, together with the
// regular linear forms that produced it.
struct HVector {
  std::vector<long long> entries;
  std::vector<Polynomial> reduction;
};

struct ArtinianReduction {
  Ideal quotient;  // defining ideal plus the reduction forms
  std::vector<Polynomial> forms;
  HVector hvec;
};

struct CmCertificate {
  bool value = false;
  std::vector<Polynomial> forms;  // verified regular forms (partial on failure)
  std::string diagnostic;         // failing step, when value is false
};

// Thrown internally when no regular linear form is found within the retry
// budget; callers translate it into a Cohen-Macaulay verdict.
struct RegularityError : Error {
  RegularityError(int step, std::string detail)
      : Error("no regular linear form found at step " + std::to_string(step) + ": " +
              detail),
        step(step) {}
  int step;
};

// Standard graded presentation S/I with every variable in degree 1 and I
// homogeneous in degrees >= 1 (hence proper). Invariants are cached; the
// cache is mutex-guarded so concurrent readers are safe. Generic choices are
// derived deterministically from the seed.
class GradedRing {
 public:
  GradedRing(RingPtr S, Ideal I, uint64_t seed);
  GradedRing(const GradedRing&) = delete;
  GradedRing& operator=(const GradedRing&) = delete;

  const RingPtr& poly_ring() const { return S_; }
  const Ideal& ideal() const { return I_; }
  uint64_t seed() const { return seed_; }
  std::string describe() const;

  int dim() const;
  long long embdim() const;  // dim_k (m / m^2)
  const HilbertData& hilbert() const;
  long long multiplicity() const;  // numerator(1)

  Ideal maximal_ideal() const;  // (all variables)
  Ideal in_ring(const Ideal& J) const;
  Ideal in_ring(const std::vector<Polynomial>& gens) const;
  bool equal_in_ring(const Ideal& a, const Ideal& b) const;

  // Cohen-Macaulay certificate: dim-many verified regular generic linear
  // forms, with the quotient numerator checked at every step.
  const CmCertificate& cm() const;
  const ArtinianReduction& reduction() const;  // throws PreconditionError if non-CM
  const HVector& h_vector() const;             // same precondition
  const SocleData& socle_data() const;         // socle of the Artinian reduction
  bool gorenstein() const;                     // socle type 1

  const std::vector<Polynomial>& minimal_gens() const;
  long long minimal_gen_count() const;  // mu(I)
  long long linear_gen_count() const;   // degree-1 minimal generators
  // mu of the minimal presentation: linear generators cut one variable each.
  long long reduced_gen_count() const;
  bool is_hypersurface() const;           // reduced_gen_count == 1
  bool is_complete_intersection() const;  // reduced_gen_count == embdim - dim

  // Non-CM fallback for reporting: the Hilbert function of R modulo dim-many
  // generic linear forms verified only to be a system of parameters. The
  // result can depend on the seed; callers must label it as such.
  std::vector<long long> generic_linear_quotient_function() const;

  static constexpr int kRegularityRetries = 8;

 private:
  ArtinianReduction compute_reduction() const;

  RingPtr S_;
  Ideal I_;
  uint64_t seed_;

  mutable std::mutex mu_;
  mutable std::optional<int> dim_;
  mutable std::optional<long long> embdim_;
  mutable std::optional<HilbertData> hilbert_;
  mutable std::optional<CmCertificate> cm_;
  mutable std::optional<ArtinianReduction> reduction_;
  mutable std::optional<std::string> reduction_error_;
  mutable std::optional<SocleData> socle_;
  mutable std::optional<std::vector<Polynomial>> mingens_;
};

}  // namespace gradecheck
