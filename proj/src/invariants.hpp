#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ring.hpp"

namespace gradecheck {

// Knobs for sampled decisions. Existential conditions ("some homogeneous
// reduction") are decided by `samples` generic draws over the field; verdicts
// from sampling are labelled generic-sampled in reports.
struct CheckOptions {
  int samples = 5;
  int retries = 8;
  bool audit = false;
  int audit_samples = 20;
  int audit_degree_bound = 3;
  int frobenius_t_bound = 4;
};

// Generic sampling helpers. Both verify the system-of-parameters property
// (Artinian quotient) and resample on failure.
std::vector<Polynomial> sample_linear_sop(const GradedRing& R, Rng& rng, int retries = 64);
std::vector<Polynomial> sample_hsop(const GradedRing& R, uint32_t degree_bound, Rng& rng,
                                    int retries = 64);

struct ReductionCheck {
  bool is_hsop = false;
  bool is_reduction = false;
  int reduction_number = -1;
  std::string note;
};

// Decides whether the linear forms J satisfy J m^N = m^{N+1} for some
// N <= SocDeg(R/J) + 1, by ascending search. J must be dim-many degree-1
// homogeneous forms whose quotient is Artinian.
ReductionCheck is_minimal_reduction(const GradedRing& R, const std::vector<Polynomial>& J);

struct StretchedResult {
  bool value = false;
  bool dim0_direct = false;
  std::vector<Polynomial> witness;  // passing minimal reduction (empty in dim 0)
  std::vector<long long> witness_dims;
  std::vector<std::string> failures;
};

// Existential definition: some homogeneous minimal reduction whose quotient
// has all graded pieces of dimension <= 1 from degree 2 on. Decided by
// generic sampling; dimension 0 reads the condition off R itself.
StretchedResult is_stretched(const GradedRing& R, Rng rng, const CheckOptions& opt);

struct HSopCheck {
  std::vector<Polynomial> sop;
  std::vector<int> degrees;
  int threshold = 0;  // sum deg(x_j) - d + 2
  std::vector<std::pair<int, long long>> dims;
  bool verdict = false;
  int failing_degree = -1;
};

// Evaluates dim_k (R/(sop))_i <= 1 for all i >= threshold on one supplied
// homogeneous system of parameters.
HSopCheck check_hsop_super_stretched(const GradedRing& R, const std::vector<Polynomial>& sop);

struct AuditSummary {
  int samples = 0;
  int failing_samples = 0;
  bool consistent = true;  // no sampled hsop contradicts the verdict
};

struct SuperStretchedResult {
  bool value = false;
  bool dim0_direct = false;
  StretchedResult stretched;
  std::vector<Polynomial> witness;  // minimal reduction used by the criterion
  bool m3_equality = false;         // J m^2 == m^3 for the witness
  std::optional<AuditSummary> audit;
};

// Finite criterion: stretched and J m^2 = m^3 for a sampled reduction J.
// Dimension 0 falls back to the direct degree-2 threshold. Optional audit
// mode cross-checks against sampled hsops of bounded degree.
SuperStretchedResult is_super_stretched(const GradedRing& R, Rng rng, const CheckOptions& opt);

// e(R) == embdim - dim + 1, cross-checked against the h-vector shape.
bool has_minimal_multiplicity(const GradedRing& R);

enum class HClass { one, one_n, one_n_one, other };
std::string h_class_name(HClass c);
HClass classify_h_vector(const std::vector<long long>& h);

struct ObstructionResult {
  bool obstructed = false;
  std::string reason;           // empty when none fired
  std::array<bool, 5> rules{};  // standalone evaluation of every rule
};

// Necessary-condition rule chain for graded countable Cohen-Macaulay type;
// "none found" is not a proof of countable type.
ObstructionResult countable_type_obstruction(const GradedRing& R, Rng rng,
                                             const CheckOptions& opt);

// (x_1..x_n)^[t] : (x_1...x_n)^(t-1) == (x_1..x_n) for a regular sequence.
bool verify_colon_power_identity(const GradedRing& R, const std::vector<Polynomial>& xs,
                                 unsigned t);

// (a_1^m..a_k^m)(a)^((k-1)(m-1)) == (a)^((m-1)k+1) for arbitrary elements.
bool verify_frobenius_product_identity(const GradedRing& R,
                                       const std::vector<Polynomial>& as, unsigned m);

struct DeltaCheck {
  Polynomial delta;
  bool colon_ok = false;
  bool dim_inequality_ok = false;
  bool ok = false;
};

// For hsops (ys) inside (xs): the determinant of a containment witness has
// (ys) : delta == (xs), and dim_k(R/xs)_c <= dim_k(R/ys)_{c+deg delta} at the
// critical degree c.
DeltaCheck verify_delta_injectivity(const GradedRing& R, const std::vector<Polynomial>& ys,
                                    const std::vector<Polynomial>& xs);

// J m^2 == m^3 in R.
bool verify_m3_reduction(const GradedRing& R, const std::vector<Polynomial>& J);

// The t-th power sequence of a reduction with J m^2 = m^3 still satisfies the
// degreewise threshold condition.
bool verify_frobenius_sop_threshold(const GradedRing& R, const std::vector<Polynomial>& J,
                                    unsigned t);

enum class CiClass { hypersurface, two_quadrics, not_applicable };
std::string ci_class_name(CiClass c);

// Classification of stretched complete intersections; any other shape is an
// internal consistency alarm.
CiClass ci_classification(const GradedRing& R, Rng rng, const CheckOptions& opt);

// Aggregate report; fields that need Cohen-Macaulayness stay unset when the
// certificate fails.
struct RingReport {
  std::string ring_description;
  int dim = 0;
  long long embdim = 0;
  long long mult = 0;
  bool cm = false;
  std::string cm_diagnostic;
  std::vector<long long> hvector;
  bool hvector_seed_dependent = false;
  std::optional<bool> gorenstein;
  std::optional<bool> hypersurface;
  std::optional<bool> ci;
  std::optional<bool> min_mult;
  std::optional<bool> stretched;
  std::optional<bool> super_stretched;
  std::optional<HClass> h_class;
  std::optional<std::string> obstruction;  // "none_found" or the reason
  std::vector<std::string> notes;
};

RingReport build_report(const GradedRing& R, Rng rng, const CheckOptions& opt);

}  // namespace gradecheck
