#include "ring.hpp"

#include <algorithm>

namespace gradecheck {

namespace {
constexpr uint64_t kSaltReduction = 0x41;
constexpr uint64_t kSaltFallback = 0x42;
}  // namespace

GradedRing::GradedRing(RingPtr S, Ideal I, uint64_t seed)
    : S_(std::move(S)), I_(std::move(I)), seed_(seed) {
  if (I_.ring().get() != S_.get()) throw RingMismatchError();
  for (const Polynomial& g : I_.generators()) {
    if (!g.is_homogeneous())
      throw PreconditionError("defining ideal must be homogeneous; offending generator: " +
                              g.str());
    if (g.degree() == 0)
      throw PreconditionError("constant generator makes the presentation improper");
  }
}

std::string GradedRing::describe() const {
  std::string out = S_->describe();
  if (I_.is_zero()) return out;
  out += " / (";
  const auto& gens = I_.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].str();
  }
  return out + ")";
}

int GradedRing::dim() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dim_) dim_ = krull_dimension(I_);
  return *dim_;
}

long long GradedRing::embdim() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!embdim_) embdim_ = hilbert_function(I_, 1);
  return *embdim_;
}

const HilbertData& GradedRing::hilbert() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!hilbert_) hilbert_ = hilbert_series(I_);
  return *hilbert_;
}

long long GradedRing::multiplicity() const { return hilbert().numerator.eval_one(); }

Ideal GradedRing::maximal_ideal() const {
  std::vector<Polynomial> vars;
  for (size_t i = 0; i < S_->nvars(); ++i) vars.push_back(S_->variable(i));
  return Ideal(S_, std::move(vars));
}

Ideal GradedRing::in_ring(const Ideal& J) const { return ideal_sum(I_, J); }

Ideal GradedRing::in_ring(const std::vector<Polynomial>& gens) const {
  return ideal_sum(I_, Ideal(S_, gens));
}

bool GradedRing::equal_in_ring(const Ideal& a, const Ideal& b) const {
  return ideal_equal(in_ring(a), in_ring(b));
}

ArtinianReduction GradedRing::compute_reduction() const {
  const int d = dim_ ? *dim_ : krull_dimension(I_);
  Rng rng = Rng(seed_).split(kSaltReduction);

  Ideal quotient = I_;
  std::vector<Polynomial> forms;
  IntPoly expected = hilbert_ ? hilbert_->numerator : hilbert_series(I_).numerator;

  for (int step = 1; step <= d; ++step) {
    bool found = false;
    std::string failures;
    for (int attempt = 0; attempt < kRegularityRetries && !found; ++attempt) {
      Polynomial ell = S_->random_linear_form(rng);
      Ideal q = colon(quotient, ell);
      if (!ideal_equal(q, quotient)) {
        // Log the witness: an element of the colon outside the ideal.
        std::string witness;
        for (const Polynomial& g : q.generators())
          if (!quotient.contains(g)) {
            witness = g.str();
            break;
          }
        failures += (failures.empty() ? "" : "; ") + std::string("'") + ell.str() +
                    "' zerodivisor (witness " + witness + ")";
        continue;
      }
      Ideal next = ideal_sum(quotient, Ideal(S_, {ell}));
      // A degree-1 regular element must preserve the series numerator.
      if (hilbert_series(next).numerator != expected)
        throw InternalError("numerator changed under a verified regular form");
      quotient = std::move(next);
      forms.push_back(std::move(ell));
      found = true;
    }
    if (!found) throw RegularityError(step, failures);
  }

  if (krull_dimension(quotient) != 0)
    throw InternalError("reduction by dim-many regular forms is not Artinian");

  ArtinianReduction red{quotient, forms, HVector{}};
  for (uint32_t i = 0;; ++i) {
    long long h = hilbert_function(quotient, i);
    if (h == 0) break;
    red.hvec.entries.push_back(h);
  }
  red.hvec.reduction = red.forms;

  // The h-vector of a verified reduction must match the series numerator.
  const auto& nc = expected.coeffs();
  if (nc != red.hvec.entries)
    throw InternalError("h-vector disagrees with the series numerator");
  return red;
}

const CmCertificate& GradedRing::cm() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!cm_) {
    if (!reduction_ && !reduction_error_) {
      try {
        reduction_ = compute_reduction();
      } catch (const RegularityError& e) {
        reduction_error_ = e.what();
      }
    }
    if (reduction_)
      cm_ = CmCertificate{true, reduction_->forms, ""};
    else
      cm_ = CmCertificate{false, {}, *reduction_error_};
  }
  return *cm_;
}

const ArtinianReduction& GradedRing::reduction() const {
  cm();
  std::lock_guard<std::mutex> lock(mu_);
  if (!reduction_)
    throw PreconditionError("not Cohen-Macaulay (or verification failed): " +
                            (reduction_error_ ? *reduction_error_ : std::string()));
  return *reduction_;
}

const HVector& GradedRing::h_vector() const { return reduction().hvec; }

const SocleData& GradedRing::socle_data() const {
  const ArtinianReduction& red = reduction();
  std::lock_guard<std::mutex> lock(mu_);
  if (!socle_) socle_ = socle(red.quotient);
  return *socle_;
}

bool GradedRing::gorenstein() const { return socle_data().type == 1; }

const std::vector<Polynomial>& GradedRing::minimal_gens() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!mingens_) mingens_ = minimal_generators(I_);
  return *mingens_;
}

long long GradedRing::minimal_gen_count() const {
  return static_cast<long long>(minimal_gens().size());
}

long long GradedRing::linear_gen_count() const {
  long long n = 0;
  for (const Polynomial& g : minimal_gens())
    if (g.degree() == 1) ++n;
  return n;
}

long long GradedRing::reduced_gen_count() const {
  return minimal_gen_count() - linear_gen_count();
}

bool GradedRing::is_hypersurface() const { return reduced_gen_count() == 1; }

bool GradedRing::is_complete_intersection() const {
  return reduced_gen_count() == embdim() - dim();
}

std::vector<long long> GradedRing::generic_linear_quotient_function() const {
  const int d = dim();
  Rng rng = Rng(seed_).split(kSaltFallback);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Polynomial> forms;
    for (int j = 0; j < d; ++j) forms.push_back(S_->random_linear_form(rng));
    Ideal q = in_ring(forms);
    if (krull_dimension(q) != 0) continue;
    std::vector<long long> out;
    for (uint32_t i = 0;; ++i) {
      long long h = hilbert_function(q, i);
      if (h == 0) break;
      out.push_back(h);
    }
    return out;
  }
  throw InternalError("no linear system of parameters found");
}

}  // namespace gradecheck
