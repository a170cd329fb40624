#include "invariants.hpp"

#include <algorithm>

namespace gradecheck {

namespace {

void require_cm(const GradedRing& R) {
  const CmCertificate& cert = R.cm();
  if (!cert.value)
    throw PreconditionError("Cohen-Macaulay verification failed: " + cert.diagnostic);
}

std::vector<long long> quotient_dims(const Ideal& artinian) {
  std::vector<long long> dims;
  for (uint32_t i = 0;; ++i) {
    long long h = hilbert_function(artinian, i);
    if (h == 0) break;
    dims.push_back(h);
  }
  return dims;
}

std::string forms_str(const std::vector<Polynomial>& forms) {
  std::string out = "(";
  for (size_t i = 0; i < forms.size(); ++i) {
    if (i) out += ", ";
    out += forms[i].str();
  }
  return out + ")";
}

}  // namespace

std::vector<Polynomial> sample_linear_sop(const GradedRing& R, Rng& rng, int retries) {
  const int d = R.dim();
  if (d == 0) return {};
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> forms;
    for (int j = 0; j < d; ++j) forms.push_back(R.poly_ring()->random_linear_form(rng));
    if (krull_dimension(R.in_ring(forms)) == 0) return forms;
  }
  throw PreconditionError("no linear system of parameters found by sampling");
}

std::vector<Polynomial> sample_hsop(const GradedRing& R, uint32_t degree_bound, Rng& rng,
                                    int retries) {
  const int d = R.dim();
  if (d == 0) return {};
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> forms;
    for (int j = 0; j < d; ++j) {
      uint32_t deg = 1 + static_cast<uint32_t>(rng.below(degree_bound));
      forms.push_back(R.poly_ring()->random_homogeneous(deg, rng));
    }
    if (krull_dimension(R.in_ring(forms)) == 0) return forms;
  }
  throw PreconditionError("no homogeneous system of parameters found by sampling");
}

ReductionCheck is_minimal_reduction(const GradedRing& R, const std::vector<Polynomial>& J) {
  ReductionCheck out;
  const int d = R.dim();
  if (static_cast<int>(J.size()) != d) {
    out.note = "not an hsop: expected " + std::to_string(d) + " linear forms, got " +
               std::to_string(J.size());
    return out;
  }
  for (const Polynomial& f : J)
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1) {
      out.note = "not a minimal reduction candidate: '" + f.str() +
                 "' is not a degree-1 form";
      return out;
    }
  Ideal quotient = R.in_ring(J);
  if (krull_dimension(quotient) != 0) {
    out.note = "not an hsop: the quotient is not Artinian";
    return out;
  }
  out.is_hsop = true;

  const std::vector<long long> dims = quotient_dims(quotient);
  const int socle_deg = static_cast<int>(dims.size()) - 1;
  Ideal m = R.maximal_ideal();
  Ideal Jideal(R.poly_ring(), J);
  for (int N = 0; N <= socle_deg + 1; ++N) {
    Ideal lhs = ideal_product(Jideal, ideal_power(m, N));
    Ideal rhs = ideal_power(m, N + 1);
    if (R.equal_in_ring(lhs, rhs)) {
      out.is_reduction = true;
      out.reduction_number = N;
      return out;
    }
  }
  out.note = "J m^N never reached m^(N+1) up to N = " + std::to_string(socle_deg + 1);
  return out;
}

StretchedResult is_stretched(const GradedRing& R, Rng rng, const CheckOptions& opt) {
  require_cm(R);
  StretchedResult out;
  const int d = R.dim();

  if (d == 0) {
    out.dim0_direct = true;
    out.witness_dims = quotient_dims(R.ideal());
    out.value = true;
    for (size_t i = 2; i < out.witness_dims.size(); ++i)
      if (out.witness_dims[i] > 1) out.value = false;
    if (!out.value) out.failures.push_back("a graded piece in degree >= 2 has dimension > 1");
    return out;
  }

  for (int s = 0; s < opt.samples; ++s) {
    Rng child = rng.split(s);
    std::vector<Polynomial> J;
    try {
      J = sample_linear_sop(R, child);
    } catch (const PreconditionError& e) {
      out.failures.push_back(e.what());
      continue;
    }
    std::vector<long long> dims = quotient_dims(R.in_ring(J));
    bool pass = true;
    for (size_t i = 2; i < dims.size(); ++i)
      if (dims[i] > 1) pass = false;
    if (pass) {
      out.value = true;
      out.witness = std::move(J);
      out.witness_dims = std::move(dims);
      return out;
    }
    out.failures.push_back("reduction " + forms_str(J) + " has a graded piece of dimension > 1");
  }
  return out;
}

HSopCheck check_hsop_super_stretched(const GradedRing& R, const std::vector<Polynomial>& sop) {
  const int d = R.dim();
  if (static_cast<int>(sop.size()) != d)
    throw PreconditionError("not an hsop: expected " + std::to_string(d) +
                            " homogeneous forms, got " + std::to_string(sop.size()));
  HSopCheck out;
  out.sop = sop;
  int degsum = 0;
  for (const Polynomial& f : sop) {
    if (f.is_zero() || !f.is_homogeneous())
      throw PreconditionError("not an hsop: '" + f.str() + "' is not homogeneous nonzero");
    out.degrees.push_back(f.degree());
    degsum += f.degree();
  }
  Ideal quotient = R.in_ring(sop);
  if (krull_dimension(quotient) != 0)
    throw PreconditionError("not an hsop: the quotient is not Artinian");

  out.threshold = degsum - d + 2;
  out.verdict = true;
  for (int i = out.threshold;; ++i) {
    long long h = hilbert_function(quotient, static_cast<uint32_t>(i));
    out.dims.emplace_back(i, h);
    if (h > 1) {
      out.verdict = false;
      if (out.failing_degree < 0) out.failing_degree = i;
    }
    if (h == 0) break;
  }
  return out;
}

SuperStretchedResult is_super_stretched(const GradedRing& R, Rng rng,
                                        const CheckOptions& opt) {
  SuperStretchedResult out;
  const int d = R.dim();

  if (d == 0) {
    // With the empty system of parameters the threshold is 2; stretched and
    // super-stretched coincide in dimension zero.
    out.dim0_direct = true;
    out.stretched = is_stretched(R, rng.split(0x10), opt);
    out.value = out.stretched.value;
  } else {
    require_cm(R);
    out.stretched = is_stretched(R, rng.split(0x10), opt);
    if (out.stretched.value) {
      out.witness = out.stretched.witness;
      out.m3_equality = verify_m3_reduction(R, out.witness);
      out.value = out.m3_equality;
    }
  }

  if (opt.audit) {
    AuditSummary audit;
    Rng arng = rng.split(0x11);
    const int n = d == 0 ? 1 : opt.audit_samples;
    for (int s = 0; s < n; ++s) {
      Rng child = arng.split(s);
      std::vector<Polynomial> sop =
          d == 0 ? std::vector<Polynomial>{}
                 : sample_hsop(R, static_cast<uint32_t>(opt.audit_degree_bound), child);
      HSopCheck check = check_hsop_super_stretched(R, sop);
      ++audit.samples;
      if (!check.verdict) ++audit.failing_samples;
    }
    // A sampled failure contradicts a positive verdict; a clean sample sheet
    // never contradicts a negative one.
    audit.consistent = !(out.value && audit.failing_samples > 0);
    out.audit = audit;
  }
  return out;
}

bool has_minimal_multiplicity(const GradedRing& R) {
  require_cm(R);
  const bool by_mult = R.multiplicity() == R.embdim() - R.dim() + 1;
  HClass cls = classify_h_vector(R.h_vector().entries);
  const bool by_class = cls == HClass::one || cls == HClass::one_n;
  if (by_mult != by_class)
    throw InternalError("minimal multiplicity disagrees with the h-vector shape");
  return by_mult;
}

std::string h_class_name(HClass c) {
  switch (c) {
    case HClass::one: return "(1)";
    case HClass::one_n: return "(1,n)";
    case HClass::one_n_one: return "(1,n,1)";
    default: return "other";
  }
}

HClass classify_h_vector(const std::vector<long long>& h) {
  if (h.empty() || h[0] != 1) return HClass::other;
  if (h.size() == 1) return HClass::one;
  if (h.size() == 2) return h[1] >= 1 ? HClass::one_n : HClass::other;
  if (h.size() == 3) return h[1] >= 1 && h[2] == 1 ? HClass::one_n_one : HClass::other;
  return HClass::other;
}

ObstructionResult countable_type_obstruction(const GradedRing& R, Rng rng,
                                             const CheckOptions& opt) {
  require_cm(R);
  if (R.dim() <= 0)
    throw PreconditionError("the obstruction rules require positive dimension");

  ObstructionResult out;
  SuperStretchedResult ss = is_super_stretched(R, rng.split(0x20), opt);
  HClass cls = classify_h_vector(R.h_vector().entries);
  const bool hyp = R.is_hypersurface();
  const bool minmult = has_minimal_multiplicity(R);
  const bool gor = R.gorenstein();
  const int d = R.dim();

  out.rules[0] = !ss.value;
  out.rules[1] = cls == HClass::other;
  out.rules[2] = d == 1 && !hyp && !minmult;
  out.rules[3] = d == 1 && gor && !hyp;
  out.rules[4] = d >= 3 && !gor && !minmult;

  static const char* kReasons[5] = {
      "not super-stretched",
      "h-vector is not (1), (1,n), or (1,n,1)",
      "dimension 1 and neither a hypersurface nor of minimal multiplicity",
      "dimension 1 Gorenstein and not a hypersurface",
      "dimension >= 3, not Gorenstein, and not of minimal multiplicity",
  };
  for (int i = 0; i < 5; ++i)
    if (out.rules[i]) {
      out.obstructed = true;
      out.reason = kReasons[i];
      break;
    }
  return out;
}

bool verify_colon_power_identity(const GradedRing& R, const std::vector<Polynomial>& xs,
                                 unsigned t) {
  if (t < 1) throw PreconditionError("the colon-power identity needs t >= 1");
  std::string why;
  if (!is_regular_sequence(R.ideal(), xs, &why))
    throw PreconditionError("not a regular sequence: " + why);
  Polynomial prod = R.poly_ring()->one();
  for (const Polynomial& x : xs) prod = prod * x;
  Ideal bracket = R.in_ring(frobenius_power(Ideal(R.poly_ring(), xs), t).generators());
  Ideal lhs = colon(bracket, poly_pow(prod, t - 1));
  return ideal_equal(lhs, R.in_ring(xs));
}

bool verify_frobenius_product_identity(const GradedRing& R,
                                       const std::vector<Polynomial>& as, unsigned m) {
  if (m < 1) throw PreconditionError("the product identity needs m >= 1");
  const unsigned k = static_cast<unsigned>(as.size());
  std::vector<Polynomial> powers;
  powers.reserve(k);
  for (const Polynomial& a : as) powers.push_back(poly_pow(a, m));
  Ideal base(R.poly_ring(), as);
  Ideal lhs = ideal_product(Ideal(R.poly_ring(), powers), ideal_power(base, (k - 1) * (m - 1)));
  Ideal rhs = ideal_power(base, (m - 1) * k + 1);
  return R.equal_in_ring(lhs, rhs);
}

DeltaCheck verify_delta_injectivity(const GradedRing& R, const std::vector<Polynomial>& ys,
                                    const std::vector<Polynomial>& xs) {
  require_cm(R);
  const int d = R.dim();
  if (static_cast<int>(ys.size()) != d || static_cast<int>(xs.size()) != d)
    throw PreconditionError("both sequences must be systems of parameters of length dim");
  for (const auto* seq : {&ys, &xs})
    if (krull_dimension(R.in_ring(*seq)) != 0)
      throw PreconditionError("not an hsop: the quotient is not Artinian");

  DeltaCheck out;
  Polynomial delta;
  bool have_delta = false;
  for (unsigned variant = 0; variant < 4 && !have_delta; ++variant) {
    ContainmentWitness w = containment_witness(ys, xs, &R.ideal(), variant);
    if (!w.det) throw InternalError("square witness without a determinant");
    if (!normal_form(*w.det, R.ideal()).is_zero()) {
      delta = *w.det;
      have_delta = true;
    }
  }
  if (!have_delta)
    throw PreconditionError("degenerate witness: every sampled determinant vanishes in R");

  out.delta = delta;
  out.colon_ok = ideal_equal(colon(R.in_ring(ys), delta), R.in_ring(xs));

  int deg_xs = 0, deg_ys = 0;
  for (const Polynomial& x : xs) deg_xs += x.degree();
  for (const Polynomial& y : ys) deg_ys += y.degree();
  const int c = deg_xs - d + 2;
  const int shift = deg_ys - deg_xs;
  long long lhs = hilbert_function(R.in_ring(xs), static_cast<uint32_t>(c));
  long long rhs = hilbert_function(R.in_ring(ys), static_cast<uint32_t>(c + shift));
  out.dim_inequality_ok = lhs <= rhs;
  out.ok = out.colon_ok && out.dim_inequality_ok;
  return out;
}

bool verify_m3_reduction(const GradedRing& R, const std::vector<Polynomial>& J) {
  Ideal m = R.maximal_ideal();
  Ideal lhs = ideal_product(Ideal(R.poly_ring(), J), ideal_power(m, 2));
  return R.equal_in_ring(lhs, ideal_power(m, 3));
}

bool verify_frobenius_sop_threshold(const GradedRing& R, const std::vector<Polynomial>& J,
                                    unsigned t) {
  if (t < 1) throw PreconditionError("power threshold check needs t >= 1");
  ReductionCheck rc = is_minimal_reduction(R, J);
  if (!rc.is_hsop || !rc.is_reduction)
    throw PreconditionError("J must be a linear minimal reduction: " + rc.note);
  if (!verify_m3_reduction(R, J))
    throw PreconditionError("J does not satisfy J m^2 = m^3");
  std::vector<Polynomial> powers;
  powers.reserve(J.size());
  for (const Polynomial& f : J) powers.push_back(poly_pow(f, t));
  return check_hsop_super_stretched(R, powers).verdict;
}

std::string ci_class_name(CiClass c) {
  switch (c) {
    case CiClass::hypersurface: return "hypersurface";
    case CiClass::two_quadrics: return "two_quadrics";
    default: return "not_applicable";
  }
}

CiClass ci_classification(const GradedRing& R, Rng rng, const CheckOptions& opt) {
  require_cm(R);
  if (!R.is_complete_intersection()) return CiClass::not_applicable;
  if (!is_stretched(R, rng.split(0x30), opt).value) return CiClass::not_applicable;
  const long long mu = R.reduced_gen_count();
  if (mu <= 1) return CiClass::hypersurface;
  if (mu == 2) {
    bool all_quadrics = true;
    for (const Polynomial& g : R.minimal_gens())
      if (g.degree() > 1 && g.degree() != 2) all_quadrics = false;
    if (all_quadrics) return CiClass::two_quadrics;
  }
  throw InternalError(
      "stretched complete intersection outside the hypersurface/two-quadrics dichotomy");
}

RingReport build_report(const GradedRing& R, Rng rng, const CheckOptions& opt) {
  RingReport rep;
  rep.ring_description = R.describe();
  rep.dim = R.dim();
  rep.embdim = R.embdim();
  rep.mult = R.multiplicity();

  const CmCertificate& cert = R.cm();
  rep.cm = cert.value;

  if (!cert.value) {
    rep.cm_diagnostic = cert.diagnostic;
    rep.hvector = R.generic_linear_quotient_function();
    rep.hvector_seed_dependent = true;
    rep.notes.push_back(
        "not verified Cohen-Macaulay: the reported quotient Hilbert function may depend "
        "on the seed, and structural verdicts are withheld");
    if (R.is_hypersurface() || R.is_complete_intersection())
      throw InternalError("complete intersection judged non-Cohen-Macaulay");
    rep.hypersurface = false;
    rep.ci = false;
    return rep;
  }

  rep.hvector = R.h_vector().entries;
  rep.h_class = classify_h_vector(rep.hvector);
  rep.gorenstein = R.gorenstein();
  rep.hypersurface = R.is_hypersurface();
  rep.ci = R.is_complete_intersection();
  rep.min_mult = has_minimal_multiplicity(R);

  StretchedResult st = is_stretched(R, rng.split(1), opt);
  rep.stretched = st.value;
  if (st.value && !st.witness.empty())
    rep.notes.push_back("stretched witness reduction " + forms_str(st.witness) +
                        " [generic-sampled]");

  SuperStretchedResult ss = is_super_stretched(R, rng.split(2), opt);
  rep.super_stretched = ss.value;
  if (!ss.witness.empty())
    rep.notes.push_back(std::string("reduction identity J*m^2 = m^3 ") +
                        (ss.m3_equality ? "holds" : "fails") + " for J = " +
                        forms_str(ss.witness));
  if (ss.audit)
    rep.notes.push_back("audit: " + std::to_string(ss.audit->failing_samples) + "/" +
                        std::to_string(ss.audit->samples) +
                        " sampled hsops violate the threshold condition" +
                        (ss.audit->consistent ? "" : " (INCONSISTENT)"));

  if (R.dim() > 0) {
    ObstructionResult obs = countable_type_obstruction(R, rng.split(3), opt);
    rep.obstruction = obs.obstructed ? obs.reason : "none_found";
  } else {
    rep.obstruction = "none_found";
    rep.notes.push_back("the obstruction rules apply to positive dimension only");
  }

  // Implication chain sanity: hypersurface => CI => Gorenstein => CM.
  if ((*rep.hypersurface && !*rep.ci) || (*rep.ci && !*rep.gorenstein))
    throw InternalError("implication chain violated in the report");
  return rep;
}

}  // namespace gradecheck
