#include "session.hpp"

#include <algorithm>

#include "families.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace gradecheck {

namespace {

nlohmann::json poly_list_json(const std::vector<Polynomial>& ps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Polynomial& p : ps) arr.push_back(p.str());
  return arr;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ys = C * (x_i^t) for a random invertible constant matrix C: the same ideal
// as the bracket power, but a nontrivial containment matrix.
std::vector<Polynomial> mixed_power_sop(const GradedRing& R,
                                        const std::vector<Polynomial>& xs, unsigned t,
                                        Rng& rng) {
  const FieldDesc& field = R.poly_ring()->field();
  const size_t d = xs.size();
  std::vector<Polynomial> powers;
  powers.reserve(d);
  for (const Polynomial& x : xs) powers.push_back(poly_pow(x, t));

  for (int attempt = 0; attempt < 64; ++attempt) {
    DenseMatrix c(d, d, field);
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k) c.at(i, k) = FieldElement::random(field, rng);
    DenseMatrix probe = c;
    if (row_reduce(probe) != d) continue;
    std::vector<Polynomial> ys;
    ys.reserve(d);
    for (size_t i = 0; i < d; ++i) {
      Polynomial acc = R.poly_ring()->zero();
      for (size_t k = 0; k < d; ++k) acc = acc + powers[k] * c.at(i, k);
      ys.push_back(std::move(acc));
    }
    return ys;
  }
  throw InternalError("could not sample an invertible mixing matrix");
}

// Searches sampled hsops of bounded degree for one whose quotient has a
// component of dimension >= 2 at the critical degree. Super-stretched rings
// admit none; the error says so.
FamilySpec find_family_spec(const GradedRing& R, Rng& rng, const CheckOptions& opt) {
  if (R.dim() == 0) {
    try {
      return make_family_spec(R, {});
    } catch (const PreconditionError&) {
      throw PreconditionError(
          "no valid family spec: the component at the critical degree is too small "
          "(the ring looks super-stretched)");
    }
  }
  for (int bound = 1; bound <= opt.audit_degree_bound; ++bound) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Rng child = rng.split(static_cast<uint64_t>(bound) * 100 + attempt);
      try {
        std::vector<Polynomial> linear = sample_linear_sop(R, child);
        std::vector<Polynomial> hsop;
        hsop.reserve(linear.size());
        for (const Polynomial& ell : linear)
          hsop.push_back(poly_pow(ell, static_cast<unsigned>(bound)));
        return make_family_spec(R, hsop);
      } catch (const PreconditionError&) {
      }
      try {
        std::vector<Polynomial> hsop =
            sample_hsop(R, static_cast<uint32_t>(bound), child);
        return make_family_spec(R, hsop);
      } catch (const PreconditionError&) {
      }
    }
  }
  throw PreconditionError(
      "no valid family spec found at sampled hsops of degree <= " +
      std::to_string(opt.audit_degree_bound) + " (the ring looks super-stretched)");
}

}  // namespace

void Session::set_option(const std::string& key, long long value) {
  if (key == "audit")
    opt_.audit = value != 0;
  else if (key == "budget")
    opt_.budget = value > 0 ? value : 1;
  else if (key == "samples")
    opt_.samples = static_cast<int>(std::max<long long>(1, value));
  else if (key == "retries")
    opt_.retries = static_cast<int>(std::max<long long>(1, value));
  else if (key == "audit_samples")
    opt_.audit_samples = static_cast<int>(std::max<long long>(1, value));
  else if (key == "degree_bound")
    opt_.degree_bound = static_cast<int>(std::clamp<long long>(value, 1, 6));
  else if (key == "t")
    opt_.t_power = static_cast<int>(std::clamp<long long>(value, 1, 8));
  else if (key == "m")
    opt_.m_power = static_cast<int>(std::clamp<long long>(value, 1, 8));
  else if (key == "family_degree")
    opt_.family_degree = static_cast<int>(value);
  else
    throw PreconditionError("unknown option '" + key + "'");
}

void Session::parse(const std::string& text) {
  input_ = parse_input(text, static_cast<size_t>(opt_.budget));
}

const ParsedInput& Session::input() const {
  if (!input_.ring) throw PreconditionError("no input parsed yet");
  return input_;
}

std::string Session::warnings_text() const {
  std::string out;
  for (const std::string& w : input_.warnings) out += w + "\n";
  return out;
}

CheckOptions Session::check_options() const {
  CheckOptions c;
  c.samples = opt_.samples;
  c.retries = opt_.retries;
  c.audit = opt_.audit;
  c.audit_samples = opt_.audit_samples;
  c.audit_degree_bound = opt_.degree_bound;
  return c;
}

std::unique_ptr<GradedRing> Session::make_ring() const {
  const ParsedInput& in = input();
  return std::make_unique<GradedRing>(in.ring, Ideal(in.ring, in.generators), opt_.seed);
}

namespace {

nlohmann::json options_json(const Session::Options& o, const RingPtr& ring) {
  nlohmann::json j;
  j["audit"] = o.audit;
  j["audit_samples"] = o.audit_samples;
  j["budget"] = o.budget;
  j["degree_bound"] = o.degree_bound;
  j["family_degree"] = o.family_degree;
  j["field"] = ring->field().name();
  j["m"] = o.m_power;
  j["order"] = ring->order().name();
  j["retries"] = o.retries;
  j["samples"] = o.samples;
  j["t"] = o.t_power;
  return j;
}

}  // namespace

std::string Session::run_report(bool as_json, int* status) {
  auto R = make_ring();
  RingReport rep = build_report(*R, Rng(opt_.seed), check_options());
  if (status) *status = rep.cm ? 0 : 2;
  if (as_json) return dump(report_to_json(rep, opt_.seed, options_json(opt_, input().ring)));
  return report_to_text(rep, opt_.seed);
}

std::string Session::run_check(const std::string& command, const std::string& argument,
                               bool /*as_json*/) {
  const CheckOptions copts = check_options();
  nlohmann::json j;
  j["command"] = command;
  j["seed"] = opt_.seed;
  j["options"] = options_json(opt_, input().ring);

  if (command == "hilbert") {
    HilbertData hd = hilbert_series(Ideal(input().ring, input().generators));
    j["dim"] = hd.dim;
    j["numerator"] = hd.numerator.coeffs();
    j["numerator_string"] = hd.numerator.str();
    return dump(j);
  }

  if (command == "hvector") {
    auto R = make_ring();
    const HVector& hv = R->h_vector();
    j["hvector"] = hv.entries;
    j["reduction"] = poly_list_json(hv.reduction);
    return dump(j);
  }

  if (command == "stretched") {
    auto R = make_ring();
    StretchedResult st = is_stretched(*R, Rng(opt_.seed).split(0x100), copts);
    j["stretched"] = st.value;
    j["mode"] = st.dim0_direct ? "direct (dimension 0)" : "generic-sampled";
    j["witness"] = poly_list_json(st.witness);
    j["dims"] = st.witness_dims;
    j["failures"] = st.failures;
    return dump(j);
  }

  if (command == "ss") {
    auto R = make_ring();
    SuperStretchedResult ss = is_super_stretched(*R, Rng(opt_.seed).split(0x200), copts);
    j["super_stretched"] = ss.value;
    j["stretched"] = ss.stretched.value;
    j["mode"] = ss.dim0_direct ? "direct (dimension 0)" : "stretched + J*m^2 = m^3";
    j["witness"] = poly_list_json(ss.witness);
    j["m3_equality"] = ss.m3_equality;
    if (ss.audit) {
      j["audit"] = {{"samples", ss.audit->samples},
                    {"failing_samples", ss.audit->failing_samples},
                    {"consistent", ss.audit->consistent}};
    } else {
      j["audit"] = nullptr;
    }
    return dump(j);
  }

  if (command == "ss-sop") {
    if (argument.empty()) throw PreconditionError("ss-sop needs --sop \"f1, f2, ...\"");
    auto R = make_ring();
    std::vector<Polynomial> sop = parse_polynomial_list(input().ring, argument);
    HSopCheck check = check_hsop_super_stretched(*R, sop);
    j["verdict"] = check.verdict;
    j["threshold"] = check.threshold;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& [deg, dim] : check.dims) dims.push_back({deg, dim});
    j["dims"] = dims;
    j["failing_degree"] =
        check.failing_degree < 0 ? nlohmann::json(nullptr) : nlohmann::json(check.failing_degree);
    j["sop"] = poly_list_json(check.sop);
    return dump(j);
  }

  if (command == "reduction") {
    if (argument.empty()) throw PreconditionError("reduction needs --j \"l1, l2, ...\"");
    auto R = make_ring();
    std::vector<Polynomial> J = parse_polynomial_list(input().ring, argument);
    ReductionCheck rc = is_minimal_reduction(*R, J);
    if (!rc.is_hsop) throw PreconditionError(rc.note);
    j["is_minimal_reduction"] = rc.is_reduction;
    j["reduction_number"] =
        rc.reduction_number < 0 ? nlohmann::json(nullptr) : nlohmann::json(rc.reduction_number);
    j["j"] = poly_list_json(J);
    if (!rc.note.empty()) j["note"] = rc.note;
    return dump(j);
  }

  if (command == "identities") return run_identities(argument, j);
  if (command == "family") return run_family(argument, j);

  throw PreconditionError("unknown subcommand '" + command + "'");
}

std::string Session::run_identities(const std::string& which, nlohmann::json& j) {
  const RingPtr& S = input().ring;
  j["identity"] = which;

  if (which == "colon") {
    // Checked in the ambient polynomial ring, where the variables form a
    // regular sequence.
    GradedRing ambient(S, Ideal(S, {}), opt_.seed);
    std::vector<Polynomial> xs;
    for (size_t i = 0; i < S->nvars(); ++i) xs.push_back(S->variable(i));
    j["ring"] = "ambient";
    j["t"] = opt_.t_power;
    j["ok"] = verify_colon_power_identity(ambient, xs, static_cast<unsigned>(opt_.t_power));
    return dump(j);
  }

  if (which == "frobenius") {
    auto R = make_ring();
    std::vector<Polynomial> as;
    for (size_t i = 0; i < S->nvars(); ++i) as.push_back(S->variable(i));
    j["m"] = opt_.m_power;
    j["ok"] =
        verify_frobenius_product_identity(*R, as, static_cast<unsigned>(opt_.m_power));
    return dump(j);
  }

  if (which == "delta") {
    auto R = make_ring();
    if (R->dim() == 0)
      throw PreconditionError("the determinant identity needs positive dimension");
    Rng rng = Rng(opt_.seed).split(0x300);
    const unsigned t = static_cast<unsigned>(opt_.t_power);
    int ok_count = 0;
    for (int s = 0; s < opt_.samples; ++s) {
      Rng child = rng.split(s);
      std::vector<Polynomial> xs = sample_linear_sop(*R, child);
      std::vector<Polynomial> ys = mixed_power_sop(*R, xs, t, child);
      if (verify_delta_injectivity(*R, ys, xs).ok) ++ok_count;
    }
    j["t"] = opt_.t_power;
    j["instances"] = opt_.samples;
    j["ok"] = ok_count == opt_.samples;
    j["passing"] = ok_count;
    return dump(j);
  }

  throw PreconditionError("identities --which must be colon, frobenius, or delta");
}

std::string Session::run_family(const std::string& kind, nlohmann::json& j) {
  const CheckOptions copts = check_options();
  auto R = make_ring();
  const FieldDesc& field = input().ring->field();
  std::vector<FieldElement> samples;
  for (int i = 0; i < opt_.samples; ++i)
    samples.push_back(FieldElement::from_integer(field, i));
  j["kind"] = kind;

  if (kind == "principal") {
    int degree = opt_.family_degree;
    if (degree < 0) {
      for (int i = 1; i <= 8 && degree < 0; ++i)
        if (standard_monomials(R->ideal(), static_cast<uint32_t>(i)).size() >= 2) degree = i;
      if (degree < 0)
        throw PreconditionError("no degree <= 8 with a component of dimension >= 2");
    }
    DistinctnessReport rep =
        sample_distinct_principal_ideals(*R, static_cast<uint32_t>(degree), samples);
    j["degree"] = rep.degree;
    j["elements"] = rep.elements;
    j["pairs_checked"] = rep.pairs_checked;
    nlohmann::json coll = nlohmann::json::array();
    for (const auto& [a, b] : rep.collisions) coll.push_back({a, b});
    j["collisions"] = coll;
    j["all_distinct"] = rep.all_distinct();
    return dump(j);
  }

  if (kind == "onedim") {
    DistinctnessReport rep = one_dim_family(*R, Rng(opt_.seed).split(0x400), samples);
    j["vacuous"] = rep.vacuous;
    j["note"] = rep.note;
    j["elements"] = rep.elements;
    j["pairs_checked"] = rep.pairs_checked;
    nlohmann::json coll = nlohmann::json::array();
    for (const auto& [a, b] : rep.collisions) coll.push_back({a, b});
    j["collisions"] = coll;
    j["all_distinct"] = rep.all_distinct();
    return dump(j);
  }

  if (kind == "ideal") {
    Rng rng = Rng(opt_.seed).split(0x500);
    FamilySpec spec = find_family_spec(*R, rng, copts);
    Ideal base = R->in_ring(spec.hsop);
    Polynomial x = R->poly_ring()->monomial(spec.quotient_basis[0]);
    Polynomial y = R->poly_ring()->monomial(spec.quotient_basis[1]);

    std::vector<Ideal> ideals;
    bool koszul_ok = true;
    for (const FieldElement& a : samples) {
      Ideal fam = construct_family_ideal(*R, spec, x + y * a);
      koszul_ok = koszul_ok && koszul_top_annihilation_check(fam, spec.hsop);
      ideals.push_back(std::move(fam));
    }
    int pairs = 0, collisions = 0;
    bool image_consistent = true;
    for (size_t i = 0; i < ideals.size(); ++i)
      for (size_t k = i + 1; k < ideals.size(); ++k) {
        ++pairs;
        bool eq = ideal_equal(ideals[i], ideals[k]);
        if (eq) ++collisions;
        // Ideal equality must agree with equality of the principal images.
        Polynomial yi = x + y * samples[i];
        Polynomial yk = x + y * samples[k];
        bool images_eq = normal_form(yi, ideal_sum(base, Ideal(R->poly_ring(), {yk}))).is_zero() &&
                         normal_form(yk, ideal_sum(base, Ideal(R->poly_ring(), {yi}))).is_zero();
        if (eq != images_eq) image_consistent = false;
      }
    j["hsop"] = poly_list_json(spec.hsop);
    j["critical_degree"] = spec.critical_degree;
    j["basis_dim"] = spec.quotient_basis.size();
    j["classes"] = samples.size();
    j["koszul_annihilation_ok"] = koszul_ok;
    j["pairs_checked"] = pairs;
    j["collisions"] = collisions;
    j["all_distinct"] = collisions == 0;
    j["image_equivalence_consistent"] = image_consistent;
    return dump(j);
  }

  throw PreconditionError("family kind must be principal, onedim, or ideal");
}

}  // namespace gradecheck
