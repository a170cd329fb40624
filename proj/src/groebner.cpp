#include "groebner.hpp"

#include <algorithm>
#include <numeric>

#include "linalg.hpp"

namespace gradecheck {

namespace {

// One basis element together with its expression over the input generators
// (tracked only when a caller needs witnesses).
struct Entry {
  Polynomial p;
  std::vector<Polynomial> cof;
};

struct SPair {
  size_t i, j;
  Monomial lcm;
};

// Normal selection: smallest lcm degree, then smallest lcm in the order.
bool pair_before(const SPair& a, const SPair& b, const MonomialOrder& ord) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  int c = compare(a.lcm, b.lcm, ord);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, bool track, size_t ngens)
      : ring_(std::move(ring)), track_(track), ngens_(ngens) {}

  void add_generator(const Polynomial& g, size_t index) {
    if (g.is_zero()) return;
    Entry e;
    e.p = g;
    if (track_) {
      e.cof.assign(ngens_, ring_->zero());
      e.cof[index] = ring_->one();
    }
    Entry r = reduce_entry(std::move(e), basis_);
    if (!r.p.is_zero()) insert(std::move(r));
  }

  void run() {
    size_t used = 0;
    const size_t budget = ring_->pair_budget();
    while (!pairs_.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k)
        if (pair_before(pairs_[k], pairs_[best], ring_->order())) best = k;
      SPair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++used > budget) throw BudgetError(budget);

      Entry r = reduce_entry(s_poly(pr), basis_);
      if (!r.p.is_zero()) insert(std::move(r));
    }
    finalize();
  }

  std::vector<Entry> take() { return std::move(basis_); }

 private:
  Entry s_poly(const SPair& pr) const {
    const Entry& a = basis_[pr.i];
    const Entry& b = basis_[pr.j];
    FieldElement ca = a.p.leading_coefficient().inverse();
    FieldElement cb = b.p.leading_coefficient().inverse();
    Monomial ma = pr.lcm.quotient_by(a.p.leading_monomial());
    Monomial mb = pr.lcm.quotient_by(b.p.leading_monomial());
    Entry s;
    s.p = a.p.times_term(ca, ma) - b.p.times_term(cb, mb);
    if (track_) {
      s.cof.reserve(ngens_);
      for (size_t k = 0; k < ngens_; ++k)
        s.cof.push_back(a.cof[k].times_term(ca, ma) - b.cof[k].times_term(cb, mb));
    }
    return s;
  }

  // Full reduction against `basis`, cofactors kept in sync. Invariant:
  // e.p == sum e.cof[k] * gen_k throughout.
  Entry reduce_entry(Entry e, const std::vector<Entry>& basis) const {
    Polynomial h = std::move(e.p);
    Polynomial r = ring_->zero();
    while (!h.is_zero()) {
      bool hit = false;
      for (const Entry& g : basis) {
        if (!g.p.leading_monomial().divides(h.leading_monomial())) continue;
        FieldElement c = h.leading_coefficient() / g.p.leading_coefficient();
        Monomial m = h.leading_monomial().quotient_by(g.p.leading_monomial());
        h = h - g.p.times_term(c, m);
        if (track_)
          for (size_t k = 0; k < ngens_; ++k)
            e.cof[k] = e.cof[k] - g.cof[k].times_term(c, m);
        hit = true;
        break;
      }
      if (!hit) {
        Polynomial lt = ring_->monomial(h.leading_monomial(), h.leading_coefficient());
        r = r + lt;
        h = h - lt;
      }
    }
    e.p = std::move(r);
    return e;
  }

  // Gebauer-Moeller pair update for the new element with index t.
  void insert(Entry e) {
    const size_t t = basis_.size();
    const Monomial& lt = e.p.leading_monomial();

    // Drop old pairs strictly covered by the new leading monomial.
    pairs_.erase(
        std::remove_if(pairs_.begin(), pairs_.end(),
                       [&](const SPair& pr) {
                         if (!lt.divides(pr.lcm)) return false;
                         Monomial li =
                             Monomial::lcm(basis_[pr.i].p.leading_monomial(), lt);
                         Monomial lj =
                             Monomial::lcm(basis_[pr.j].p.leading_monomial(), lt);
                         return li != pr.lcm && lj != pr.lcm;
                       }),
        pairs_.end());

    std::vector<SPair> fresh;
    fresh.reserve(t);
    for (size_t i = 0; i < t; ++i)
      fresh.push_back(SPair{i, t, Monomial::lcm(basis_[i].p.leading_monomial(), lt)});

    // Drop candidates whose lcm is a proper multiple of another candidate's.
    std::vector<bool> keep(fresh.size(), true);
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
          keep[a] = false;
          break;
        }
      }
    }

    // Within each lcm class: a member with coprime leading terms kills the
    // class; otherwise one representative survives.
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      std::vector<size_t> cls;
      bool coprime_class = false;
      for (size_t b = a; b < fresh.size(); ++b) {
        if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
        cls.push_back(b);
        if (basis_[fresh[b].i].p.leading_monomial().coprime(lt)) coprime_class = true;
      }
      for (size_t idx = 0; idx < cls.size(); ++idx)
        if (coprime_class || idx > 0) keep[cls[idx]] = false;
    }

    for (size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs_.push_back(fresh[a]);

    basis_.push_back(std::move(e));
  }

  void sort_by_leading() {
    std::sort(basis_.begin(), basis_.end(), [&](const Entry& a, const Entry& b) {
      return compare(a.p.leading_monomial(), b.p.leading_monomial(), ring_->order()) < 0;
    });
  }

  void finalize() {
    sort_by_leading();
    std::vector<Entry> kept;
    for (Entry& e : basis_) {
      bool redundant = false;
      for (const Entry& k : kept)
        if (k.p.leading_monomial().divides(e.p.leading_monomial())) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(e));
    }
    basis_ = std::move(kept);

    // Tail-reduce until stable; leading monomials are pairwise non-dividing,
    // so each element survives with its leading term intact.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Entry> others;
        others.reserve(basis_.size() - 1);
        for (size_t j = 0; j < basis_.size(); ++j)
          if (j != i) others.push_back(basis_[j]);
        Entry r = reduce_entry(basis_[i], others);
        if (r.p != basis_[i].p) {
          if (r.p.is_zero()) throw InternalError("minimal basis element reduced to zero");
          basis_[i] = std::move(r);
          changed = true;
        }
      }
    }

    for (Entry& e : basis_) {
      FieldElement inv = e.p.leading_coefficient().inverse();
      e.p = e.p * inv;
      if (track_)
        for (Polynomial& c : e.cof) c = c * inv;
    }
    sort_by_leading();
  }

  RingPtr ring_;
  bool track_;
  size_t ngens_;
  std::vector<Entry> basis_;
  std::vector<SPair> pairs_;
};

std::vector<Entry> reduced_basis_entries(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         bool track) {
  Buchberger engine(ring, track, gens.size());
  for (size_t i = 0; i < gens.size(); ++i) engine.add_generator(gens[i], i);
  engine.run();
  return engine.take();
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring().get() != b.ring().get()) throw RingMismatchError();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (Polynomial& g : generators) {
    if (g.ring().get() != ring_.get()) throw RingMismatchError();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) {
    std::vector<Polynomial> gb;
    for (Entry& e : reduced_basis_entries(ring_, gens_, false))
      gb.push_back(std::move(e.p));
    cache_->gb = std::move(gb);
  }
  return *cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().degree() == 0;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

Polynomial reduce_by_list(const Polynomial& f, const std::vector<Polynomial>& gs,
                          std::vector<Polynomial>* quotients) {
  const RingPtr& ring = f.ring();
  if (quotients) quotients->assign(gs.size(), ring->zero());
  Polynomial h = f;
  Polynomial r = ring->zero();
  while (!h.is_zero()) {
    bool hit = false;
    for (size_t k = 0; k < gs.size(); ++k) {
      const Polynomial& g = gs[k];
      if (g.is_zero() || !g.leading_monomial().divides(h.leading_monomial())) continue;
      FieldElement c = h.leading_coefficient() / g.leading_coefficient();
      Monomial m = h.leading_monomial().quotient_by(g.leading_monomial());
      h = h - g.times_term(c, m);
      if (quotients) (*quotients)[k] = (*quotients)[k] + ring->monomial(m, c);
      hit = true;
      break;
    }
    if (!hit) {
      Polynomial lt = ring->monomial(h.leading_monomial(), h.leading_coefficient());
      r = r + lt;
      h = h - lt;
    }
  }
  return r;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (f.ring().get() != I.ring().get()) throw RingMismatchError();
  return reduce_by_list(f, I.groebner_basis());
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators())
    for (const Polynomial& g : b.generators()) {
      Polynomial p = f * g;
      bool dup = false;
      for (const Polynomial& q : gens)
        if (q == p) {
          dup = true;
          break;
        }
      if (!dup) gens.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned t) {
  Ideal acc(a.ring(), {a.ring()->one()});
  for (unsigned i = 0; i < t; ++i) acc = ideal_product(acc, a);
  return acc;
}

Ideal frobenius_power(const Ideal& a, unsigned t) {
  if (t < 1) throw PreconditionError("bracket power needs t >= 1");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  for (const Polynomial& g : a.generators()) gens.push_back(poly_pow(g, t));
  return Ideal(a.ring(), std::move(gens));
}

namespace {

RingPtr elimination_ring(const RingPtr& base) {
  std::vector<std::string> vars;
  vars.reserve(base->nvars() + 1);
  vars.push_back("@e");
  for (const std::string& v : base->variable_names()) vars.push_back(v);
  return PolyRing::create(std::move(vars), base->field(),
                          MonomialOrder{OrderKind::elim_first, 1}, base->pair_budget());
}

Polynomial lift_to(const RingPtr& ext, const Polynomial& f, uint32_t slot_exp) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms())
    terms.push_back(Term{t.mono.with_leading_slot(slot_exp), t.coeff});
  return ext->from_terms(std::move(terms));
}

Polynomial drop_to(const RingPtr& base, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) terms.push_back(Term{t.mono.without_leading_slot(), t.coeff});
  return base->from_terms(std::move(terms));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const RingPtr& ring = I.ring();
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;

  RingPtr ext = elimination_ring(ring);
  Polynomial w = ext->variable(0);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators()) gens.push_back(lift_to(ext, f, 1));
  for (const Polynomial& g : J.generators()) {
    Polynomial gg = lift_to(ext, g, 0);
    gens.push_back(gg - lift_to(ext, g, 1));  // (1 - w) g
  }
  Ideal H(ext, std::move(gens));
  std::vector<Polynomial> out;
  for (const Polynomial& b : H.groebner_basis()) {
    bool has_w = false;
    for (const Term& t : b.terms())
      if (t.mono.exponent(0) > 0) {
        has_w = true;
        break;
      }
    if (!has_w) out.push_back(drop_to(ring, b));
  }
  return Ideal(ring, std::move(out));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("exact division by zero");
  std::vector<Polynomial> q;
  Polynomial r = reduce_by_list(f, {g}, &q);
  if (!r.is_zero()) throw InternalError("division was expected to be exact");
  return q[0];
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  if (f.ring().get() != I.ring().get()) throw RingMismatchError();
  if (f.is_zero()) throw PreconditionError("colon by the zero element");
  Ideal K = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& k : K.generators()) gens.push_back(exact_divide(k, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) return Ideal(I.ring(), {I.ring()->one()});
  bool first = true;
  Ideal acc = I;
  for (const Polynomial& g : J.generators()) {
    Ideal c = colon(I, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

std::vector<Monomial> leading_monomials(const Ideal& I) {
  std::vector<Monomial> out;
  for (const Polynomial& g : I.groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

int krull_dimension(const Ideal& I) {
  const size_t n = I.ring()->nvars();
  std::vector<Monomial> lts = leading_monomials(I);
  for (const Monomial& m : lts)
    if (m.is_constant()) return -1;
  std::vector<uint32_t> supports;
  supports.reserve(lts.size());
  for (const Monomial& m : lts) supports.push_back(m.support_mask());

  int best = 0;
  const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (uint32_t subset = 0; subset <= full; ++subset) {
    bool ok = true;
    for (uint32_t s : supports)
      if ((s & ~subset) == 0) {  // support inside the subset
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(subset));
  }
  return best;
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  const RingPtr& ring = I.ring();
  for (const Polynomial& g : I.generators())
    if (!g.is_homogeneous())
      throw PreconditionError("minimal generators need a homogeneous ideal");
  if (I.is_zero()) return {};
  const auto& gb = I.groebner_basis();
  if (I.is_unit()) throw PreconditionError("minimal generators of the unit ideal");

  int max_deg = 0, min_deg = gb.front().degree();
  for (const Polynomial& g : gb) {
    max_deg = std::max(max_deg, g.degree());
    min_deg = std::min(min_deg, g.degree());
  }

  const FieldDesc& field = ring->field();
  std::vector<Polynomial> mingens;

  // Vector-space basis of the degree-d slice of I, used for the next degree.
  std::vector<Polynomial> prev_basis;

  for (int d = min_deg; d <= max_deg; ++d) {
    std::vector<Monomial> monos = monomials_of_degree(ring->nvars(), d);
    auto coords = [&](const Polynomial& f) {
      std::vector<FieldElement> row(monos.size(), FieldElement::zero(field));
      for (const Term& t : f.terms())
        for (size_t k = 0; k < monos.size(); ++k)
          if (monos[k] == t.mono) {
            row[k] = t.coeff;
            break;
          }
      return row;
    };

    // Span of (m * I)_d = S_1 * I_{d-1}.
    DenseMatrix span(0, monos.size(), field);
    for (const Polynomial& b : prev_basis)
      for (size_t v = 0; v < ring->nvars(); ++v)
        span.append_row(coords(b * ring->variable(v)));
    std::vector<size_t> pivots;
    row_reduce(span, &pivots);

    // Spanning set of I_d: monomial multiples of basis elements.
    std::vector<Polynomial> slice;
    DenseMatrix slice_rref(0, monos.size(), field);
    std::vector<size_t> slice_pivots;
    auto add_to_slice = [&](const Polynomial& f) {
      std::vector<FieldElement> row = coords(f);
      if (reduce_row_against(row, slice_rref, slice_pivots)) {
        // New direction in I_d; record both the matrix row and the element.
        size_t lead = 0;
        while (row[lead].is_zero()) ++lead;
        FieldElement inv = row[lead].inverse();
        for (FieldElement& v : row) v = v * inv;
        slice_rref.append_row(row);
        slice_pivots.push_back(lead);
        // Keep rref shape: eliminate the new pivot from earlier rows.
        size_t last = slice_rref.rows() - 1;
        for (size_t r = 0; r + 1 < slice_rref.rows(); ++r) {
          FieldElement f2 = slice_rref.at(r, lead);
          if (f2.is_zero()) continue;
          for (size_t c = 0; c < slice_rref.cols(); ++c)
            slice_rref.at(r, c) = slice_rref.at(r, c) - f2 * slice_rref.at(last, c);
        }
        slice.push_back(f);
      }
    };
    for (const Polynomial& g : gb) {
      if (g.degree() > d) continue;
      for (const Monomial& u : monomials_of_degree(ring->nvars(), d - g.degree()))
        add_to_slice(g.times_term(FieldElement::one(field), u));
    }

    // New minimal generators: slice elements independent modulo S_1 * I_{d-1}.
    for (const Polynomial& f : slice) {
      std::vector<FieldElement> row = coords(f);
      if (reduce_row_against(row, span, pivots)) {
        std::vector<Term> terms;
        for (size_t k = 0; k < monos.size(); ++k)
          if (!row[k].is_zero()) terms.push_back(Term{monos[k], row[k]});
        Polynomial nf = ring->from_terms(std::move(terms)).monic();
        mingens.push_back(nf);
        span.append_row(coords(nf));
        row_reduce(span, &pivots);
      }
    }
    prev_basis = std::move(slice);
  }
  return mingens;
}

Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
  const size_t n = m.size();
  if (n == 0) return ring->one();
  for (const auto& row : m)
    if (row.size() != n) throw InternalError("determinant of a non-square matrix");

  // Bareiss fraction-free elimination; every division is exact.
  int sign = 1;
  Polynomial prev = ring->one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return ring->zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

ContainmentWitness containment_witness(const std::vector<Polynomial>& sources,
                                       const std::vector<Polynomial>& targets,
                                       const Ideal* base, unsigned variant) {
  if (targets.empty()) throw PreconditionError("containment witness needs targets");
  const RingPtr& ring = targets.front().ring();
  for (const Polynomial& p : targets) {
    if (p.ring().get() != ring.get()) throw RingMismatchError();
    if (p.is_zero() || !p.is_homogeneous())
      throw PreconditionError("witness targets must be nonzero homogeneous");
  }
  for (const Polynomial& p : sources) {
    if (p.ring().get() != ring.get()) throw RingMismatchError();
    if (p.is_zero() || !p.is_homogeneous())
      throw PreconditionError("witness sources must be nonzero homogeneous");
  }

  std::vector<Polynomial> all_gens = targets;
  if (base)
    all_gens.insert(all_gens.end(), base->generators().begin(), base->generators().end());

  std::vector<Entry> entries = reduced_basis_entries(ring, all_gens, true);
  // Perturbing the reduction order yields a different (equally valid) witness.
  if (variant > 0 && entries.size() > 1)
    std::rotate(entries.begin(), entries.begin() + (variant % entries.size()),
                entries.end());

  std::vector<Polynomial> gb;
  gb.reserve(entries.size());
  for (const Entry& e : entries) gb.push_back(e.p);

  ContainmentWitness w;
  w.sources = sources;
  w.targets = targets;

  for (const Polynomial& y : sources) {
    std::vector<Polynomial> q;
    Polynomial r = reduce_by_list(y, gb, &q);
    if (!r.is_zero())
      throw PreconditionError("containment fails: '" + y.str() +
                              "' is not in the target ideal");
    std::vector<Polynomial> row(targets.size(), ring->zero());
    for (size_t l = 0; l < gb.size(); ++l) {
      if (q[l].is_zero()) continue;
      for (size_t j = 0; j < targets.size(); ++j)
        row[j] = row[j] + q[l] * entries[l].cof[j];
    }
    // Keep only the contractual degree: stray syzygy components sum to zero
    // across the row, so dropping them preserves the identity.
    for (size_t j = 0; j < targets.size(); ++j) {
      int expect = y.degree() - targets[j].degree();
      row[j] = expect < 0 ? ring->zero()
                          : row[j].homogeneous_component(static_cast<uint32_t>(expect));
    }
    w.matrix.push_back(std::move(row));
  }

  // Re-expansion must reproduce each source (modulo the base ideal).
  for (size_t i = 0; i < sources.size(); ++i) {
    Polynomial acc = ring->zero();
    for (size_t j = 0; j < targets.size(); ++j) acc = acc + w.matrix[i][j] * targets[j];
    Polynomial diff = sources[i] - acc;
    if (base ? !normal_form(diff, *base).is_zero() : !diff.is_zero())
      throw InternalError("containment witness re-expansion failed");
  }

  if (sources.size() == targets.size())
    w.det = poly_determinant(w.matrix, ring);
  return w;
}

bool is_regular_sequence(const Ideal& base, const std::vector<Polynomial>& seq,
                         std::string* why) {
  Ideal acc = base;
  for (size_t j = 0; j < seq.size(); ++j) {
    const Polynomial& f = seq[j];
    if (f.is_zero()) {
      if (why) *why = "element " + std::to_string(j + 1) + " is zero";
      return false;
    }
    if (acc.is_unit()) {
      if (why) *why = "quotient became the zero ring before element " + std::to_string(j + 1);
      return false;
    }
    if (!ideal_equal(colon(acc, f), acc)) {
      if (why)
        *why = "'" + f.str() + "' is a zerodivisor at step " + std::to_string(j + 1);
      return false;
    }
    acc = ideal_sum(acc, Ideal(base.ring(), {f}));
  }
  return true;
}

}  // namespace gradecheck
