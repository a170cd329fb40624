#include "poly.hpp"

#include <algorithm>

namespace gradecheck {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring().get() != b.ring().get()) throw RingMismatchError();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const uint32_t d = terms_.front().mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::homogeneous_component(uint32_t i) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.mono.degree() == i) out.push_back(t);
  return Polynomial(ring_, std::move(out));  // subsequence stays sorted
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      prods.push_back(Term{a.mono.times(b.mono), a.coeff * b.coeff});
  return ring_->from_terms(std::move(prods));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_, {});
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = t.coeff * c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_, {});
  std::vector<Term> out(terms_);
  for (Term& t : out) {
    t.mono = t.mono.times(m);
    t.coeff = t.coeff * c;
  }
  return Polynomial(ring_, std::move(out));  // multiplication preserves the order
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variable_names();
  std::string out;
  for (const Term& t : terms_) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-';
    if (out.empty()) {
      if (neg) {
        out += "-";
        c = c.substr(1);
      }
    } else {
      out += neg ? " - " : " + ";
      if (neg) c = c.substr(1);
    }
    std::string mono;
    for (size_t i = 0; i < names.size(); ++i) {
      uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += mono;
    }
  }
  return out;
}

Polynomial poly_pow(const Polynomial& f, unsigned e) {
  Polynomial acc = f.ring()->one();
  for (unsigned i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

RingPtr PolyRing::create(std::vector<std::string> variables, FieldDesc field,
                         MonomialOrder order, size_t pair_budget) {
  if (variables.empty()) throw PreconditionError("a polynomial ring needs at least one variable");
  if (variables.size() > 16)
    throw PreconditionError("at most 16 variables are supported");
  for (size_t i = 0; i < variables.size(); ++i)
    for (size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw PreconditionError("duplicate variable name '" + variables[i] + "'");
  return RingPtr(new PolyRing(std::move(variables), field, order, pair_budget));
}

Polynomial PolyRing::zero() const { return Polynomial(shared_from_this(), {}); }

Polynomial PolyRing::one() const { return constant(1); }

Polynomial PolyRing::constant(const FieldElement& c) const {
  if (c.is_zero()) return zero();
  return Polynomial(shared_from_this(), {Term{Monomial(nvars()), c}});
}

Polynomial PolyRing::constant(long long v) const {
  return constant(FieldElement::from_integer(field_, v));
}

Polynomial PolyRing::variable(size_t i) const {
  std::vector<uint32_t> e(nvars(), 0);
  e[i] = 1;
  return monomial(Monomial(std::move(e)));
}

Polynomial PolyRing::monomial(const Monomial& m) const {
  return monomial(m, FieldElement::one(field_));
}

Polynomial PolyRing::monomial(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return zero();
  return Polynomial(shared_from_this(), {Term{m, c}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  const MonomialOrder& ord = order_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ord) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.coeff.is_zero(); }),
            out.end());
  return Polynomial(shared_from_this(), std::move(out));
}

Polynomial PolyRing::random_linear_form(Rng& rng) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Term> terms;
    for (size_t i = 0; i < nvars(); ++i) {
      FieldElement c = FieldElement::random(field_, rng);
      if (c.is_zero()) continue;
      std::vector<uint32_t> e(nvars(), 0);
      e[i] = 1;
      terms.push_back(Term{Monomial(std::move(e)), c});
    }
    if (!terms.empty()) return from_terms(std::move(terms));
  }
  throw InternalError("could not sample a nonzero linear form");
}

Polynomial PolyRing::random_homogeneous(uint32_t degree, Rng& rng) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Term> terms;
    for (const Monomial& m : monomials_of_degree(nvars(), degree)) {
      FieldElement c = FieldElement::random(field_, rng);
      if (!c.is_zero()) terms.push_back(Term{m, c});
    }
    if (!terms.empty()) return from_terms(std::move(terms));
  }
  throw InternalError("could not sample a nonzero form");
}

std::string PolyRing::describe() const {
  std::string out = field_.name() + "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += vars_[i];
  }
  return out + "]";
}

}  // namespace gradecheck
