#include "hilbert.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linalg.hpp"

namespace gradecheck {

namespace {

// Remove duplicates and monomials divisible by another list member.
void minimalize(std::vector<Monomial>& T) {
  std::vector<Monomial> out;
  for (const Monomial& m : T) {
    bool redundant = false;
    for (const Monomial& u : out)
      if (u.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      out.erase(std::remove_if(out.begin(), out.end(),
                               [&](const Monomial& u) { return m.divides(u); }),
                out.end());
      out.push_back(m);
    }
  }
  T = std::move(out);
}

std::string memo_key(const std::vector<Monomial>& T) {
  std::vector<std::string> parts;
  parts.reserve(T.size());
  for (const Monomial& m : T) {
    std::string s;
    for (uint32_t e : m.exponents()) s += std::to_string(e) + ",";
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& p : parts) key += p + ";";
  return key;
}

using Memo = std::map<std::string, IntPoly>;

IntPoly numerator_rec(std::vector<Monomial> T, size_t nvars, Memo& memo);

// Product over connected components of the shared-variable graph.
bool try_component_split(const std::vector<Monomial>& T, size_t nvars, Memo& memo,
                         IntPoly& out) {
  const size_t k = T.size();
  std::vector<size_t> comp(k);
  for (size_t i = 0; i < k; ++i) comp[i] = i;
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j)
        if (!T[i].coprime(T[j]) && comp[i] != comp[j]) {
          size_t a = std::min(comp[i], comp[j]), b = std::max(comp[i], comp[j]);
          for (size_t l = 0; l < k; ++l)
            if (comp[l] == b) comp[l] = a;
          merged = true;
        }
  }
  std::vector<size_t> roots;
  for (size_t i = 0; i < k; ++i)
    if (std::find(roots.begin(), roots.end(), comp[i]) == roots.end())
      roots.push_back(comp[i]);
  if (roots.size() < 2) return false;
  out = IntPoly::one();
  for (size_t r : roots) {
    std::vector<Monomial> part;
    for (size_t i = 0; i < k; ++i)
      if (comp[i] == r) part.push_back(T[i]);
    out = out * numerator_rec(std::move(part), nvars, memo);
  }
  return true;
}

IntPoly numerator_rec(std::vector<Monomial> T, size_t nvars, Memo& memo) {
  minimalize(T);
  if (T.empty()) return IntPoly::one();
  for (const Monomial& m : T)
    if (m.is_constant()) return IntPoly();  // unit ideal, zero ring

  if (T.size() == 1) return IntPoly::one() - IntPoly::power_term(T[0].degree(), 1);

  bool all_pure = true;
  for (const Monomial& m : T)
    if (__builtin_popcount(m.support_mask()) != 1) {
      all_pure = false;
      break;
    }
  if (all_pure) {
    // Pairwise distinct variables after minimalization.
    IntPoly out = IntPoly::one();
    for (const Monomial& m : T)
      out = out * (IntPoly::one() - IntPoly::power_term(m.degree(), 1));
    return out;
  }

  std::string key = memo_key(T);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  IntPoly split;
  if (try_component_split(T, nvars, memo, split)) {
    memo.emplace(std::move(key), split);
    return split;
  }

  // Pivot on the most frequent variable. Degree-1 splitting always makes
  // progress: 0 -> S/(T + x_v) drops every generator involving v,
  // t * S/(T : x_v) lowers their degree.
  std::vector<size_t> freq(nvars, 0);
  for (const Monomial& m : T)
    for (size_t v = 0; v < nvars; ++v)
      if (m.exponent(v) > 0) ++freq[v];
  size_t pivot = 0;
  for (size_t v = 1; v < nvars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  std::vector<uint32_t> pe(nvars, 0);
  pe[pivot] = 1;
  Monomial p(std::move(pe));

  std::vector<Monomial> plus = T;
  plus.push_back(p);
  std::vector<Monomial> quot;
  quot.reserve(T.size());
  for (const Monomial& m : T) {
    std::vector<uint32_t> e = m.exponents();
    if (e[pivot] > 0) --e[pivot];
    quot.push_back(Monomial(std::move(e)));
  }

  IntPoly result = numerator_rec(std::move(plus), nvars, memo) +
                   IntPoly::power_term(1, 1) * numerator_rec(std::move(quot), nvars, memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

IntPoly hilbert_numerator_from_monomials(std::vector<Monomial> lts, size_t nvars) {
  Memo memo;
  return numerator_rec(std::move(lts), nvars, memo);
}

HilbertData hilbert_series(const Ideal& I) {
  for (const Polynomial& g : I.generators())
    if (!g.is_homogeneous())
      throw PreconditionError("Hilbert series needs a homogeneous ideal");
  if (I.is_unit()) throw PreconditionError("Hilbert series of the unit ideal");

  const size_t n = I.ring()->nvars();
  IntPoly N = hilbert_numerator_from_monomials(leading_monomials(I), n);
  int reductions = 0;
  while (!N.is_zero() && N.eval_one() == 0) {
    N = N.divided_by_one_minus_t();
    ++reductions;
  }
  HilbertData out;
  out.numerator = std::move(N);
  out.dim = static_cast<int>(n) - reductions;
  if (out.dim != krull_dimension(I))
    throw InternalError("Hilbert dimension disagrees with the combinatorial dimension");
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& I, uint32_t i) {
  std::vector<Monomial> lts = leading_monomials(I);
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(I.ring()->nvars(), i)) {
    bool divisible = false;
    for (const Monomial& l : lts)
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

long long hilbert_function(const Ideal& I, uint32_t i) {
  return static_cast<long long>(standard_monomials(I, i).size());
}

SocleData socle(const Ideal& artinian) {
  if (krull_dimension(artinian) != 0)
    throw PreconditionError("socle needs an Artinian quotient");
  const RingPtr& ring = artinian.ring();
  const FieldDesc& field = ring->field();
  const size_t n = ring->nvars();

  SocleData out;
  std::vector<Monomial> below = standard_monomials(artinian, 0);
  for (uint32_t deg = 0; !below.empty(); ++deg) {
    std::vector<Monomial> above = standard_monomials(artinian, deg + 1);

    // Stacked multiplication maps (S/A)_deg -> (S/A)_{deg+1}, one per variable.
    DenseMatrix m(n * above.size(), below.size(), field);
    for (size_t col = 0; col < below.size(); ++col) {
      for (size_t v = 0; v < n; ++v) {
        Polynomial image = normal_form(ring->variable(v) * ring->monomial(below[col]), artinian);
        for (const Term& t : image.terms())
          for (size_t row = 0; row < above.size(); ++row)
            if (above[row] == t.mono) {
              m.at(v * above.size() + row, col) = t.coeff;
              break;
            }
      }
    }
    for (const auto& v : kernel_basis(std::move(m))) {
      std::vector<Term> terms;
      for (size_t k = 0; k < below.size(); ++k)
        if (!v[k].is_zero()) terms.push_back(Term{below[k], v[k]});
      out.basis.push_back(ring->from_terms(std::move(terms)));
      out.socle_degree = static_cast<int>(deg);
    }
    below = std::move(above);
  }
  out.type = static_cast<int>(out.basis.size());
  if (out.type == 0) throw PreconditionError("socle of the zero ring");
  return out;
}

}  // namespace gradecheck
