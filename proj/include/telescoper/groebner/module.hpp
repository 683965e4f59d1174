#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "telescoper/algebra/monomial.hpp"
#include "telescoper/algebra/poly.hpp"

namespace tel {

enum class OrderKind { POT, TOP };

// Module monomial order on free-module terms x^I e_pos. Position 0 is the
// largest basis vector (omega), then xi_0 > xi_1 > ...
// POT compares positions first; TOP compares the monomial (grevlex) first.
// Both satisfy |I| + 1 >= |J| + N  =>  x^I e_0 > x^J e_j  for N >= 2.
struct ModuleOrder {
  OrderKind kind = OrderKind::POT;

  int cmp(int pa, const Monomial& a, int pb, const Monomial& b) const {
    if (kind == OrderKind::POT) {
      if (pa != pb) return pa < pb ? 1 : -1;
      return grevlex_cmp(a, b);
    }
    int c = grevlex_cmp(a, b);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
};

template <class F>
struct MTerm {
  int pos;
  Monomial m;
  typename F::Elem c;
};

template <class F>
struct ModulePoly {
  std::vector<MTerm<F>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const MTerm<F>& lead() const { return terms.front(); }
};

namespace mpoly {

template <class F>
void sort_terms(const ModuleOrder& ord, std::vector<MTerm<F>>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const MTerm<F>& a, const MTerm<F>& b) { return ord.cmp(a.pos, a.m, b.pos, b.m) > 0; });
}

template <class F>
ModulePoly<F> from_terms(const F& K, const ModuleOrder& ord, std::vector<MTerm<F>> terms) {
  sort_terms(ord, terms);
  ModulePoly<F> r;
  for (auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().pos == t.pos && r.terms.back().m == t.m) {
      K.add_to(r.terms.back().c, t.c);
    } else {
      if (!r.terms.empty() && K.is_zero(r.terms.back().c)) r.terms.pop_back();
      r.terms.push_back(std::move(t));
    }
  }
  if (!r.terms.empty() && K.is_zero(r.terms.back().c)) r.terms.pop_back();
  return r;
}

// Builds sum_k parts[k] e_k.
template <class F>
ModulePoly<F> from_components(const F&, const ModuleOrder& ord, const std::vector<Poly<F>>& parts) {
  std::vector<MTerm<F>> terms;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& t : parts[k].terms) terms.push_back({static_cast<int>(k), t.m, t.c});
  }
  sort_terms(ord, terms);
  return ModulePoly<F>{std::move(terms)};
}

// Splits into rank component polynomials.
template <class F>
std::vector<Poly<F>> components(const F& K, const ModulePoly<F>& a, int rank) {
  std::vector<std::vector<Term<F>>> parts(rank);
  for (const auto& t : a.terms) parts[t.pos].push_back({t.m, t.c});
  std::vector<Poly<F>> out(rank);
  for (int k = 0; k < rank; ++k) out[k] = poly::from_terms(K, std::move(parts[k]));
  return out;
}

template <class F>
ModulePoly<F> add(const F& K, const ModuleOrder& ord, const ModulePoly<F>& a, const ModulePoly<F>& b) {
  ModulePoly<F> r;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a.terms[i].pos, a.terms[i].m, b.terms[j].pos, b.terms[j].m);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto s = K.add(a.terms[i].c, b.terms[j].c);
      if (!K.is_zero(s)) r.terms.push_back({a.terms[i].pos, a.terms[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class F>
ModulePoly<F> scale(const F& K, const ModulePoly<F>& a, const typename F::Elem& c) {
  ModulePoly<F> r;
  if (K.is_zero(c)) return r;
  for (const auto& t : a.terms) r.terms.push_back({t.pos, t.m, K.mul(t.c, c)});
  return r;
}

template <class F>
ModulePoly<F> mul_term(const F& K, const ModulePoly<F>& a, const Monomial& m, const typename F::Elem& c) {
  ModulePoly<F> r;
  if (K.is_zero(c)) return r;
  r.terms.reserve(a.size());
  for (const auto& t : a.terms) r.terms.push_back({t.pos, t.m * m, K.mul(t.c, c)});
  return r;
}

template <class F>
bool equal(const F& K, const ModulePoly<F>& a, const ModulePoly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms[i].pos != b.terms[i].pos || a.terms[i].m != b.terms[i].m || !K.equal(a.terms[i].c, b.terms[i].c)) {
      return false;
    }
  }
  return true;
}

}  // namespace mpoly

}  // namespace tel
