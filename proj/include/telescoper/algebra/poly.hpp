#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "telescoper/algebra/monomial.hpp"
#include "telescoper/errors.hpp"

namespace tel {

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

// Sparse polynomial: terms strictly decreasing in grevlex, no zero coefficients.
template <class F>
struct Poly {
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const Term<F>& lead() const { return terms.front(); }
  int degree() const {
    int d = -1;
    for (const auto& t : terms) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms) {
      if (t.m.deg != terms.front().m.deg) return false;
    }
    return true;
  }
};

namespace poly {

template <class F>
Poly<F> constant(const F& K, const typename F::Elem& c) {
  Poly<F> p;
  if (!K.is_zero(c)) p.terms.push_back({Monomial{}, c});
  return p;
}

template <class F>
Poly<F> monomial(const F& K, const Monomial& m, const typename F::Elem& c) {
  Poly<F> p;
  if (!K.is_zero(c)) p.terms.push_back({m, c});
  return p;
}

template <class F>
Poly<F> variable(const F& K, int i) {
  return monomial(K, Monomial::var(i), K.one());
}

// Sort and combine arbitrary terms.
template <class F>
Poly<F> from_terms(const F& K, std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term<F>& a, const Term<F>& b) { return grevlex_cmp(a.m, b.m) > 0; });
  Poly<F> p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().m == t.m) {
      K.add_to(p.terms.back().c, t.c);
    } else {
      if (!p.terms.empty() && K.is_zero(p.terms.back().c)) p.terms.pop_back();
      p.terms.push_back(std::move(t));
    }
  }
  if (!p.terms.empty() && K.is_zero(p.terms.back().c)) p.terms.pop_back();
  return p;
}

template <class F>
Poly<F> add(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_cmp(a.terms[i].m, b.terms[j].m);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto s = K.add(a.terms[i].c, b.terms[j].c);
      if (!K.is_zero(s)) r.terms.push_back({a.terms[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class F>
Poly<F> neg(const F& K, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& t : r.terms) t.c = K.neg(t.c);
  return r;
}

template <class F>
Poly<F> sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
  return add(K, a, neg(K, b));
}

template <class F>
Poly<F> scale(const F& K, const Poly<F>& a, const typename F::Elem& c) {
  Poly<F> r;
  if (K.is_zero(c)) return r;
  r.terms.reserve(a.size());
  for (const auto& t : a.terms) r.terms.push_back({t.m, K.mul(t.c, c)});
  return r;
}

template <class F>
Poly<F> mul_term(const F& K, const Poly<F>& a, const Monomial& m, const typename F::Elem& c) {
  Poly<F> r;
  if (K.is_zero(c)) return r;
  r.terms.reserve(a.size());
  for (const auto& t : a.terms) r.terms.push_back({t.m * m, K.mul(t.c, c)});
  return r;
}

template <class F>
Poly<F> mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return mul_term(K, b, a.lead().m, a.lead().c);
  if (b.size() == 1) return mul_term(K, a, b.lead().m, b.lead().c);
  std::unordered_map<Monomial, typename F::Elem, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) {
      Monomial m = s.m * t.m;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, K.mul(s.c, t.c));
      } else {
        K.add_to(it->second, K.mul(s.c, t.c));
      }
    }
  }
  std::vector<Term<F>> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc) {
    if (!K.is_zero(kv.second)) terms.push_back({kv.first, std::move(kv.second)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term<F>& x, const Term<F>& y) { return grevlex_cmp(x.m, y.m) > 0; });
  Poly<F> r;
  r.terms = std::move(terms);
  return r;
}

template <class F>
Poly<F> pow(const F& K, const Poly<F>& a, int e) {
  Poly<F> r = constant(K, K.one());
  for (int i = 0; i < e; ++i) r = mul(K, r, a);
  return r;
}

template <class F>
bool equal(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms[i].m != b.terms[i].m || !K.equal(a.terms[i].c, b.terms[i].c)) return false;
  }
  return true;
}

template <class F>
Poly<F> derivative(const F& K, const Poly<F>& a, int i) {
  std::vector<Term<F>> terms;
  for (const auto& t : a.terms) {
    int e = t.m.exp(i);
    if (e == 0) continue;
    terms.push_back({t.m / Monomial::var(i), K.mul(t.c, K.from_int(e))});
  }
  // Division by x_i preserves the order; only coefficients that vanish mod p need removal.
  Poly<F> r;
  for (auto& t : terms) {
    if (!K.is_zero(t.c)) r.terms.push_back(std::move(t));
  }
  return r;
}

// Coefficient-wise d/dt; requires a field with a derivation.
template <class F>
Poly<F> coeff_derivative(const F& K, const Poly<F>& a) {
  if constexpr (!F::has_derivation) {
    throw NoDerivation("coefficient field carries no derivation");
  } else {
    Poly<F> r;
    for (const auto& t : a.terms) {
      auto c = K.derive(t.c);
      if (!K.is_zero(c)) r.terms.push_back({t.m, std::move(c)});
    }
    return r;
  }
}

// Part of a of total degree d.
template <class F>
Poly<F> homogeneous_part(const Poly<F>& a, int d) {
  Poly<F> r;
  for (const auto& t : a.terms) {
    if (static_cast<int>(t.m.deg) == d) r.terms.push_back(t);
  }
  return r;
}

// Maps coefficients through fn into field G; fn may throw.
template <class G, class F, class Fn>
Poly<G> map_coeffs(const G& L, const Poly<F>& a, Fn&& fn) {
  Poly<G> r;
  r.terms.reserve(a.size());
  for (const auto& t : a.terms) {
    auto c = fn(t.c);
    if (!L.is_zero(c)) r.terms.push_back({t.m, std::move(c)});
  }
  return r;
}

template <class F>
typename F::Elem coeff(const F& K, const Poly<F>& a, const Monomial& m) {
  auto it = std::lower_bound(a.terms.begin(), a.terms.end(), m,
                             [](const Term<F>& t, const Monomial& x) { return grevlex_cmp(t.m, x) > 0; });
  if (it != a.terms.end() && it->m == m) return it->c;
  return K.zero();
}

// Substitute x_i := value (a field element) and return the polynomial in the remaining slots.
template <class F>
Poly<F> substitute(const F& K, const Poly<F>& a, int i, const typename F::Elem& value) {
  std::vector<Term<F>> terms;
  for (const auto& t : a.terms) {
    int e = t.m.exp(i);
    typename F::Elem c = t.c;
    for (int k = 0; k < e; ++k) c = K.mul(c, value);
    Monomial m = t.m;
    if (e) m = m / Monomial::var(i, e);
    terms.push_back({m, std::move(c)});
  }
  return from_terms(K, std::move(terms));
}

template <class F>
typename F::Elem evaluate(const F& K, const Poly<F>& a, const std::vector<typename F::Elem>& point) {
  typename F::Elem s = K.zero();
  for (const auto& t : a.terms) {
    typename F::Elem c = t.c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = t.m.exp(static_cast<int>(i));
      for (int k = 0; k < e; ++k) c = K.mul(c, point[i]);
    }
    K.add_to(s, c);
  }
  return s;
}

template <class F>
std::string to_string(const F& K, const Poly<F>& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& t : a.terms) {
    std::string c = K.to_string(t.c);
    bool compound = c.find_first_of("+-", 1) != std::string::npos || c.find('/') != std::string::npos;
    if (compound) c = "(" + c + ")";
    std::string m = monomial_to_string(t.m, names);
    std::string piece;
    if (m == "1") {
      piece = c;
    } else if (c == "1") {
      piece = m;
    } else if (c == "-1") {
      piece = "-" + m;
    } else {
      piece = c + "*" + m;
    }
    if (s.empty()) {
      s = piece;
    } else if (piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

}  // namespace poly

}  // namespace tel
