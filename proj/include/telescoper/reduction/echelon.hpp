#pragma once

#include <algorithm>
#include <queue>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/algebra/ratfun.hpp"
#include "telescoper/algebra/upoly.hpp"
#include "telescoper/forms/forms.hpp"

namespace tel {

// Echelon basis of a space of top forms: rows are monic with pairwise
// distinct leading monomials (the pivots). A new row is reduced against the
// existing ones but older rows are not updated, so rem() runs a full
// top-down reduction; its result has no pivot monomial in its support and
// therefore depends only on the span. interreduce() yields the reduced form.
// Rows may carry an n-form preimage gamma with row = D_f gamma.
//
// Over Q(t) the reduction runs fraction-free: integer polynomial numerators
// over one common denominator, so that a step costs one polynomial gcd
// instead of one per touched coefficient.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;

  struct Row {
    Poly<F> v;
    NForm<F> gamma;
  };

  Echelon(const F& K, bool track, int n) : K_(K), track_(track), n_(n) {}

  std::size_t size() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool tracking() const { return track_; }

  // Number of pivots of total degree d.
  int pivots_in_degree(int d) const {
    int c = 0;
    for (const auto& r : rows_) c += static_cast<int>(r.v.lead().m.deg) == d;
    return c;
  }
  bool is_pivot(const Monomial& m) const { return pivot_.count(m.bits) > 0; }

  // Returns true if v enlarged the span.
  bool insert(Poly<F> v, NForm<F> gamma = {}) {
    if (track_ && gamma.empty()) gamma = forms::zero_nform<F>(n_);
    v = rem(v, track_ ? &gamma : nullptr);
    if (v.is_zero()) return false;
    if (!K_.is_one(v.lead().c)) {
      Elem inv = K_.inv(v.lead().c);
      v = poly::scale(K_, v, inv);
      if (track_) gamma = forms::scale(K_, gamma, inv);
    }
    pivot_[v.lead().m.bits] = rows_.size();
    if constexpr (kFractionFree) ff_.push_back(to_ff(v).first);
    rows_.push_back(Row{std::move(v), std::move(gamma)});
    return true;
  }

  // Back-substitution: afterwards no pivot occurs outside its own row.
  void interreduce() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return grevlex_cmp(rows_[a].v.lead().m, rows_[b].v.lead().m) < 0;
    });
    for (std::size_t k : order) {
      Row& r = rows_[k];
      Poly<F> tail;
      tail.terms.assign(r.v.terms.begin() + 1, r.v.terms.end());
      NForm<F> g = r.gamma;
      tail = rem(tail, track_ ? &g : nullptr);
      Poly<F> nv;
      nv.terms.reserve(tail.size() + 1);
      nv.terms.push_back(r.v.terms.front());
      for (auto& t : tail.terms) nv.terms.push_back(std::move(t));
      r.v = std::move(nv);
      if constexpr (kFractionFree) ff_[k] = to_ff(r.v).first;
      if (track_) r.gamma = std::move(g);
    }
  }

  // Remainder v - sum c_k row_k. If cert is given it is updated by
  // cert -= sum c_k gamma_k, so "v = x + D_f cert" stays true for the remainder.
  Poly<F> rem(const Poly<F>& v, NForm<F>* cert = nullptr) const {
    bool hit = false;
    for (const auto& t : v.terms) {
      if (pivot_.count(t.m.bits)) {
        hit = true;
        break;
      }
    }
    if (!hit) return v;
    if constexpr (kFractionFree) {
      return rem_ff(v, cert);
    } else {
      return rem_field(v, cert);
    }
  }

 private:
  static constexpr bool kFractionFree = std::is_same_v<F, QtField>;

  using FFTerms = std::vector<std::pair<Monomial, ZPoly>>;

  // Numerators over the lcm of the denominators; the leading term stays first.
  static std::pair<FFTerms, ZPoly> to_ff(const Poly<F>& v) {
    ZPoly D{mpz_class(1)};
    for (const auto& t : v.terms) {
      if (zpoly::is_one(t.c.den)) continue;
      ZPoly g = zpoly::gcd(D, t.c.den), q;
      zpoly::divexact(t.c.den, g, q);
      D = zpoly::mul(D, q);
    }
    FFTerms out;
    out.reserve(v.size());
    for (const auto& t : v.terms) {
      ZPoly q;
      zpoly::divexact(D, t.c.den, q);
      out.emplace_back(t.m, zpoly::mul(t.c.num, q));
    }
    return {std::move(out), std::move(D)};
  }

  static ZPoly quo(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!zpoly::divexact(a, b, q)) throw Error("Echelon: inexact division");
    return q;
  }

  Poly<F> rem_ff(const Poly<F>& v, NForm<F>* cert) const {
    auto less = [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(less)> heap(less);
    std::unordered_map<Monomial, ZPoly, MonomialHash> acc;
    auto [terms, D] = to_ff(v);
    const int base_deg = zpoly::degree(D);
    acc.reserve(terms.size() * 2);
    for (auto& [m, c] : terms) {
      heap.push(m);
      acc.emplace(m, std::move(c));
    }
    std::vector<Term<F>> out;
    int since_cleanup = 0;
    while (!heap.empty()) {
      Monomial m = heap.top();
      heap.pop();
      auto it = acc.find(m);
      if (it == acc.end()) continue;
      ZPoly V = std::move(it->second);
      acc.erase(it);
      if (V.empty()) continue;
      auto pv = pivot_.find(m.bits);
      if (pv == pivot_.end()) {
        out.push_back({m, K_.make(std::move(V), D)});
        continue;
      }
      const FFTerms& R = ff_[pv->second];
      const ZPoly& P = R.front().second;
      if (cert && track_) {
        *cert = forms::sub(K_, *cert, forms::scale(K_, rows_[pv->second].gamma, K_.make(V, D)));
      }
      // V/D - (V/D)(R/P) = (a acc - b R)/(a D) with a = P/g, b = V/g.
      ZPoly g = zpoly::gcd(P, V);
      ZPoly a = quo(P, g), b = quo(V, g);
      if (!zpoly::is_one(a)) {
        for (auto& [mm, c] : acc) {
          if (!c.empty()) c = zpoly::mul(c, a);
        }
        D = zpoly::mul(D, a);
      }
      for (std::size_t s = 1; s < R.size(); ++s) {
        ZPoly br = zpoly::mul(b, R[s].second);
        auto jt = acc.find(R[s].first);
        if (jt == acc.end()) {
          acc.emplace(R[s].first, zpoly::neg(br));
          heap.push(R[s].first);
        } else {
          jt->second = zpoly::sub(jt->second, br);
        }
      }
      if (++since_cleanup >= 8 || zpoly::degree(D) > 2 * base_deg + 16) {
        since_cleanup = 0;
        cleanup(acc, D);
      }
    }
    Poly<F> r;
    r.terms = std::move(out);
    return r;
  }

  // Divides the accumulator and D by their common factor.
  static void cleanup(std::unordered_map<Monomial, ZPoly, MonomialHash>& acc, ZPoly& D) {
    ZPoly G = D;
    for (const auto& [m, c] : acc) {
      if (c.empty()) continue;
      G = zpoly::gcd(G, c);
      if (zpoly::degree(G) == 0 && (G[0] == 1 || G[0] == -1)) return;
    }
    if (zpoly::degree(G) == 0 && (G[0] == 1 || G[0] == -1)) return;
    for (auto& [m, c] : acc) {
      if (!c.empty()) c = quo(c, G);
    }
    D = quo(D, G);
  }

  Poly<F> rem_field(const Poly<F>& v, NForm<F>* cert) const {
    auto less = [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(less)> heap(less);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(v.size() * 2);
    for (const auto& t : v.terms) {
      acc.emplace(t.m, t.c);
      heap.push(t.m);
    }
    std::vector<Term<F>> out;
    while (!heap.empty()) {
      Monomial m = heap.top();
      heap.pop();
      auto it = acc.find(m);
      if (it == acc.end()) continue;
      Elem c = std::move(it->second);
      acc.erase(it);
      if (K_.is_zero(c)) continue;
      auto pv = pivot_.find(m.bits);
      if (pv == pivot_.end()) {
        out.push_back({m, std::move(c)});
        continue;
      }
      const Row& row = rows_[pv->second];
      for (std::size_t s = 1; s < row.v.size(); ++s) {
        const auto& t = row.v.terms[s];
        auto jt = acc.find(t.m);
        if (jt == acc.end()) {
          acc.emplace(t.m, K_.neg(K_.mul(c, t.c)));
          heap.push(t.m);
        } else {
          K_.sub_mul_to(jt->second, c, t.c);
        }
      }
      if (cert && track_) *cert = forms::sub(K_, *cert, forms::scale(K_, row.gamma, c));
    }
    Poly<F> r;
    r.terms = std::move(out);
    return r;
  }

  F K_;
  bool track_ = false;
  int n_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
  std::vector<FFTerms> ff_;
};

}  // namespace tel
