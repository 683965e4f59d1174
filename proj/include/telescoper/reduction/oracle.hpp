#pragma once

#include <vector>

#include "telescoper/errors.hpp"
#include "telescoper/forms/forms.hpp"
#include "telescoper/reduction/echelon.hpp"
#include "telescoper/reduction/engine.hpp"

namespace tel {

// Brute-force W_q^r = D_f(T_{q-1}^n + ... + T_{q+r-2}^n) intersected with F_q,
// by dense elimination over the monomial basis. Diagnostics only: the
// number of n-form monomials is capped by max_columns.
template <class F>
Echelon<F> oracle_W(const F& K, const Poly<F>& f, int nvars, int r, int q, std::size_t max_columns = 6000) {
  if (r < 1) throw Error("oracle_W: r must be at least 1");
  const int n = nvars - 1;
  const int N = f.degree();
  FormContext ctx{n, N};
  std::vector<Poly<F>> partials;
  for (int i = 0; i < nvars; ++i) partials.push_back(poly::derivative(K, f, i));

  std::vector<std::pair<int, Monomial>> cols;
  for (int j = q - 1; j <= q + r - 2; ++j) {
    const int d = ctx.nform_degree(j);
    if (j < 0 || d < 0) continue;
    for (const auto& m : monomials_of_degree(nvars, d)) {
      for (int i = 0; i < nvars; ++i) cols.push_back({i, m});
    }
    if (cols.size() > max_columns) throw ResourceError("oracle_W: dimension above the dense threshold");
  }

  // Rows are reduced with the highest monomial as pivot, so the rows whose
  // pivot has pole order <= q span exactly the intersection with F_q.
  Echelon<F> all(K, false, n);
  for (const auto& [i, m] : cols) {
    NForm<F> beta = forms::zero_nform<F>(n);
    beta[i] = poly::monomial(K, m, K.one());
    all.insert(forms::twisted_D(K, partials, beta));
  }
  Echelon<F> out(K, false, n);
  const int top = ctx.top_degree(q);
  for (const auto& row : all.rows()) {
    if (static_cast<int>(row.v.lead().m.deg) <= top) out.insert(row.v);
  }
  return out;
}

// Rank of a family of top forms.
template <class F>
std::size_t span_rank(const F& K, const std::vector<Poly<F>>& v) {
  Echelon<F> E(K, false, 0);
  for (const auto& x : v) E.insert(x);
  return E.size();
}

template <class F>
bool same_span(const F& K, const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b) {
  const std::size_t ra = span_rank(K, a);
  if (ra != span_rank(K, b)) return false;
  std::vector<Poly<F>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(K, both) == ra;
}

template <class F>
std::vector<Poly<F>> rows_of(const Echelon<F>& E) {
  std::vector<Poly<F>> out;
  for (const auto& row : E.rows()) out.push_back(row.v);
  return out;
}

// Generators of G_q = ker red_q^GD: mu - red_q^GD(mu) over the monomials of T_q^{n+1}.
template <class F>
std::vector<Poly<F>> gd_kernel(ReductionEngine<F>& E, int q) {
  std::vector<Poly<F>> out;
  const int d = E.ctx().top_degree(q);
  if (d < 0) return out;
  const F& K = E.field();
  for (const auto& m : monomials_of_degree(E.n() + 1, d)) {
    Poly<F> mu = poly::monomial(K, m, K.one());
    Poly<F> g = poly::sub(K, mu, E.red_gd_step(mu, q));
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

// d of the trivial syzygies in T_q^n.
template <class F>
std::vector<Poly<F>> d_trivial_syzygies(ReductionEngine<F>& E, int q) {
  std::vector<Poly<F>> out;
  const int d = E.ctx().nform_degree(q) - (E.N() - 1);
  if (d < 0) return out;
  const F& K = E.field();
  const auto& P = E.partials();
  const int nv = E.n() + 1;
  for (const auto& m : monomials_of_degree(nv, d)) {
    for (int i = 0; i < nv; ++i) {
      for (int j = i + 1; j < nv; ++j) {
        NForm<F> s = forms::zero_nform<F>(E.n());
        s[j] = poly::mul_term(K, P[i], m, K.one());
        s[i] = poly::mul_term(K, P[j], m, K.neg(K.one()));
        Poly<F> ds = forms::exterior_d(K, s);
        if (!ds.is_zero()) out.push_back(std::move(ds));
      }
    }
  }
  return out;
}

}  // namespace tel
