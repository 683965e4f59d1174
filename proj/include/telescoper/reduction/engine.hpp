#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/forms/forms.hpp"
#include "telescoper/groebner/pmodule.hpp"
#include "telescoper/reduction/echelon.hpp"

namespace tel {

struct EngineOptions {
  OrderKind order = OrderKind::POT;
  bool certificates = false;
  std::size_t gb_step_budget = 0;
  // Replace each non-trivial syzygy by its normal form modulo S'.
  bool reduce_syzygies = false;
};

inline long binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// Per-hypersurface reduction state: the Groebner data of P and Syz', the
// non-trivial syzygy bases A_q and the spaces X_q^r, all built on demand.
//
// Certificates follow "input - output = D_f cert" for every public reduction.
// Not thread-safe: the caches are filled lazily.
template <class F>
class ReductionEngine {
 public:
  using Elem = typename F::Elem;

  ReductionEngine(F K, Poly<F> f, int nvars, EngineOptions opt = {})
      : K_(K), opt_(opt), P_(K, std::move(f), nvars, opt.order) {
    ctx_.n = nvars - 1;
    ctx_.N = P_.N();
    if (opt.gb_step_budget) P_.set_step_budget(opt.gb_step_budget);
  }
  ReductionEngine(const ReductionEngine&) = delete;
  ReductionEngine& operator=(const ReductionEngine&) = delete;

  const F& field() const { return K_; }
  const FormContext& ctx() const { return ctx_; }
  int n() const { return ctx_.n; }
  int N() const { return ctx_.N; }
  const Poly<F>& f() const { return P_.f(); }
  const std::vector<Poly<F>>& partials() const { return P_.partials(); }
  PModule<F>& pmodule() { return P_; }
  bool certificates() const { return opt_.certificates; }

  // Called between units of work while building A_q and X_q^r; may throw to abort.
  void set_interrupt(std::function<void()> fn) { interrupt_ = std::move(fn); }

  // Elementary Griffiths-Dwork reduction of the degree-q component.
  TopForm<F> red_gd_step(const TopForm<F>& alpha, int q, NForm<F>* cert = nullptr) {
    NForm<F> B = forms::zero_nform<F>(n());
    TopForm<F> out = step_impl(alpha, q, cert ? &B : nullptr);
    if (cert) *cert = forms::neg_of(K_, B);
    return out;
  }

  TopForm<F> reduce_gd(const TopForm<F>& alpha, NForm<F>* cert = nullptr) {
    NForm<F> B = forms::zero_nform<F>(n());
    TopForm<F> cur = alpha;
    for (int q = forms::pole_order(ctx_, alpha); q >= 1; --q) cur = step_impl(cur, q, cert ? &B : nullptr);
    if (cert) *cert = forms::neg_of(K_, B);
    return cur;
  }

  // Non-trivial syzygies of T_q^n: one per leading monomial of Syz not in lm(Syz').
  const std::vector<NForm<F>>& nontrivial_syzygies(int q) {
    auto it = A_.find(q);
    if (it != A_.end()) return it->second;
    std::vector<NForm<F>> out;
    const int d = ctx_.nform_degree(q);
    if (q >= 0 && d >= 0) {
      P_.ensure(d + N());
      for (const auto& [i, m] : nform_monomials(d)) {
        poll();
        int g = P_.P().find_divisor(1 + i, m);
        if (g < 0 || P_.trivial_leading(i, m)) continue;
        const auto& gp = P_.P().poly(g);
        ModulePoly<F> s = mpoly::mul_term(K_, gp, m / gp.lead().m, K_.one());
        if (opt_.reduce_syzygies) s = P_.reduce_trivial(s);
        auto comps = mpoly::components(K_, s, n() + 2);
        out.emplace_back(comps.begin() + 1, comps.end());
      }
    }
    return A_.emplace(q, std::move(out)).first->second;
  }

  // Echelon basis of X_q^r (rows carry preimages when certificates are on).
  const Echelon<F>& basis_X(int r, int q) {
    if (r < 1) throw Error("basis_X: r must be at least 1");
    auto key = std::make_pair(r, q);
    auto it = X_.find(key);
    if (it != X_.end()) return *it->second;
    std::unique_ptr<Echelon<F>> E;
    if (r == 1) {
      E = std::make_unique<Echelon<F>>(K_, opt_.certificates, n());
      if (q >= 1) {
        for (const auto& beta : nontrivial_syzygies(q - 1)) {
          poll();
          E->insert(forms::exterior_d(K_, beta), opt_.certificates ? beta : NForm<F>{});
        }
      }
    } else {
      const Echelon<F>& X = basis_X(r - 1, q + 1);
      E = std::make_unique<Echelon<F>>(basis_X(1, q));
      const int top = ctx_.top_degree(q);
      for (const auto& row : X.rows()) {
        if (static_cast<int>(row.v.lead().m.deg) > top) continue;
        poll();
        NForm<F> gamma = row.gamma;
        TopForm<F> y = step_impl(row.v, q, opt_.certificates ? &gamma : nullptr);
        E->insert(std::move(y), std::move(gamma));
      }
    }
    return *X_.emplace(key, std::move(E)).first->second;
  }

  // The reduction [alpha]'_r.
  TopForm<F> reduce_r(const TopForm<F>& alpha, int r, NForm<F>* cert = nullptr) {
    if (cert && !opt_.certificates) throw Error("reduce_r: engine was built without certificate tracking");
    NForm<F> B = forms::zero_nform<F>(n());
    NForm<F>* bp = cert ? &B : nullptr;
    TopForm<F> out;
    TopForm<F> cur = alpha;
    while (!cur.is_zero()) {
      const int q = forms::pole_order(ctx_, cur);
      const int dq = ctx_.top_degree(q);
      TopForm<F> aq, rest;
      split_at(cur, dq, aq, rest);
      TopForm<F> y = step_impl(aq, q, bp);
      y = basis_X(r, q).rem(y, bp);
      TopForm<F> yq, ylow;
      split_at(y, dq, yq, ylow);
      out = poly::add(K_, out, yq);
      cur = poly::add(K_, rest, ylow);
    }
    if (cert) *cert = forms::neg_of(K_, B);
    return out;
  }

  // Number of monomials of degree qN - n - 1 outside lm(Jac f).
  int standard_monomials(int q) {
    const int d = ctx_.top_degree(q);
    if (d < 0) return 0;
    P_.ensure(d + 1);
    int c = 0;
    for (const auto& m : monomials_of_degree(n() + 1, d)) c += !P_.omega_reducible(m);
    return c;
  }

  int dim_S(int q) { return count_nform_leads(q, true); }
  int dim_S_trivial(int q) { return count_nform_leads(q, false); }
  int dim_A(int q) { return static_cast<int>(nontrivial_syzygies(q).size()); }

  // dim E_q^r = dim T_q^{n+1} minus the degree-q part of W_q^r.
  int dim_E(int r, int q) {
    if (q <= 0) return 0;
    if (r == 0) return static_cast<int>(binomial(q * N() - 1, n()));
    return standard_monomials(q) - basis_X(r, q).pivots_in_degree(ctx_.top_degree(q));
  }

 private:
  std::vector<std::pair<int, Monomial>> nform_monomials(int d) const {
    std::vector<std::pair<int, Monomial>> out;
    auto mons = monomials_of_degree(n() + 1, d);
    for (int i = 0; i <= n(); ++i) {
      for (const auto& m : mons) out.push_back({i, m});
    }
    const ModuleOrder& ord = P_.order();
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return ord.cmp(1 + a.first, a.second, 1 + b.first, b.second) > 0;
    });
    return out;
  }

  int count_nform_leads(int q, bool all) {
    const int d = ctx_.nform_degree(q);
    if (d < 0) return 0;
    P_.ensure(d + N());
    int c = 0;
    auto mons = monomials_of_degree(n() + 1, d);
    for (int i = 0; i <= n(); ++i) {
      for (const auto& m : mons) c += all ? P_.syz_leading(i, m) : P_.trivial_leading(i, m);
    }
    return c;
  }

  static void split_at(const TopForm<F>& a, int d, TopForm<F>& at, TopForm<F>& below) {
    at.terms.clear();
    below.terms.clear();
    for (const auto& t : a.terms) {
      if (static_cast<int>(t.m.deg) == d) {
        at.terms.push_back(t);
      } else if (static_cast<int>(t.m.deg) < d) {
        below.terms.push_back(t);
      } else {
        throw Error("reduction: component above the current pole order");
      }
    }
  }

  // Returns alpha + D_f beta and adds beta to *B.
  TopForm<F> step_impl(const TopForm<F>& alpha, int q, NForm<F>* B) {
    const int dq = ctx_.top_degree(q);
    TopForm<F> aq, rest;
    rest.terms.reserve(alpha.size());
    for (const auto& t : alpha.terms) {
      if (static_cast<int>(t.m.deg) == dq) {
        aq.terms.push_back(t);
      } else {
        rest.terms.push_back(t);
      }
    }
    if (aq.is_zero()) return alpha;
    Poly<F> rho;
    NForm<F> beta;
    P_.rem_split(aq, rho, beta);
    if (B) *B = forms::add(K_, *B, beta);
    return poly::add(K_, poly::add(K_, rest, rho), forms::exterior_d(K_, beta));
  }

  void poll() const {
    if (interrupt_) interrupt_();
  }

  F K_;
  EngineOptions opt_;
  PModule<F> P_;
  FormContext ctx_;
  std::map<int, std::vector<NForm<F>>> A_;
  std::map<std::pair<int, int>, std::unique_ptr<Echelon<F>>> X_;
  std::function<void()> interrupt_;
};

}  // namespace tel
