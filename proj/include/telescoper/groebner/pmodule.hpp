#pragma once

#include <climits>
#include <memory>
#include <vector>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/groebner/buchberger.hpp"
#include "telescoper/groebner/module.hpp"

namespace tel {

// Groebner data attached to a homogeneous hypersurface f in x_0..x_n:
//  - P, the submodule of M = A omega + sum A xi_i generated by d_i f omega - xi_i,
//  - Syz', the module of trivial syzygies d_i f xi_j - d_j f xi_i.
// Module positions: 0 is omega, 1 + i is xi_i. Under the grading deg omega = 1,
// deg xi_i = N both modules are homogeneous, so both bases are computed lazily
// up to the weighted degree a caller needs.
template <class F>
class PModule {
 public:
  using Elem = typename F::Elem;

  PModule(F K, Poly<F> f, int nvars, OrderKind kind = OrderKind::POT)
      : K_(K), f_(std::move(f)), nvars_(nvars), ord_{kind},
        P_(K, ModuleOrder{kind}, nvars + 1, weights(nvars, f_)),
        triv_(K, ModuleOrder{kind}, nvars + 1, weights(nvars, f_)) {
    if (f_.is_zero() || !f_.is_homogeneous()) throw Error("PModule: f must be a nonzero homogeneous polynomial");
    N_ = f_.degree();
    if (N_ < 1) throw Error("PModule: f must have positive degree");
    for (int i = 0; i < nvars_; ++i) partials_.push_back(poly::derivative(K_, f_, i));
    for (int i = 0; i < nvars_; ++i) {
      std::vector<Poly<F>> parts(nvars_ + 1);
      parts[0] = partials_[i];
      parts[1 + i] = poly::constant(K_, K_.neg(K_.one()));
      P_.add_generator(mpoly::from_components(K_, ord_, parts));
    }
    for (int i = 0; i < nvars_; ++i) {
      for (int j = i + 1; j < nvars_; ++j) {
        std::vector<Poly<F>> parts(nvars_ + 1);
        parts[1 + j] = partials_[i];
        parts[1 + i] = poly::neg(K_, partials_[j]);
        triv_.add_generator(mpoly::from_components(K_, ord_, parts));
      }
    }
  }

  const F& field() const { return K_; }
  const Poly<F>& f() const { return f_; }
  const std::vector<Poly<F>>& partials() const { return partials_; }
  int nvars() const { return nvars_; }
  int n() const { return nvars_ - 1; }
  int N() const { return N_; }
  const ModuleOrder& order() const { return ord_; }

  void set_step_budget(std::size_t steps) {
    P_.set_step_budget(steps);
    triv_.set_step_budget(steps);
  }

  // Make both bases exact through weighted degree d.
  void ensure(long d) {
    if (d <= done_) return;
    P_.compute(d);
    triv_.compute(d);
    done_ = d;
  }
  void complete() { ensure(LONG_MAX); }

  const ModuleGB<F>& P() const { return P_; }
  const ModuleGB<F>& trivial() const { return triv_; }

  long wdeg(int pos, const Monomial& m) const { return P_.wdeg(pos, m); }

  // rem_G of a module element (bases extended as needed).
  ModulePoly<F> rem(const ModulePoly<F>& a) {
    if (a.is_zero()) return {};
    long d = 0;
    for (const auto& t : a.terms) d = std::max(d, wdeg(t.pos, t.m));
    ensure(d);
    return P_.reduce(a);
  }

  // rem_G(a omega) split as rho omega + sum beta_i xi_i.
  void rem_split(const Poly<F>& a, Poly<F>& rho, std::vector<Poly<F>>& beta) {
    std::vector<Poly<F>> parts(nvars_ + 1);
    parts[0] = a;
    auto comps = mpoly::components(K_, rem(mpoly::from_components(K_, ord_, parts)), nvars_ + 1);
    rho = std::move(comps[0]);
    beta.assign(comps.begin() + 1, comps.end());
  }

  // Reduction of an n-form modulo the trivial syzygy basis (positions 1..n+1).
  ModulePoly<F> reduce_trivial(const ModulePoly<F>& s) {
    if (s.is_zero()) return {};
    long d = 0;
    for (const auto& t : s.terms) d = std::max(d, wdeg(t.pos, t.m));
    ensure(d);
    return triv_.reduce(s);
  }

  // Elements of G with zero omega part: a Groebner basis of Syz.
  std::vector<const ModulePoly<F>*> syzygy_basis() const {
    std::vector<const ModulePoly<F>*> out;
    for (const auto* g : P_.elements()) {
      bool has_omega = false;
      for (const auto& t : g->terms) has_omega = has_omega || t.pos == 0;
      if (!has_omega) out.push_back(g);
    }
    return out;
  }

  // Elements of G leading in omega; their omega parts form a basis of Jac f.
  std::vector<const ModulePoly<F>*> jacobian_part() const {
    std::vector<const ModulePoly<F>*> out;
    for (const auto* g : P_.elements()) {
      if (g->lead().pos == 0) out.push_back(g);
    }
    return out;
  }

  // x^m omega is a leading monomial of P (i.e. m lies in lm(Jac f)).
  bool omega_reducible(const Monomial& m) const { return P_.find_divisor(0, m) >= 0; }
  // x^m xi_i is a leading monomial of Syz, resp. Syz'.
  bool syz_leading(int i, const Monomial& m) const { return P_.find_divisor(1 + i, m) >= 0; }
  bool trivial_leading(int i, const Monomial& m) const { return triv_.find_divisor(1 + i, m) >= 0; }

 private:
  static std::vector<int> weights(int nvars, const Poly<F>& f) {
    std::vector<int> w(nvars + 1, f.degree());
    w[0] = 1;
    return w;
  }

  F K_;
  Poly<F> f_;
  int nvars_;
  int N_ = 0;
  ModuleOrder ord_;
  std::vector<Poly<F>> partials_;
  ModuleGB<F> P_;
  ModuleGB<F> triv_;
  long done_ = -1;
};

// The polynomial-ring emulation of P: omega -> u^{n+1}, xi_i -> u^{n-i} v^{i+1}
// in K[u, v, x_0..x_n] (u is variable 0, v is variable 1) with grevlex, plus the
// monomials u^p v^q, p + q = n + 2. Kept as an independent route for cross-checks.
template <class F>
class EmulatedP {
 public:
  EmulatedP(F K, const Poly<F>& f, int nvars) : K_(K), nvars_(nvars), gb_(K, ModuleOrder{OrderKind::POT}, 1) {
    if (nvars + 2 > Monomial::kMaxVars) throw ResourceError("too many variables for the u,v emulation");
    const int n = nvars - 1;
    for (int i = 0; i < nvars; ++i) {
      Poly<F> d = shift(poly::derivative(K_, f, i));
      Poly<F> g = poly::sub(K_, poly::mul_term(K_, d, omega(), K_.one()), poly::monomial(K_, xi(i), K_.one()));
      gb_.add_generator(to_module(g));
    }
    for (int p = 0; p <= n + 2; ++p) {
      gb_.add_generator(to_module(poly::monomial(K_, Monomial::var(0, p) * Monomial::var(1, n + 2 - p), K_.one())));
    }
    gb_.compute();
  }

  // rem in the emulated ring of phi^{-1}(a), mapped back to M.
  ModulePoly<F> rem(const ModulePoly<F>& a, const ModuleOrder& ord) const {
    std::vector<Term<F>> terms;
    for (const auto& t : a.terms) {
      Monomial m = shift_monomial(t.m) * (t.pos == 0 ? omega() : xi(t.pos - 1));
      terms.push_back({m, t.c});
    }
    ModulePoly<F> r = gb_.reduce(to_module(poly::from_terms(K_, std::move(terms))));
    std::vector<MTerm<F>> out;
    const int n = nvars_ - 1;
    for (const auto& t : r.terms) {
      int eu = t.m.exp(0), ev = t.m.exp(1);
      if (eu + ev != n + 1) throw Error("EmulatedP: remainder left the omega/xi slice");
      int pos = ev == 0 ? 0 : ev;  // xi_i <-> v^{i+1}
      Monomial x = unshift_monomial(t.m);
      out.push_back({pos, x, t.c});
    }
    return mpoly::from_terms(K_, ord, std::move(out));
  }

  std::size_t basis_size() const { return gb_.elements().size(); }

 private:
  Monomial omega() const { return Monomial::var(0, nvars_); }
  Monomial xi(int i) const { return Monomial::var(0, nvars_ - 1 - i) * Monomial::var(1, i + 1); }

  Monomial shift_monomial(const Monomial& m) const {
    Monomial r;
    r.bits = m.bits << 16;
    r.deg = m.deg;
    return r;
  }
  Monomial unshift_monomial(const Monomial& m) const {
    Monomial r;
    r.bits = m.bits >> 16;
    r.deg = m.deg - static_cast<std::uint32_t>(m.exp(0) + m.exp(1));
    return r;
  }
  Poly<F> shift(const Poly<F>& p) const {
    Poly<F> r;
    for (const auto& t : p.terms) r.terms.push_back({shift_monomial(t.m), t.c});
    return r;
  }
  ModulePoly<F> to_module(const Poly<F>& p) const {
    ModulePoly<F> r;
    for (const auto& t : p.terms) r.terms.push_back({0, t.m, t.c});
    return r;
  }

  F K_;
  int nvars_;
  ModuleGB<F> gb_;
};

}  // namespace tel
