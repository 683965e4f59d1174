#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "telescoper/errors.hpp"
#include "telescoper/forms/forms.hpp"
#include "telescoper/groebner/buchberger.hpp"
#include "telescoper/reduction/engine.hpp"

namespace tel {

// Incremental linear dependence test: rows are kept monic at distinct pivots,
// each with its expression in terms of the inserted vectors.
template <class F>
class DependenceFinder {
 public:
  using Elem = typename F::Elem;

  explicit DependenceFinder(const F& K) : K_(K) {}

  // Inserts v_m. If v_m is a combination of the previous vectors, returns
  // (a_0, ..., a_m) with a_m = 1 and sum a_k v_k = 0.
  std::optional<std::vector<Elem>> insert(const Poly<F>& v) {
    const std::size_t m = count_++;
    Poly<F> w = v;
    std::vector<Elem> comb(m + 1, K_.zero());
    comb[m] = K_.one();
    for (const auto& row : rows_) {
      Elem c = poly::coeff(K_, w, row.pivot);
      if (K_.is_zero(c)) continue;
      w = poly::sub(K_, w, poly::scale(K_, row.v, c));
      for (std::size_t k = 0; k < row.comb.size(); ++k) {
        if (!K_.is_zero(row.comb[k])) K_.sub_mul_to(comb[k], c, row.comb[k]);
      }
    }
    if (w.is_zero()) return comb;
    Elem inv = K_.inv(w.lead().c);
    Row r;
    r.pivot = w.lead().m;
    r.v = poly::scale(K_, w, inv);
    for (auto& c : comb) c = K_.mul(c, inv);
    r.comb = std::move(comb);
    rows_.push_back(std::move(r));
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Monomial pivot;
    Poly<F> v;
    std::vector<Elem> comb;
  };
  F K_;
  std::vector<Row> rows_;
  std::size_t count_ = 0;
};

struct PFOptions {
  int r_start = 1;
  int max_r = 8;
  int max_order = 64;
  bool certificates = false;
  double budget_seconds = 0;  // 0 means unlimited
};

// Output of the drivers. relation = (a_0, ..., a_m) with a_m = 1 and
// sum a_k rho_k = 0; rho_0 is the reduction of alpha and rho_{k+1} the
// reduction of delta(rho_k). When certified, betas satisfy
//   rho_0 = alpha + D_f beta_0,  rho_k = delta(rho_{k-1}) + D_f beta_k.
template <class F>
struct PFResult {
  std::vector<typename F::Elem> relation;
  int r_used = 0;
  std::vector<TopForm<F>> rhos;
  std::vector<NForm<F>> betas;
  bool certified = false;
};

// True iff the Jacobian ideal of f is zero-dimensional, i.e. V(f) is smooth in P^n.
template <class F>
bool is_smooth(const F& K, const Poly<F>& f, int nvars) {
  ModuleGB<F> J(K, ModuleOrder{OrderKind::POT}, 1);
  for (int i = 0; i < nvars; ++i) {
    Poly<F> d = poly::derivative(K, f, i);
    ModulePoly<F> g;
    for (const auto& t : d.terms) g.terms.push_back({0, t.m, t.c});
    J.add_generator(g);
  }
  J.compute();
  std::vector<bool> pure(nvars, false);
  for (const auto* g : J.elements()) {
    const Monomial& m = g->lead().m;
    if (m.deg == 0) return true;
    for (int i = 0; i < nvars; ++i) {
      if (m.exp(i) == static_cast<int>(m.deg)) pure[i] = true;
    }
  }
  for (bool b : pure) {
    if (!b) return false;
  }
  return true;
}

namespace detail {

class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  void check() const {
    if (seconds_ <= 0) return;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (el > seconds_) throw ResourceError("time budget exceeded");
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

template <class F>
class InterruptScope {
 public:
  InterruptScope(ReductionEngine<F>& E, const Deadline& dl) : E_(E) {
    E_.set_interrupt([&dl] { dl.check(); });
  }
  ~InterruptScope() { E_.set_interrupt(nullptr); }
  InterruptScope(const InterruptScope&) = delete;
  InterruptScope& operator=(const InterruptScope&) = delete;

 private:
  ReductionEngine<F>& E_;
};

// One pass of the rho loop with a fixed reduction; returns nullopt on escape.
template <class F, class Reduce>
std::optional<PFResult<F>> rho_loop(ReductionEngine<F>& E, const TopForm<F>& alpha, const PFOptions& opt,
                                    Reduce&& reduce, bool escape_check, const Deadline& dl) {
  const F& K = E.field();
  const Poly<F> f_delta = poly::coeff_derivative(K, E.f());
  PFResult<F> res;
  res.certified = opt.certificates;
  DependenceFinder<F> dep(K);
  NForm<F> cert;
  TopForm<F> rho = reduce(alpha, opt.certificates ? &cert : nullptr);
  for (int m = 0;; ++m) {
    dl.check();
    if (escape_check && forms::pole_order(E.ctx(), rho) > E.n()) return std::nullopt;
    res.rhos.push_back(rho);
    if (opt.certificates) res.betas.push_back(forms::neg_of(K, cert));
    if (auto rel = dep.insert(rho)) {
      res.relation = std::move(*rel);
      return res;
    }
    if (m >= opt.max_order) throw ResourceError("no relation found up to the maximal order");
    TopForm<F> next = forms::delta_form(K, f_delta, rho);
    rho = reduce(next, opt.certificates ? &cert : nullptr);
  }
}

}  // namespace detail

// Algorithm 2: increase r until every rho_m stays in F_n.
template <class F>
PFResult<F> picard_fuchs(ReductionEngine<F>& E, const TopForm<F>& alpha, const PFOptions& opt = {}) {
  forms::check_graded(E.ctx(), alpha);
  if (opt.certificates && !E.certificates()) throw Error("picard_fuchs: engine was built without certificate tracking");
  detail::Deadline dl(opt.budget_seconds);
  detail::InterruptScope<F> scope(E, dl);
  for (int r = opt.r_start; r <= opt.max_r; ++r) {
    auto reduce = [&](const TopForm<F>& a, NForm<F>* c) { return E.reduce_r(a, r, c); };
    if (auto res = detail::rho_loop(E, alpha, opt, reduce, true, dl)) {
      res->r_used = r;
      return *res;
    }
  }
  throw ResourceError("reduction order exceeded max_r");
}

// Algorithm 1, valid when V(f) is smooth.
template <class F>
PFResult<F> picard_fuchs_smooth(ReductionEngine<F>& E, const TopForm<F>& alpha, const PFOptions& opt = {}) {
  forms::check_graded(E.ctx(), alpha);
  if (!is_smooth(E.field(), E.f(), E.n() + 1)) throw NotSmooth("the hypersurface is singular");
  detail::Deadline dl(opt.budget_seconds);
  auto reduce = [&](const TopForm<F>& a, NForm<F>* c) { return E.reduce_gd(a, c); };
  auto res = detail::rho_loop(E, alpha, opt, reduce, false, dl);
  res->r_used = 1;
  return *res;
}

struct CertificateCheck {
  bool ok = false;
  int failed_index = -1;  // k of the first broken identity; rhos.size() for the final relation
};

// Checks rho_0 = alpha + D_f beta_0, rho_k = delta(rho_{k-1}) + D_f beta_k and sum a_k rho_k = 0.
template <class F>
CertificateCheck verify_certificates(const F& K, const Poly<F>& f, int nvars, const TopForm<F>& alpha,
                                     const std::vector<TopForm<F>>& rhos, const std::vector<NForm<F>>& betas,
                                     const std::vector<typename F::Elem>& relation) {
  CertificateCheck out;
  if (rhos.size() != betas.size() || rhos.size() != relation.size()) {
    out.failed_index = 0;
    return out;
  }
  std::vector<Poly<F>> partials;
  for (int i = 0; i < nvars; ++i) partials.push_back(poly::derivative(K, f, i));
  const Poly<F> f_delta = poly::coeff_derivative(K, f);
  for (std::size_t k = 0; k < rhos.size(); ++k) {
    if (betas[k].size() != static_cast<std::size_t>(nvars)) {
      out.failed_index = static_cast<int>(k);
      return out;
    }
    TopForm<F> base = k == 0 ? alpha : forms::delta_form(K, f_delta, rhos[k - 1]);
    TopForm<F> rhs = poly::add(K, base, forms::twisted_D(K, partials, betas[k]));
    if (!poly::equal(K, rhs, rhos[k])) {
      out.failed_index = static_cast<int>(k);
      return out;
    }
  }
  TopForm<F> sum;
  for (std::size_t k = 0; k < rhos.size(); ++k) sum = poly::add(K, sum, poly::scale(K, rhos[k], relation[k]));
  if (!sum.is_zero()) {
    out.failed_index = static_cast<int>(rhos.size());
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace tel
