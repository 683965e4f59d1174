#pragma once

#include <map>
#include <string>
#include <vector>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/errors.hpp"

namespace tel {

// Differential forms on K^{n+1} with the homogeneous grading.
//
// Top forms a*omega are stored flat as the polynomial a: the component in
// T_q^{n+1} is the homogeneous part of degree qN - n - 1. n-forms
// sum_i b_i xi_i are stored as n+1 polynomials; the T_q^n component has
// coefficient degree qN - n. With xi_i = (-1)^i dx_0 ^ .. ^ dx_i^ ^ .. ^ dx_n:
//   d(sum b_i xi_i)     = (sum_i d_i b_i) omega
//   df ^ (sum b_i xi_i) = (sum_i b_i d_i f) omega
template <class F>
using TopForm = Poly<F>;
template <class F>
using NForm = std::vector<Poly<F>>;

struct FormContext {
  int n = 0;  // number of variables minus one
  int N = 0;  // degree of f

  int top_degree(int q) const { return q * N - n - 1; }
  int nform_degree(int q) const { return q * N - n; }
  // Pole order of a top-form monomial of degree d; throws if d is off-grid.
  int pole_of_top_degree(int d) const {
    if ((d + n + 1) % N != 0) throw Error("top form component of degree " + std::to_string(d) + " is off the qN grid");
    return (d + n + 1) / N;
  }
  int pole_of_nform_degree(int d) const {
    if ((d + n) % N != 0) throw Error("n-form component of degree " + std::to_string(d) + " is off the qN grid");
    return (d + n) / N;
  }
};

namespace forms {

template <class F>
NForm<F> zero_nform(int n) {
  return NForm<F>(n + 1);
}

template <class F>
bool is_zero(const NForm<F>& b) {
  for (const auto& p : b) {
    if (!p.is_zero()) return false;
  }
  return true;
}

template <class F>
NForm<F> add(const F& K, const NForm<F>& a, const NForm<F>& b) {
  NForm<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::add(K, a[i], b[i]);
  return r;
}

template <class F>
NForm<F> sub(const F& K, const NForm<F>& a, const NForm<F>& b) {
  NForm<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::sub(K, a[i], b[i]);
  return r;
}

template <class F>
NForm<F> neg_of(const F& K, const NForm<F>& a) {
  NForm<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::neg(K, a[i]);
  return r;
}

template <class F>
NForm<F> scale(const F& K, const NForm<F>& a, const typename F::Elem& c) {
  NForm<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = poly::scale(K, a[i], c);
  return r;
}

template <class F>
bool equal(const F& K, const NForm<F>& a, const NForm<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!poly::equal(K, a[i], b[i])) return false;
  }
  return true;
}

// df ^ beta
template <class F>
TopForm<F> wedge_df(const F& K, const std::vector<Poly<F>>& partials, const NForm<F>& beta) {
  TopForm<F> r;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!beta[i].is_zero()) r = poly::add(K, r, poly::mul(K, beta[i], partials[i]));
  }
  return r;
}

// d beta
template <class F>
TopForm<F> exterior_d(const F& K, const NForm<F>& beta) {
  TopForm<F> r;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!beta[i].is_zero()) r = poly::add(K, r, poly::derivative(K, beta[i], static_cast<int>(i)));
  }
  return r;
}

// D_f beta = d beta - df ^ beta
template <class F>
TopForm<F> twisted_D(const F& K, const std::vector<Poly<F>>& partials, const NForm<F>& beta) {
  return poly::sub(K, exterior_d(K, beta), wedge_df(K, partials, beta));
}

// delta(alpha) = alpha^delta - f^delta alpha
template <class F>
TopForm<F> delta_form(const F& K, const Poly<F>& f_delta, const TopForm<F>& alpha) {
  return poly::sub(K, poly::coeff_derivative(K, alpha), poly::mul(K, f_delta, alpha));
}

// Pole order of a flat top form (0 for the zero form).
template <class F>
int pole_order(const FormContext& ctx, const TopForm<F>& a) {
  if (a.is_zero()) return 0;
  return ctx.pole_of_top_degree(static_cast<int>(a.lead().m.deg));
}

// Component alpha_q.
template <class F>
TopForm<F> component(const FormContext& ctx, const TopForm<F>& a, int q) {
  return poly::homogeneous_part(a, ctx.top_degree(q));
}

// Throws unless every term sits on the qN grid.
template <class F>
void check_graded(const FormContext& ctx, const TopForm<F>& a) {
  for (const auto& t : a.terms) ctx.pole_of_top_degree(static_cast<int>(t.m.deg));
}

template <class F>
void check_graded(const FormContext& ctx, const NForm<F>& b) {
  for (const auto& p : b) {
    for (const auto& t : p.terms) ctx.pole_of_nform_degree(static_cast<int>(t.m.deg));
  }
}

template <class F>
int nform_pole_order(const FormContext& ctx, const NForm<F>& b) {
  int q = 0;
  for (const auto& p : b) {
    for (const auto& t : p.terms) q = std::max(q, ctx.pole_of_nform_degree(static_cast<int>(t.m.deg)));
  }
  return q;
}

}  // namespace forms

// Graded view of a form, one polynomial per pole order.
template <class F>
struct Form {
  FormContext ctx;
  std::map<int, Poly<F>> omega_comps;
  std::map<int, std::vector<Poly<F>>> xi_comps;

  int pole_order() const {
    int q = 0;
    if (!omega_comps.empty()) q = std::max(q, omega_comps.rbegin()->first);
    if (!xi_comps.empty()) q = std::max(q, xi_comps.rbegin()->first);
    return q;
  }

  static Form from_top(const FormContext& ctx, const TopForm<F>& a) {
    Form r;
    r.ctx = ctx;
    for (const auto& t : a.terms) {
      int q = ctx.pole_of_top_degree(static_cast<int>(t.m.deg));
      r.omega_comps[q].terms.push_back(t);
    }
    return r;
  }

  static Form from_nform(const FormContext& ctx, const NForm<F>& b) {
    Form r;
    r.ctx = ctx;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (const auto& t : b[i].terms) {
        int q = ctx.pole_of_nform_degree(static_cast<int>(t.m.deg));
        auto& v = r.xi_comps[q];
        if (v.empty()) v.resize(b.size());
        v[i].terms.push_back(t);
      }
    }
    return r;
  }

  TopForm<F> top() const {
    TopForm<F> r;
    for (auto it = omega_comps.rbegin(); it != omega_comps.rend(); ++it) {
      for (const auto& t : it->second.terms) r.terms.push_back(t);
    }
    return r;
  }

  NForm<F> nform() const {
    NForm<F> r(ctx.n + 1);
    for (auto it = xi_comps.rbegin(); it != xi_comps.rend(); ++it) {
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        for (const auto& t : it->second[i].terms) r[i].terms.push_back(t);
      }
    }
    return r;
  }
};

}  // namespace tel
