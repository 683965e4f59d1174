#include "telescoper/picardfuchs/integrand.hpp"

#include <algorithm>

#include "telescoper/errors.hpp"

namespace tel {

namespace {

Monomial shift_up(const Monomial& m) {
  Monomial r;
  r.bits = m.bits << 8;
  r.deg = m.deg;
  return r;
}

}  // namespace

QtPoly homogenize_poly(const QtPoly& p, int degree) {
  std::vector<Term<QtField>> terms;
  for (const auto& t : p.terms) {
    Monomial m = shift_up(t.m) * Monomial::var(0, degree - static_cast<int>(t.m.deg));
    terms.push_back({m, t.c});
  }
  return poly::from_terms(QtField{}, std::move(terms));
}

HomogeneousIntegrand homogenize(const RationalIntegrand& R, bool multiply_x0) {
  const QtField K;
  if (R.den.is_zero()) throw Error("homogenize: zero denominator");
  if (R.nvars + 1 > Monomial::kMaxVars) throw ResourceError("homogenize: too many variables");
  const int n = R.nvars;
  const int dP = R.num.is_zero() ? 0 : R.num.degree();
  const int dQ = R.den.degree();
  const int e = dQ - dP - n - 1;
  HomogeneousIntegrand H;
  H.nvars = n + 1;
  QtPoly Ph = homogenize_poly(R.num, dP);
  QtPoly Qh = homogenize_poly(R.den, dQ);
  if (!multiply_x0 && e >= 0) {
    H.q = 1;
    H.f = Qh;
    H.a = poly::mul_term(K, Ph, Monomial::var(0, e), K.one());
    return H;
  }
  // a / (x_0 Q)^q = P x_0^e / Q  <=>  a = P x_0^{e+q} Q^{q-1}
  H.q = std::max(1, -e);
  H.f = poly::mul_term(K, Qh, Monomial::var(0, 1), K.one());
  H.a = poly::mul(K, poly::mul_term(K, Ph, Monomial::var(0, e + H.q), K.one()), poly::pow(K, Qh, H.q - 1));
  return H;
}

RationalIntegrand laurent_to_rational(const LaurentPoly& g) {
  const QtField K;
  const int n = g.nvars;
  if (n < 1 || n > Monomial::kMaxVars - 1) throw ResourceError("laurent_to_rational: unsupported number of variables");
  std::vector<int> shift(n, 0);
  for (const auto& [e, c] : g.terms) {
    if (static_cast<int>(e.size()) != n) throw Error("laurent_to_rational: exponent arity mismatch");
    for (int i = 0; i < n; ++i) shift[i] = std::max(shift[i], -e[i]);
  }
  // x^shift g = G, a polynomial.
  std::vector<Term<QtField>> gt;
  for (const auto& [e, c] : g.terms) {
    std::vector<int> ee(n);
    for (int i = 0; i < n; ++i) ee[i] = e[i] + shift[i];
    gt.push_back({Monomial::from_exponents(ee), K.from_mpz(c)});
  }
  QtPoly G = poly::from_terms(K, std::move(gt));
  // x^shift / ((x_1...x_n)(x^shift - t G)), cancelling common monomials.
  std::vector<int> num_e(n), den_e(n);
  for (int i = 0; i < n; ++i) {
    int common = std::min(shift[i], 1);
    num_e[i] = shift[i] - common;
    den_e[i] = 1 - common;
  }
  RationalIntegrand R;
  R.nvars = n;
  R.num = poly::monomial(K, Monomial::from_exponents(num_e), K.one());
  QtPoly core = poly::sub(K, poly::monomial(K, Monomial::from_exponents(shift), K.one()), poly::scale(K, G, K.t()));
  R.den = poly::mul_term(K, core, Monomial::from_exponents(den_e), K.one());
  return R;
}

RationalIntegrand algebraic_to_rational(const QtPoly& P, int nvars, int y_index) {
  const QtField K;
  if (P.is_zero()) throw Error("algebraic_to_rational: P is zero");
  QtPoly dy = poly::derivative(K, P, y_index);
  if (dy.is_zero()) throw Error("algebraic_to_rational: P does not depend on y");
  RationalIntegrand R;
  R.nvars = nvars;
  R.num = poly::mul_term(K, dy, Monomial::var(y_index, 1), K.one());
  R.den = P;
  return R;
}

}  // namespace tel
