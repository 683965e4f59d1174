#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "telescoper/forms/forms.hpp"
#include "telescoper/reduction/engine.hpp"

using namespace tel;
using th::XYZ;

namespace {

template <class F>
std::vector<Poly<F>> partials_of(const F& K, const Poly<F>& f, int nvars) {
  std::vector<Poly<F>> d;
  for (int i = 0; i < nvars; ++i) d.push_back(poly::derivative(K, f, i));
  return d;
}

// (n-1)-forms as antisymmetric matrices G; D_f G has components
// sum_i (d_i G_ij - d_i f G_ij).
template <class F>
NForm<F> twisted_D_lower(const F& K, const std::vector<Poly<F>>& d, const std::vector<std::vector<Poly<F>>>& G) {
  const std::size_t nv = G.size();
  NForm<F> out(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t i = 0; i < nv; ++i) {
      out[j] = poly::add(K, out[j], poly::derivative(K, G[i][j], static_cast<int>(i)));
      out[j] = poly::sub(K, out[j], poly::mul(K, d[i], G[i][j]));
    }
  }
  return out;
}

QtElem eval_at(const QtField& Q, const Poly<QtField>& p, const std::vector<long>& x) {
  std::vector<QtElem> pt;
  for (long v : x) pt.push_back(Q.from_int(v));
  return poly::evaluate(Q, p, pt);
}

// Value at x of sum_q (q-1)! a_q / f^q.
QtElem h_top(const QtField& Q, const FormContext& ctx, const Poly<QtField>& f, const TopForm<QtField>& a,
             const std::vector<long>& x) {
  QtElem fx = eval_at(Q, f, x), s = Q.zero();
  for (int q = 1; q <= forms::pole_order(ctx, a); ++q) {
    QtElem c = eval_at(Q, forms::component(ctx, a, q), x);
    mpz_class fact = 1;
    for (int k = 2; k < q; ++k) fact *= k;
    QtElem den = Q.one();
    for (int k = 0; k < q; ++k) den = Q.mul(den, fx);
    s = Q.add(s, Q.mul(Q.from_mpz(fact), Q.div(c, den)));
  }
  return s;
}

}  // namespace

TEST_CASE("wedge, d and D_f on the cusp example") {
  RationalField K;
  auto f = th::qq("x*y^2 - z^3", XYZ);
  auto d = partials_of(K, f, 3);
  NForm<RationalField> beta{th::qq("2/7*x^4", XYZ), th::qq("-1/7*x^3*y", XYZ), {}};
  CHECK(forms::wedge_df(K, d, beta).is_zero());
  CHECK(poly::equal(K, forms::exterior_d(K, beta), th::qq("x^3", XYZ)));
  CHECK(poly::equal(K, forms::twisted_D(K, d, beta), th::qq("x^3", XYZ)));
  CHECK(forms::wedge_df(K, d, forms::zero_nform<RationalField>(2)).is_zero());
  NForm<RationalField> consts{th::qq("3", XYZ), th::qq("-1", XYZ), th::qq("5", XYZ)};
  CHECK(forms::exterior_d(K, consts).is_zero());
}

TEST_CASE("D_f squares to zero") {
  PrimeField K(1000003);
  std::mt19937_64 gen(4);
  for (const char* s : {"x0^3 + x1^3 + x2^3", "x0*x1^2 - x2^3", "x0^2*x1*x2 + x1^4 - x2^4 + x0^3*x2"}) {
    auto f = th::fp(K, s, th::X012);
    auto d = partials_of(K, f, 3);
    for (int it = 0; it < 10; ++it) {
      std::vector<std::vector<Poly<PrimeField>>> G(3, std::vector<Poly<PrimeField>>(3));
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          G[i][j] = th::random_homogeneous(K, 3, 4, 4, gen);
          G[j][i] = poly::neg(K, G[i][j]);
        }
      }
      CHECK(forms::twisted_D(K, d, twisted_D_lower(K, d, G)).is_zero());
      // Koszul: df ^ (df ^ G) = 0.
      NForm<PrimeField> w(3);
      for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) w[j] = poly::add(K, w[j], poly::mul(K, d[i], G[i][j]));
      }
      CHECK(forms::wedge_df(K, d, w).is_zero());
    }
  }
}

TEST_CASE("D_f of a syzygy is its divergence") {
  RationalField K;
  ReductionEngine<RationalField> E(K, th::qq("x*y^2 - z^3", XYZ), 3);
  for (int q = 1; q <= 3; ++q) {
    for (const auto& s : E.nontrivial_syzygies(q)) {
      CHECK(forms::wedge_df(K, E.partials(), s).is_zero());
      CHECK(poly::equal(K, forms::twisted_D(K, E.partials(), s), forms::exterior_d(K, s)));
    }
  }
}

TEST_CASE("d of a trivial syzygy lies in the Jacobian ideal") {
  RationalField K;
  auto f = th::qq("x*y^2 - z^3 + x^2*z", XYZ);
  ReductionEngine<RationalField> E(K, f, 3);
  auto& P = E.pmodule();
  std::mt19937_64 gen(1);
  for (int it = 0; it < 10; ++it) {
    auto m = th::random_homogeneous(K, 3, 2, 3, gen);
    NForm<RationalField> s(3);
    s[1] = poly::mul(K, E.partials()[0], m);
    s[0] = poly::neg(K, poly::mul(K, E.partials()[1], m));
    auto ds = forms::exterior_d(K, s);
    Poly<RationalField> rho;
    std::vector<Poly<RationalField>> beta;
    P.rem_split(ds, rho, beta);
    CHECK(rho.is_zero());
  }
}

TEST_CASE("delta on a one-parameter conic") {
  QtField Q;
  const std::vector<std::string> v{"x0", "x1"};
  auto f = th::qt("x1^2 - t*x0^2", v);
  auto fd = poly::coeff_derivative(Q, f);
  CHECK(poly::equal(Q, fd, th::qt("-x0^2", v)));
  auto a = th::qt("1", v);
  auto da = forms::delta_form(Q, fd, a);
  CHECK(poly::equal(Q, da, th::qt("x0^2", v)));
  FormContext ctx{1, 2};
  CHECK(forms::pole_order(ctx, a) == 1);
  CHECK(forms::pole_order(ctx, da) == 2);
}

TEST_CASE("delta commutes with the map to rational functions") {
  QtField Q;
  auto f = th::qt("x0^3 + t*x1^3 + x2^3 - (t+1)*x0*x1*x2", th::X012);
  FormContext ctx{2, 3};
  auto fd = poly::coeff_derivative(Q, f);
  // A form with components in pole orders 1 and 2.
  auto a = poly::add(Q, th::qt("t^2", th::X012), th::qt("x0^3 - t*x1*x2^2 + 2*x0*x1*x2", th::X012));
  auto da = forms::delta_form(Q, fd, a);
  for (const auto& x : std::vector<std::vector<long>>{{1, 2, 3}, {2, -1, 5}, {-3, 4, 1}}) {
    CHECK(Q.equal(h_top(Q, ctx, f, da, x), Q.derive(h_top(Q, ctx, f, a, x))));
  }
}

TEST_CASE("D_f maps to sums of derivatives") {
  QtField Q;
  auto f = th::qt("x0^3 + t*x1^3 + x2^3 - x0*x1*x2", th::X012);
  FormContext ctx{2, 3};
  auto d = partials_of(Q, f, 3);
  // beta in T_1^n: coefficients of degree N - n = 1.
  NForm<QtField> beta{th::qt("x1", th::X012), th::qt("t*x2", th::X012), th::qt("x0 - x1", th::X012)};
  auto Db = forms::twisted_D(Q, d, beta);
  CHECK(forms::pole_order(ctx, Db) == 2);
  // sum_i d_i (b_i / f), evaluated at a point by the quotient rule.
  std::vector<long> x{2, 3, -1};
  QtElem fx = eval_at(Q, f, x), sum = Q.zero();
  for (int i = 0; i < 3; ++i) {
    QtElem b = eval_at(Q, beta[i], x), db = eval_at(Q, poly::derivative(Q, beta[i], i), x);
    QtElem fi = eval_at(Q, d[i], x);
    sum = Q.add(sum, Q.div(Q.sub(Q.mul(db, fx), Q.mul(b, fi)), Q.mul(fx, fx)));
  }
  CHECK(Q.equal(h_top(Q, ctx, f, Db, x), sum));
}

TEST_CASE("graded pieces") {
  FormContext ctx{3, 6};
  for (int q = 1; q <= 4; ++q) {
    CHECK(static_cast<long>(monomials_of_degree(4, ctx.top_degree(q)).size()) == binomial(q * 6 - 1, 3));
  }
  RationalField K;
  FormContext c3{2, 3};
  auto a = th::qq("x^3 + y^2*z + 4", XYZ);
  CHECK(forms::pole_order(c3, a) == 2);
  CHECK(poly::equal(K, forms::component(c3, a, 1), th::qq("4", XYZ)));
  auto g = Form<RationalField>::from_top(c3, a);
  CHECK(g.pole_order() == 2);
  CHECK(poly::equal(K, g.top(), a));
  CHECK_THROWS(forms::check_graded(c3, th::qq("x", XYZ)));
}
