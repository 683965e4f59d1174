#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "telescoper/forms/forms.hpp"
#include "telescoper/groebner/buchberger.hpp"
#include "telescoper/groebner/pmodule.hpp"
#include "telescoper/reduction/echelon.hpp"

using namespace tel;
using th::XYZ;

namespace {

template <class F>
ModulePoly<F> ideal_elem(const Poly<F>& p) {
  ModulePoly<F> g;
  for (const auto& t : p.terms) g.terms.push_back({0, t.m, t.c});
  return g;
}

template <class F>
Poly<F> as_poly(const ModulePoly<F>& g) {
  Poly<F> p;
  for (const auto& t : g.terms) p.terms.push_back({t.m, t.c});
  return p;
}

template <class F>
ModuleGB<F> ideal_gb(const F& K, const std::vector<Poly<F>>& gens) {
  ModuleGB<F> G(K, ModuleOrder{OrderKind::POT}, 1);
  for (const auto& g : gens) G.add_generator(ideal_elem(g));
  G.compute();
  return G;
}

// Sorted leading monomials with each element made monic, for comparison.
template <class F>
std::vector<Poly<F>> monic_elements(const F& K, const ModuleGB<F>& G) {
  std::vector<Poly<F>> out;
  for (const auto* g : G.elements()) {
    Poly<F> p = as_poly(*g);
    out.push_back(poly::scale(K, p, K.inv(p.lead().c)));
  }
  std::sort(out.begin(), out.end(), [](const Poly<F>& a, const Poly<F>& b) { return grevlex_cmp(a.lead().m, b.lead().m) > 0; });
  return out;
}

template <class F>
void check_reduced_gb(const F& K, const ModuleGB<F>& G) {
  auto els = G.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : els[j]->terms) {
        bool divisible = t.pos == els[i]->lead().pos && els[i]->lead().m.divides(t.m);
        CHECK_FALSE(divisible);
      }
    }
  }
  // Buchberger criterion, with S-polynomials formed here rather than by the engine.
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (els[i]->lead().pos != els[j]->lead().pos) continue;
      Monomial l = els[i]->lead().m.lcm(els[j]->lead().m);
      auto a = mpoly::mul_term(K, *els[i], l / els[i]->lead().m, K.inv(els[i]->lead().c));
      auto b = mpoly::mul_term(K, *els[j], l / els[j]->lead().m, K.neg(K.inv(els[j]->lead().c)));
      auto s = mpoly::add(K, G.order(), a, b);
      CHECK(G.reduce(s).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("Jacobian ideal of xy^2 - z^3") {
  RationalField K;
  auto G = ideal_gb(K, {th::qq("y^2", XYZ), th::qq("2*x*y", XYZ), th::qq("-3*z^2", XYZ)});
  auto els = monic_elements(K, G);
  REQUIRE(els.size() == 3);
  CHECK(poly::equal(K, els[0], th::qq("x*y", XYZ)));
  CHECK(poly::equal(K, els[1], th::qq("y^2", XYZ)));
  CHECK(poly::equal(K, els[2], th::qq("z^2", XYZ)));
}

TEST_CASE("unit ideal") {
  RationalField K;
  auto G = ideal_gb(K, {th::qq("1", XYZ), th::qq("x*y+z^2", XYZ)});
  auto els = monic_elements(K, G);
  REQUIRE(els.size() == 1);
  CHECK(els[0].lead().m.is_one());
}

TEST_CASE("random ideals satisfy the Buchberger criterion") {
  PrimeField K(32003);
  std::mt19937_64 gen(42);
  for (int it = 0; it < 12; ++it) {
    std::vector<Poly<PrimeField>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(th::random_homogeneous(K, 3, 2 + (it + k) % 2, 4, gen));
    auto G = ideal_gb(K, gens);
    check_reduced_gb(K, G);
    for (const auto& g : gens) CHECK(G.reduce(ideal_elem(g)).is_zero());
  }
}

TEST_CASE("P basis of x0^2 + x1^2 contains the Koszul syzygy") {
  RationalField K;
  PModule<RationalField> P(K, th::qq("x0^2 + x1^2", {"x0", "x1"}), 2);
  P.complete();
  check_reduced_gb(K, P.P());
  auto syz = P.syzygy_basis();
  REQUIRE(syz.size() == 1);
  auto comps = mpoly::components(K, *syz[0], 3);
  CHECK(comps[0].is_zero());
  // Proportional to x1 xi_0 - x0 xi_1.
  mpq_class c = poly::coeff(K, comps[1], Monomial::var(1));
  REQUIRE(c != 0);
  CHECK(poly::equal(K, comps[1], poly::monomial(K, Monomial::var(1), c)));
  CHECK(poly::equal(K, comps[2], poly::monomial(K, Monomial::var(0), mpq_class(-c))));
}

TEST_CASE("omega parts of rem_G are Jacobian normal forms") {
  RationalField K;
  auto f = th::qq("x*y^2 - z^3", XYZ);
  PModule<RationalField> P(K, f, 3);
  auto J = ideal_gb(K, {poly::derivative(K, f, 0), poly::derivative(K, f, 1), poly::derivative(K, f, 2)});
  Poly<RationalField> rho;
  std::vector<Poly<RationalField>> beta;
  P.rem_split(th::qq("x^3", XYZ), rho, beta);
  CHECK(poly::equal(K, rho, th::qq("x^3", XYZ)));
  for (int d = 2; d <= 5; ++d) {
    for (const auto& m : monomials_of_degree(3, d)) {
      auto a = poly::monomial(K, m, K.one());
      P.rem_split(a, rho, beta);
      CHECK(poly::equal(K, rho, as_poly(J.reduce(ideal_elem(a)))));
      // a omega = rho omega + df ^ beta modulo P
      CHECK(poly::equal(K, a, poly::add(K, rho, forms::wedge_df(K, P.partials(), beta))));
    }
  }
}

TEST_CASE("P basis elements are homogeneous in the weighted grading") {
  RationalField K;
  for (const char* s : {"x*y^2 - z^3", "x^3 + y^3 + z^3 - 3*x*y*z", "x^2*y*z + y^4 - z^4"}) {
    PModule<RationalField> P(K, th::qq(s, XYZ), 3);
    P.complete();
    for (const auto* g : P.P().elements()) {
      long d = P.wdeg(g->lead().pos, g->lead().m);
      for (const auto& t : g->terms) CHECK(P.wdeg(t.pos, t.m) == d);
    }
  }
}

TEST_CASE("trivial syzygy generators are syzygies") {
  RationalField K;
  PModule<RationalField> P(K, th::qq("x*y^2 - z^3", XYZ), 3);
  P.complete();
  for (const auto* g : P.trivial().elements()) {
    auto comps = mpoly::components(K, *g, 4);
    CHECK(comps[0].is_zero());
    std::vector<Poly<RationalField>> b(comps.begin() + 1, comps.end());
    CHECK(forms::wedge_df(K, P.partials(), b).is_zero());
  }
  for (const auto* g : P.syzygy_basis()) {
    auto comps = mpoly::components(K, *g, 4);
    std::vector<Poly<RationalField>> b(comps.begin() + 1, comps.end());
    CHECK(forms::wedge_df(K, P.partials(), b).is_zero());
  }
}

TEST_CASE("smooth hypersurface: Syz and Syz' have the same leading monomials") {
  RationalField K;
  for (const char* s : {"x^2 + y^2 + z^2", "x^3 + y^3 + z^3"}) {
    PModule<RationalField> P(K, th::qq(s, XYZ), 3);
    P.ensure(30);
    for (int d = 0; d <= 8; ++d) {
      for (const auto& m : monomials_of_degree(3, d)) {
        for (int i = 0; i < 3; ++i) CHECK(P.syz_leading(i, m) == P.trivial_leading(i, m));
      }
    }
  }
}

TEST_CASE("singular hypersurface has extra syzygy leading monomials") {
  RationalField K;
  PModule<RationalField> P(K, th::qq("x*y^2 - z^3", XYZ), 3);
  P.ensure(30);
  int extra = 0;
  for (int d = 0; d <= 6; ++d) {
    for (const auto& m : monomials_of_degree(3, d)) {
      for (int i = 0; i < 3; ++i) {
        if (P.trivial_leading(i, m)) CHECK(P.syz_leading(i, m));
        extra += P.syz_leading(i, m) && !P.trivial_leading(i, m);
      }
    }
  }
  CHECK(extra > 0);
}

TEST_CASE("rem_G is linear and idempotent") {
  PrimeField K(1000003);
  std::mt19937_64 gen(8);
  auto f = th::fp(K, "x0^3 + x0*x1*x2 - x2^3 + x1^2*x0", th::X012);
  PModule<PrimeField> P(K, f, 3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Poly<PrimeField>> pa(4), pb(4);
    pa[0] = th::random_homogeneous(K, 3, 4, 5, gen);
    pb[0] = th::random_homogeneous(K, 3, 4, 5, gen);
    for (int i = 1; i < 4; ++i) {
      pa[i] = th::random_homogeneous(K, 3, 2, 3, gen);
      pb[i] = th::random_homogeneous(K, 3, 2, 3, gen);
    }
    auto a = mpoly::from_components(K, P.order(), pa);
    auto b = mpoly::from_components(K, P.order(), pb);
    auto ra = P.rem(a), rb = P.rem(b);
    CHECK(mpoly::equal(K, P.rem(ra), ra));
    auto lhs = P.rem(mpoly::add(K, P.order(), mpoly::scale(K, a, 5u), b));
    auto rhs = mpoly::add(K, P.order(), mpoly::scale(K, ra, 5u), rb);
    CHECK(mpoly::equal(K, lhs, rhs));
    for (const auto& t : ra.terms) {
      CHECK(P.wdeg(t.pos, t.m) == 5);
      CHECK(P.P().find_divisor(t.pos, t.m) < 0);
    }
  }
}

// The emulation reduces under grevlex in K[u, v, x], a different module order,
// so the two remainders agree modulo P rather than term by term.
TEST_CASE("direct module path agrees with the u,v emulation modulo P") {
  PrimeField K(1000003);
  std::mt19937_64 gen(19);
  for (const char* s : {"x0^2*x1 - x2^3", "x0^3 + x1^3 + x2^3 + x0*x1*x2"}) {
    auto f = th::fp(K, s, th::X012);
    PModule<PrimeField> P(K, f, 3);
    EmulatedP<PrimeField> E(K, f, 3);
    for (int it = 0; it < 10; ++it) {
      std::vector<Poly<PrimeField>> parts(4);
      parts[0] = th::random_homogeneous(K, 3, 5, 6, gen);
      for (int i = 1; i < 4; ++i) parts[i] = th::random_homogeneous(K, 3, 3, 3, gen);
      auto a = mpoly::from_components(K, P.order(), parts);
      auto rp = P.rem(a);
      auto re = E.rem(a, P.order());
      CHECK(mpoly::equal(K, P.rem(re), rp));
      CHECK(mpoly::equal(K, E.rem(rp, P.order()), re));
      CHECK(E.rem(mpoly::add(K, P.order(), a, mpoly::scale(K, rp, K.neg(1u))), P.order()).is_zero());
    }
  }
}

TEST_CASE("omega part of rem_G vanishes exactly on df ^ Omega^n") {
  PrimeField K(1000003);
  std::mt19937_64 gen(23);
  auto f = th::fp(K, "x0*x1^2 - x2^3 + x0^2*x2", th::X012);
  PModule<PrimeField> P(K, f, 3);
  const auto& d = P.partials();
  for (int deg = 2; deg <= 5; ++deg) {
    // Brute-force span of m * d_i f in degree deg.
    Echelon<PrimeField> J(K, false, 2);
    for (const auto& m : monomials_of_degree(3, deg - 2)) {
      for (int i = 0; i < 3; ++i) J.insert(poly::mul_term(K, d[i], m, 1u));
    }
    for (int it = 0; it < 10; ++it) {
      Poly<PrimeField> a;
      for (int i = 0; i < 3; ++i) a = poly::add(K, a, poly::mul(K, th::random_homogeneous(K, 3, deg - 2, 3, gen), d[i]));
      if (it % 2) a = poly::add(K, a, th::random_homogeneous(K, 3, deg, 2, gen));
      Poly<PrimeField> rho;
      std::vector<Poly<PrimeField>> beta;
      P.rem_split(a, rho, beta);
      CHECK(rho.is_zero() == J.rem(a).is_zero());
    }
  }
}
