#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "telescoper/picardfuchs/driver.hpp"
#include "telescoper/picardfuchs/integrand.hpp"
#include "telescoper/picardfuchs/operator.hpp"
#include "telescoper/picardfuchs/series.hpp"

using namespace tel;
using th::XYZ;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TELESCOPER_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ZPoly zp(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.push_back(mpz_class(v));
  return p;
}

DiffOperator apery_operator() {
  return DiffOperator{{zp({-5, 1}), zp({1, -112, 7}), zp({0, 3, -153, 6}), zp({0, 0, 1, -34, 1})}};
}

std::vector<mpz_class> apery_numbers(int terms) {
  std::vector<mpz_class> out;
  for (int n = 0; n < terms; ++n) {
    mpz_class s = 0;
    for (int k = 0; k <= n; ++k) {
      mpz_class a, b;
      mpz_bin_uiui(a.get_mpz_t(), n, k);
      mpz_bin_uiui(b.get_mpz_t(), n + k, k);
      s += a * a * b * b;
    }
    out.push_back(s);
  }
  return out;
}

// Coefficients of L(F) below t^(terms - order), computed directly.
std::vector<mpq_class> apply_operator(const DiffOperator& L, const std::vector<mpq_class>& F) {
  const int m = static_cast<int>(F.size());
  std::vector<mpq_class> out(m, 0);
  for (int k = 0; k <= L.order(); ++k) {
    for (int e = 0; e < m; ++e) {
      // d^k t^e = e (e-1) .. (e-k+1) t^(e-k)
      if (e < k) continue;
      mpq_class ff = 1;
      for (int j = 0; j < k; ++j) ff *= e - j;
      for (std::size_t j = 0; j < L.coeffs[k].size(); ++j) {
        int d = e - k + static_cast<int>(j);
        if (d < m) out[d] += mpq_class(L.coeffs[k][j]) * ff * F[e];
      }
    }
  }
  out.resize(m - L.order() > 0 ? m - L.order() : 0);
  return out;
}

HomogeneousIntegrand from_text(const std::string& s, bool x0 = false) { return homogenize(parse_rational(s), x0); }

PFResult<QtField> run_exact(const HomogeneousIntegrand& H, bool certs, int r_start = 1) {
  ReductionEngine<QtField> E(QtField{}, H.f, H.nvars, EngineOptions{OrderKind::POT, certs});
  PFOptions o;
  o.certificates = certs;
  o.r_start = r_start;
  return picard_fuchs(E, H.a, o);
}

}  // namespace

TEST_CASE("operator normalization is canonical") {
  QtField Q;
  std::vector<QtElem> rel{Q.make(zp({1}), zp({0, 2})), Q.one()};  // D + 1/(2t)
  auto L = normalize_operator(rel);
  CHECK(L == DiffOperator{{zp({1}), zp({0, 2})}});
  std::vector<QtElem> rel2{Q.make(zp({-3}), zp({0, -6})), Q.from_int(1)};
  CHECK(normalize_operator(rel2) == L);
  auto M = normalize_operator(std::vector<ZPoly>{zp({-6}), zp({0, -12})});
  CHECK(M == L);
}

TEST_CASE("theta form round trip") {
  auto L = apery_operator();
  auto T = to_theta(L);
  CHECK(to_string(T) == "(theta^3) + t*(-34*theta^3 - 51*theta^2 - 27*theta - 5) + t^2*(theta^3 + 3*theta^2 + 3*theta + 1)");
  CHECK(from_theta(T) == L);
  auto T2 = parse_theta_operator("theta^3 - t*(2*theta+1)*(17*theta^2+17*theta+5) + t^2*(theta+1)^3");
  CHECK(T2 == T);
}

TEST_CASE("operators against series") {
  auto L = apery_operator();
  auto A = apery_numbers(40);
  CHECK(A[1] == 5);
  CHECK(A[2] == 73);
  CHECK(A[3] == 1445);
  CHECK(operator_annihilates_series(L, A));
  CHECK(operator_annihilates_series(to_theta(L), A));
  auto B = A;
  B[20] += 1;
  CHECK_FALSE(operator_annihilates_series(L, B));
  CHECK_THROWS_AS(operator_annihilates_series(L, std::vector<mpz_class>(A.begin(), A.begin() + 5)), InsufficientTerms);
  DiffOperator one{{zp({1})}};
  CHECK_FALSE(operator_annihilates_series(one, A));
}

TEST_CASE("constant term series") {
  std::vector<std::string> names;
  auto g = parse_laurent("x + 1/x", ParseOptions{}, &names);
  auto s = constant_term_series(g, 5);
  CHECK(s == std::vector<mpz_class>{1, 0, 2, 0, 6});
  auto g27 = parse_laurent(read_data("laurent_v23_289.txt"), ParseOptions{});
  auto s27 = constant_term_series(g27, 6);
  CHECK(s27 == std::vector<mpz_class>{1, 0, 18, 138, 2070, 29040});
  auto g42 = parse_laurent(read_data("laurent_v25_59.txt"), ParseOptions{});
  auto s42 = constant_term_series(g42, 5);
  CHECK(s42 == std::vector<mpz_class>{1, 0, 22, 204, 3474});
}

TEST_CASE("series kernel: parallel, serial and reference agree") {
  auto g = parse_laurent(read_data("laurent_v23_289.txt"), ParseOptions{});
  SeriesOptions par, ser;
  ser.parallel = false;
  auto a = constant_term_series(g, 9, par);
  auto b = constant_term_series(g, 9, ser);
  auto c = constant_term_series_reference(g, 9);
  CHECK(a == b);
  CHECK(a == c);
  auto h = parse_laurent("x*y + 1/x + 1/y + x + y/x", ParseOptions{});
  CHECK(constant_term_series(h, 12) == constant_term_series_reference(h, 12));
}

TEST_CASE("printed order-4 operator annihilates its series") {
  auto T = parse_theta_operator(read_data("theta_v25_59.txt"));
  CHECK(T.rows.size() == 9);
  CHECK(T.rows[0].back() == 1849);
  auto g = parse_laurent(read_data("laurent_v25_59.txt"), ParseOptions{});
  auto s = constant_term_series(g, 20);
  CHECK(operator_annihilates_series(T, s));
  s[17] += 1;
  CHECK_FALSE(operator_annihilates_series(T, s));
}

TEST_CASE("Laurent polynomials to rational integrands") {
  QtField Q;
  auto g = parse_laurent("x + 1/x", ParseOptions{});
  auto R = laurent_to_rational(g);
  const std::vector<std::string> v{"x"};
  CHECK(poly::equal(Q, R.num, th::qt("1", v)));
  CHECK(poly::equal(Q, R.den, th::qt("x - t*x^2 - t", v)));
  // Evaluation check against 1/(x (1 - t g)) at rational points.
  auto g2 = parse_laurent("x*y + 1/x + y/x + 1/y", ParseOptions{});
  auto R2 = laurent_to_rational(g2);
  for (auto [x, y] : std::vector<std::pair<long, long>>{{2, 3}, {-1, 5}, {7, 2}}) {
    std::vector<QtElem> pt{Q.from_int(x), Q.from_int(y)};
    QtElem val = Q.div(poly::evaluate(Q, R2.num, pt), poly::evaluate(Q, R2.den, pt));
    QtElem gv = Q.add(Q.add(Q.from_int(x * y), Q.from_mpq(mpq_class(1, x))),
                      Q.add(Q.from_mpq(mpq_class(y, x)), Q.from_mpq(mpq_class(1, y))));
    QtElem direct = Q.inv(Q.mul(Q.from_int(x * y), Q.sub(Q.one(), Q.mul(Q.t(), gv))));
    CHECK(Q.equal(val, direct));
  }
  auto g27 = parse_laurent(read_data("laurent_v23_289.txt"), ParseOptions{});
  auto R27 = laurent_to_rational(g27);
  int spread = 0, uncovered = 0, gdeg = 0;
  for (int i = 0; i < g27.nvars; ++i) {
    int lo = 0;
    for (const auto& [e, c] : g27.terms) lo = std::min(lo, e[i]);
    spread -= lo;
    if (lo == 0) ++uncovered;
  }
  for (const auto& [e, c] : g27.terms) {
    int d = 0;
    for (int i = 0; i < g27.nvars; ++i) d += e[i];
    gdeg = std::max(gdeg, d);
  }
  CHECK(R27.den.degree() == uncovered + spread + std::max(0, gdeg));
}

TEST_CASE("algebraic functions to rational integrands") {
  QtField Q;
  const std::vector<std::string> v{"x", "y"};
  auto R = algebraic_to_rational(th::qt("y^2 - x", v), 2, 1);
  CHECK(poly::equal(Q, R.num, th::qt("2*y^2", v)));
  CHECK(poly::equal(Q, R.den, th::qt("y^2 - x", v)));
  auto R1 = algebraic_to_rational(th::qt("y - x^2 - 1", v), 2, 1);
  CHECK(poly::equal(Q, R1.num, th::qt("y", v)));
}

TEST_CASE("homogenization") {
  QtField Q;
  auto H = from_text("1/(x^2-t)");
  CHECK(H.nvars == 2);
  CHECK(H.q == 1);
  CHECK(poly::equal(Q, H.f, th::qt("x1^2 - t*x0^2", {"x0", "x1"})));
  CHECK(poly::equal(Q, H.a, th::qt("1", {"x0", "x1"})));
  auto A = from_text(read_data("apery.txt"));
  CHECK(A.nvars == 4);
  CHECK(A.a.degree() == A.q * A.f.degree() - 4);
  auto B = from_text(read_data("apery.txt"), true);
  CHECK(B.f.degree() == A.f.degree() + 1);
  CHECK(B.a.degree() == B.q * B.f.degree() - 4);
}

TEST_CASE("conic: the 2t D + 1 operator with certificates") {
  QtField Q;
  auto H = from_text("1/(x^2-t)");
  auto res = run_exact(H, true);
  auto L = normalize_operator(res.relation);
  CHECK(L == DiffOperator{{zp({1}), zp({0, 2})}});
  CHECK(res.r_used == 1);
  auto chk = verify_certificates(Q, H.f, H.nvars, H.a, res.rhos, res.betas, res.relation);
  CHECK(chk.ok);
  // A certificate built by hand: rho_0 = omega, rho_1 = delta(omega) - D_f((x0/(2t)) xi_0).
  std::vector<TopForm<QtField>> rhos{th::qt("1", {"x0", "x1"}), th::qt("-1/(2*t)", {"x0", "x1"})};
  std::vector<NForm<QtField>> betas{forms::zero_nform<QtField>(1),
                                    NForm<QtField>{th::qt("-x0/(2*t)", {"x0", "x1"}), {}}};
  std::vector<QtElem> rel{Q.make(zp({1}), zp({0, 2})), Q.one()};
  CHECK(verify_certificates(Q, H.f, H.nvars, H.a, rhos, betas, rel).ok);
  for (std::size_t k = 0; k < res.betas.size(); ++k) {
    auto bad = res.betas;
    bad[k][0] = poly::add(Q, bad[k][0], th::qt("x0", {"x0", "x1"}));
    auto c = verify_certificates(Q, H.f, H.nvars, H.a, res.rhos, bad, res.relation);
    CHECK_FALSE(c.ok);
    CHECK(c.failed_index == static_cast<int>(k));
  }
}

TEST_CASE("smooth driver agrees with the general driver") {
  QtField Q;
  for (const char* s : {"1/(x^2-t)", "1/(x^3+y^3+1-t*x*y)", "1/(x^3+2*y^3+1-t*x^2*y)"}) {
    auto H = from_text(s);
    ReductionEngine<QtField> E(Q, H.f, H.nvars);
    auto a = normalize_operator(picard_fuchs_smooth(E, H.a).relation);
    auto b = normalize_operator(picard_fuchs(E, H.a).relation);
    CHECK(a == b);
  }
  auto t_free = from_text("1/(x^3+y^3+1)");
  ReductionEngine<QtField> E(Q, t_free.f, t_free.nvars);
  CHECK(normalize_operator(picard_fuchs_smooth(E, t_free.a).relation) == DiffOperator{{ZPoly{}, zp({1})}});
  auto sing = from_text("1/(x*y^2-1)");
  ReductionEngine<QtField> S(Q, sing.f, sing.nvars);
  CHECK_THROWS_AS(picard_fuchs_smooth(S, sing.a), NotSmooth);
}

TEST_CASE("Legendre family") {
  QtField Q;
  auto f = th::qt("z*y^2 - x*(x-z)*(x-t*z)", XYZ);
  ReductionEngine<QtField> E(Q, f, 3);
  auto L = normalize_operator(picard_fuchs_smooth(E, th::qt("1", XYZ)).relation);
  CHECK(L.order() == 2);
  CHECK(normalize_operator(picard_fuchs(E, th::qt("1", XYZ)).relation) == L);
  // sum ((1/2)_k / k!)^2 t^k
  std::vector<mpq_class> F;
  mpq_class c = 1;
  for (int k = 0; k < 50; ++k) {
    F.push_back(c);
    c *= mpq_class(2 * k + 1, 2 * k + 2);
    c *= mpq_class(2 * k + 1, 2 * k + 2);
  }
  for (const auto& v : apply_operator(L, F)) CHECK(v == 0);
}

TEST_CASE("vanishing period class gives the unit operator") {
  QtField Q;
  ReductionEngine<QtField> E(Q, th::qt("x*y^2 - z^3", XYZ), 3);
  PFOptions o;
  o.r_start = 2;
  auto res = picard_fuchs(E, th::qt("x^3", XYZ), o);
  CHECK(res.r_used == 2);
  CHECK(res.rhos[0].is_zero());
  CHECK(normalize_operator(res.relation) == DiffOperator{{zp({1})}});
}

TEST_CASE("square root periods") {
  auto H = from_text("2*y^2/(x^2*(y^2-(1-x)*(1-t*x)))");
  auto res = run_exact(H, true);
  auto L = normalize_operator(res.relation);
  // The residue at y = sqrt((1-x)(1-tx)) gives the period [x^1] sqrt(...) = -(1+t)/2.
  std::vector<mpq_class> F{mpq_class(-1, 2), mpq_class(-1, 2)};
  F.resize(12, 0);
  for (const auto& v : apply_operator(L, F)) CHECK(v == 0);
  CHECK(verify_certificates(QtField{}, H.f, H.nvars, H.a, res.rhos, res.betas, res.relation).ok);
}

TEST_CASE("accepted reductions stay in F_n and the operator ignores the certificate flag") {
  for (const char* s : {"1/(x^2*y-t*x-y^3+1)", "(x+y)/(x*y^2-t*(x^3-1))"}) {
    auto H = from_text(s);
    auto a = run_exact(H, true);
    auto b = run_exact(H, false);
    CHECK(normalize_operator(a.relation) == normalize_operator(b.relation));
    FormContext ctx{H.nvars - 1, H.f.degree()};
    for (const auto& rho : a.rhos) CHECK(forms::pole_order(ctx, rho) <= H.nvars - 1);
    CHECK(verify_certificates(QtField{}, H.f, H.nvars, H.a, a.rhos, a.betas, a.relation).ok);
  }
}

TEST_CASE("time budget interrupts syzygy preprocessing") {
  auto H = from_text(read_data("apery.txt"));
  ReductionEngine<QtField> E(QtField{}, H.f, H.nvars);
  PFOptions o;
  o.budget_seconds = 1e-6;
  CHECK_THROWS_AS(picard_fuchs(E, H.a, o), ResourceError);
  // The engine stays usable after an interrupted run.
  CHECK(E.nontrivial_syzygies(0).size() == 0);
}
