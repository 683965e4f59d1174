#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>

#include "helpers.hpp"
#include "telescoper/cli/parser.hpp"

using namespace tel;

namespace {

QtElem eval_ast(const QtField& Q, const Ast& a, const std::map<std::string, QtElem>& env) {
  switch (a.kind) {
    case Ast::Kind::Number: return Q.from_mpz(a.number);
    case Ast::Kind::Symbol: return env.at(a.name);
    case Ast::Kind::Neg: return Q.neg(eval_ast(Q, *a.lhs, env));
    case Ast::Kind::Add: return Q.add(eval_ast(Q, *a.lhs, env), eval_ast(Q, *a.rhs, env));
    case Ast::Kind::Sub: return Q.sub(eval_ast(Q, *a.lhs, env), eval_ast(Q, *a.rhs, env));
    case Ast::Kind::Mul: return Q.mul(eval_ast(Q, *a.lhs, env), eval_ast(Q, *a.rhs, env));
    case Ast::Kind::Div: return Q.div(eval_ast(Q, *a.lhs, env), eval_ast(Q, *a.rhs, env));
    case Ast::Kind::Pow: {
      QtElem b = eval_ast(Q, *a.lhs, env);
      if (a.exponent < 0) b = Q.inv(b);
      QtElem r = Q.one();
      for (long i = 0; i < std::labs(a.exponent); ++i) r = Q.mul(r, b);
      return r;
    }
  }
  return Q.zero();
}

}  // namespace

TEST_CASE("parsing simple expressions") {
  auto a = parse_ast("((x))");
  CHECK(a->kind == Ast::Kind::Symbol);
  CHECK(a->name == "x");
  auto b = parse_ast("x^2*y - z^3");
  CHECK(b->kind == Ast::Kind::Sub);
  CHECK(ast_symbols(*b) == std::vector<std::string>{"x", "y", "z"});
  auto p = parse_polynomial("x^2*y - z^3", th::XYZ);
  CHECK(p.size() == 2);
  CHECK(p.degree() == 3);
  auto R = parse_rational("1/(1-(1-x*y)*z-t*x*z*y*(1-x)*(1-y)*(1-z))");
  CHECK(R.nvars == 3);
  CHECK(R.names == std::vector<std::string>{"x", "y", "z"});
  CHECK(R.den.degree() == 6);
  CHECK(poly::equal(QtField{}, R.num, th::qt("1", th::XYZ)));
}

TEST_CASE("printing and reparsing preserves the value") {
  QtField Q;
  std::mt19937_64 gen(7);
  for (const char* s : {"1/(1-(1-x*y)*z-t*x*z*y*(1-x)*(1-y)*(1-z))", "(x+2*y)^3/(t*x - y^2 + 3)",
                        "2*y^2/(x^2*(y^2-(1-x)*(1-t*x)))", "-x/(-(x-1)^2)"}) {
    auto ast = parse_ast(s);
    auto again = parse_ast(ast_to_string(*ast));
    auto R = parse_rational(s);
    auto R2 = parse_rational(to_string(R), ParseOptions{"t", R.names, false});
    std::uniform_int_distribution<int> d(-40, 40);
    for (int k = 0; k < 20; ++k) {
      std::map<std::string, QtElem> env{{"t", Q.t()}};
      std::vector<QtElem> pt;
      for (const auto& v : R.names) {
        env[v] = Q.from_mpq(mpq_class(d(gen), 1 + std::abs(d(gen))));
        pt.push_back(env[v]);
      }
      QtElem den = poly::evaluate(Q, R.den, pt);
      if (Q.is_zero(den)) continue;
      QtElem v1 = eval_ast(Q, *ast, env);
      CHECK(Q.equal(v1, eval_ast(Q, *again, env)));
      QtElem v2 = Q.div(poly::evaluate(Q, R.num, pt), den);
      CHECK(Q.equal(v1, v2));
      QtElem v3 = Q.div(poly::evaluate(Q, R2.num, pt), poly::evaluate(Q, R2.den, pt));
      CHECK(Q.equal(v2, v3));
    }
  }
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_ast("x +\n  * y");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_ast("(x + y"), SyntaxError);
  CHECK_THROWS_AS(parse_ast("x $ y"), SyntaxError);
  CHECK_THROWS_AS(parse_ast("x^y"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("x^-2 + 1"), SyntaxError);
  CHECK_NOTHROW(parse_laurent("x^-2 + 1", ParseOptions{}));
}

TEST_CASE("unknown variables are rejected") {
  ParseOptions o;
  o.vars = {"x", "y"};
  CHECK_THROWS_AS(parse_rational("x + w", o), UnknownVariable);
  CHECK_THROWS_AS(parse_polynomial("x*q", {"x"}), UnknownVariable);
  CHECK_NOTHROW(parse_rational("t*x + y", o));
}

TEST_CASE("theta operators") {
  auto T = parse_theta_operator("theta^2 - 4*t*(2*theta+1)^2");
  REQUIRE(T.rows.size() == 2);
  CHECK(T.rows[0] == ZPoly{0, 0, 1});
  CHECK(T.rows[1] == ZPoly{-4, -16, -16});
  // sum binomial(2k,k)^2 t^k
  std::vector<mpz_class> s;
  for (int k = 0; k < 20; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
    s.push_back(b * b);
  }
  CHECK(operator_annihilates_series(T, s));
  CHECK_THROWS_AS(parse_theta_operator("theta^2 - x"), UnknownVariable);
}
