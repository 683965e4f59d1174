#include "telescoper/cli/parser.hpp"

#include <algorithm>
#include <cctype>

#include "telescoper/errors.hpp"

namespace tel {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const ParseOptions& opt) : s_(s), opt_(opt) {}

  std::shared_ptr<Ast> run() {
    auto a = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static std::shared_ptr<Ast> node(Ast::Kind k, std::shared_ptr<Ast> l, std::shared_ptr<Ast> r = nullptr) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    a->lhs = std::move(l);
    a->rhs = std::move(r);
    return a;
  }

  std::shared_ptr<Ast> expr() {
    auto a = term();
    while (true) {
      if (accept('+')) {
        a = node(Ast::Kind::Add, a, term());
      } else if (accept('-')) {
        a = node(Ast::Kind::Sub, a, term());
      } else {
        return a;
      }
    }
  }

  std::shared_ptr<Ast> term() {
    auto a = unary();
    while (true) {
      if (accept('*')) {
        a = node(Ast::Kind::Mul, a, unary());
      } else if (accept('/')) {
        a = node(Ast::Kind::Div, a, unary());
      } else {
        return a;
      }
    }
  }

  std::shared_ptr<Ast> unary() {
    if (accept('-')) return node(Ast::Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  std::shared_ptr<Ast> power() {
    auto base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer exponent");
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ - start > 6) fail("exponent too large");
    long e = std::stol(s_.substr(start, i_ - start));
    if (neg) {
      if (!opt_.allow_negative_exponents) fail("negative exponents are only allowed for Laurent polynomials");
      e = -e;
    }
    if (paren && !accept(')')) fail("expected ')'");
    auto a = node(Ast::Kind::Pow, base);
    a->exponent = e;
    return a;
  }

  std::shared_ptr<Ast> primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      auto a = expr();
      if (!accept(')')) fail("expected ')'");
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto a = std::make_shared<Ast>();
      a->kind = Ast::Kind::Number;
      a->number = mpz_class(s_.substr(start, i_ - start));
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      auto a = std::make_shared<Ast>();
      a->kind = Ast::Kind::Symbol;
      a->name = s_.substr(start, i_ - start);
      return a;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const ParseOptions& opt_;
  std::size_t i_ = 0;
};

void collect(const Ast& a, std::vector<std::string>& out) {
  if (a.kind == Ast::Kind::Symbol) {
    if (std::find(out.begin(), out.end(), a.name) == out.end()) out.push_back(a.name);
  }
  if (a.lhs) collect(*a.lhs, out);
  if (a.rhs) collect(*a.rhs, out);
}

struct Frac {
  QtPoly num;
  QtPoly den;
};

class Evaluator {
 public:
  Evaluator(const std::vector<std::string>& vars, const std::string& param) : vars_(vars), param_(param) {}

  Frac eval(const Ast& a) const {
    switch (a.kind) {
      case Ast::Kind::Number:
        return {poly::constant(K_, K_.from_mpz(a.number)), one()};
      case Ast::Kind::Symbol: {
        if (a.name == param_) return {poly::constant(K_, K_.t()), one()};
        auto it = std::find(vars_.begin(), vars_.end(), a.name);
        if (it == vars_.end()) throw UnknownVariable("unknown variable '" + a.name + "'");
        return {poly::variable(K_, static_cast<int>(it - vars_.begin())), one()};
      }
      case Ast::Kind::Neg: {
        Frac x = eval(*a.lhs);
        return {poly::neg(K_, x.num), x.den};
      }
      case Ast::Kind::Add:
      case Ast::Kind::Sub: {
        Frac x = eval(*a.lhs), y = eval(*a.rhs);
        if (a.kind == Ast::Kind::Sub) y.num = poly::neg(K_, y.num);
        if (poly::equal(K_, x.den, y.den)) return simplify({poly::add(K_, x.num, y.num), x.den});
        return simplify({poly::add(K_, poly::mul(K_, x.num, y.den), poly::mul(K_, y.num, x.den)),
                         poly::mul(K_, x.den, y.den)});
      }
      case Ast::Kind::Mul: {
        Frac x = eval(*a.lhs), y = eval(*a.rhs);
        return simplify({poly::mul(K_, x.num, y.num), poly::mul(K_, x.den, y.den)});
      }
      case Ast::Kind::Div: {
        Frac x = eval(*a.lhs), y = eval(*a.rhs);
        if (y.num.is_zero()) throw Error("division by zero");
        return simplify({poly::mul(K_, x.num, y.den), poly::mul(K_, x.den, y.num)});
      }
      case Ast::Kind::Pow: {
        Frac x = eval(*a.lhs);
        long e = a.exponent;
        if (e < 0) {
          if (x.num.is_zero()) throw Error("division by zero");
          std::swap(x.num, x.den);
          e = -e;
        }
        return simplify({poly::pow(K_, x.num, static_cast<int>(e)), poly::pow(K_, x.den, static_cast<int>(e))});
      }
    }
    throw Error("bad expression node");
  }

 private:
  QtPoly one() const { return poly::constant(K_, K_.one()); }

  // Moves constant denominators into the numerator and cancels common monomial factors.
  Frac simplify(Frac f) const {
    if (f.num.is_zero()) return {QtPoly{}, one()};
    if (f.den.size() == 1) {
      const auto& lt = f.den.lead();
      Monomial g = lt.m;
      for (const auto& t : f.num.terms) g = gcd_monomial(g, t.m);
      QtField::Elem inv = K_.inv(lt.c);
      std::vector<Term<QtField>> terms;
      for (const auto& t : f.num.terms) terms.push_back({t.m / g, K_.mul(t.c, inv)});
      return {poly::from_terms(K_, std::move(terms)), poly::monomial(K_, lt.m / g, K_.one())};
    }
    return f;
  }

  static Monomial gcd_monomial(const Monomial& a, const Monomial& b) {
    std::vector<int> e(Monomial::kMaxVars);
    for (int i = 0; i < Monomial::kMaxVars; ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial::from_exponents(e);
  }

  QtField K_;
  const std::vector<std::string>& vars_;
  const std::string& param_;
};

std::vector<std::string> resolve_vars(const Ast& a, const ParseOptions& opt) {
  if (!opt.vars.empty()) return opt.vars;
  std::vector<std::string> syms, vars;
  collect(a, syms);
  for (auto& s : syms) {
    if (s != opt.param) vars.push_back(s);
  }
  if (static_cast<int>(vars.size()) > Monomial::kMaxVars - 1) throw ResourceError("too many variables");
  return vars;
}

}  // namespace

std::shared_ptr<Ast> parse_ast(const std::string& text, const ParseOptions& opt) { return Parser(text, opt).run(); }

std::vector<std::string> ast_symbols(const Ast& a) {
  std::vector<std::string> out;
  collect(a, out);
  return out;
}

std::string ast_to_string(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Number:
      return a.number.get_str();
    case Ast::Kind::Symbol:
      return a.name;
    case Ast::Kind::Neg:
      return "(-" + ast_to_string(*a.lhs) + ")";
    case Ast::Kind::Add:
      return "(" + ast_to_string(*a.lhs) + " + " + ast_to_string(*a.rhs) + ")";
    case Ast::Kind::Sub:
      return "(" + ast_to_string(*a.lhs) + " - " + ast_to_string(*a.rhs) + ")";
    case Ast::Kind::Mul:
      return "(" + ast_to_string(*a.lhs) + "*" + ast_to_string(*a.rhs) + ")";
    case Ast::Kind::Div:
      return "(" + ast_to_string(*a.lhs) + "/" + ast_to_string(*a.rhs) + ")";
    case Ast::Kind::Pow:
      return "(" + ast_to_string(*a.lhs) + ")^(" + std::to_string(a.exponent) + ")";
  }
  return "";
}

RationalIntegrand parse_rational(const std::string& text, const ParseOptions& opt) {
  auto ast = parse_ast(text, opt);
  RationalIntegrand R;
  R.names = resolve_vars(*ast, opt);
  for (const auto& v : R.names) {
    if (v == opt.param) throw Error("the parameter '" + v + "' cannot be an integration variable");
  }
  R.nvars = static_cast<int>(R.names.size());
  Evaluator ev(R.names, opt.param);
  Frac f = ev.eval(*ast);
  R.num = std::move(f.num);
  R.den = std::move(f.den);
  return R;
}

LaurentPoly parse_laurent(const std::string& text, ParseOptions opt, std::vector<std::string>* names) {
  opt.allow_negative_exponents = true;
  RationalIntegrand R = parse_rational(text, opt);
  if (R.den.size() != 1) throw Error("not a Laurent polynomial: the denominator is not a monomial");
  const QtField K;
  const auto& d = R.den.lead();
  LaurentPoly L;
  L.nvars = R.nvars;
  for (const auto& t : R.num.terms) {
    QtField::Elem c = K.div(t.c, d.c);
    if (!K.is_polynomial(c) || c.num.size() > 1) throw Error("Laurent polynomial coefficients must be integers");
    std::vector<int> e(R.nvars);
    for (int i = 0; i < R.nvars; ++i) e[i] = t.m.exp(i) - d.m.exp(i);
    L.terms.push_back({e, c.num.empty() ? mpz_class(0) : c.num[0]});
  }
  if (names) *names = R.names;
  return L;
}

std::string to_string(const RationalIntegrand& R) {
  const QtField K;
  std::string n = poly::to_string(K, R.num, R.names);
  if (R.den.size() == 1 && R.den.lead().m.deg == 0 && K.is_one(R.den.lead().c)) return n;
  return "(" + n + ")/(" + poly::to_string(K, R.den, R.names) + ")";
}

ThetaOperator parse_theta_operator(const std::string& text) {
  ParseOptions opt;
  opt.vars = {"theta"};
  RationalIntegrand R = parse_rational(text, opt);
  const QtField K;
  if (R.den.size() != 1 || R.den.lead().m.deg != 0) throw Error("operator must be polynomial in theta");
  QtPoly P = poly::scale(K, R.num, K.inv(R.den.lead().c));
  mpz_class l = 1;
  for (const auto& t : P.terms) {
    if (t.c.den.size() != 1) throw Error("operator coefficients must be polynomial in t");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.den[0].get_mpz_t());
  }
  // rows[j] is the coefficient of t^j, a polynomial in theta.
  std::vector<ZPoly> rows;
  for (const auto& t : P.terms) {
    const int i = t.m.exp(0);
    const mpz_class s = l / t.c.den[0];
    for (std::size_t j = 0; j < t.c.num.size(); ++j) {
      if (t.c.num[j] == 0) continue;
      if (rows.size() <= j) rows.resize(j + 1);
      if (static_cast<int>(rows[j].size()) <= i) rows[j].resize(i + 1, mpz_class(0));
      rows[j][i] += t.c.num[j] * s;
    }
  }
  for (auto& r : rows) zpoly::trim(r);
  return ThetaOperator{std::move(rows)};
}

QtPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  ParseOptions opt;
  opt.vars = vars;
  RationalIntegrand R = parse_rational(text, opt);
  const QtField K;
  if (R.den.size() != 1 || R.den.lead().m.deg != 0) throw Error("expected a polynomial, got a fraction");
  return poly::scale(K, R.num, K.inv(R.den.lead().c));
}

}  // namespace tel
