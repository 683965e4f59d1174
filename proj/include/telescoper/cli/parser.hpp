#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "telescoper/picardfuchs/integrand.hpp"
#include "telescoper/picardfuchs/operator.hpp"

namespace tel {

struct Ast {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  mpz_class number;
  std::string name;
  long exponent = 0;
  std::shared_ptr<Ast> lhs, rhs;
};

struct ParseOptions {
  std::string param = "t";
  // Integration variables in order. Empty: collected in order of first appearance.
  std::vector<std::string> vars;
  bool allow_negative_exponents = false;
};

// Grammar: integers, identifiers, + - * / ^ with the usual precedence,
// unary minus binding looser than ^, parentheses. Exponents are integer literals.
std::shared_ptr<Ast> parse_ast(const std::string& text, const ParseOptions& opt = {});
std::string ast_to_string(const Ast& a);
std::vector<std::string> ast_symbols(const Ast& a);

// A quotient of polynomials with Q(t) coefficients.
RationalIntegrand parse_rational(const std::string& text, const ParseOptions& opt = {});
LaurentPoly parse_laurent(const std::string& text, ParseOptions opt, std::vector<std::string>* names = nullptr);

std::string to_string(const RationalIntegrand& R);

// Operator written as a polynomial in theta and t with rational coefficients,
// e.g. "theta^3 - t*(2*theta+1)*(17*theta^2+17*theta+5) + t^2*(theta+1)^3".
ThetaOperator parse_theta_operator(const std::string& text);

// Homogeneous polynomial with Q(t) coefficients in the given variables.
QtPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace tel
