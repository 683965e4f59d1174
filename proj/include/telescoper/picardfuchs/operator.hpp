#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "telescoper/algebra/ratfun.hpp"
#include "telescoper/algebra/upoly.hpp"

namespace tel {

// L = sum_k coeffs[k](t) d^k with d = d/dt, lowest order first.
// Normalized form: integer polynomial coefficients with gcd 1 in Z[t] and a
// positive leading coefficient (in t) of the top-order coefficient.
struct DiffOperator {
  std::vector<ZPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int degree() const;
  bool operator==(const DiffOperator& o) const { return coeffs == o.coeffs; }
};

// L = sum_j t^j rows[j](theta) with theta = t d/dt. rows[j] is a polynomial in theta.
struct ThetaOperator {
  std::vector<ZPoly> rows;

  int order() const;
  bool operator==(const ThetaOperator& o) const { return rows == o.rows; }
};

DiffOperator normalize_operator(std::vector<ZPoly> coeffs);
DiffOperator normalize_operator(const std::vector<QtElem>& coeffs);

// t^e L written in theta, with e the least shift making every coefficient fit,
// then stripped of common powers of t and of integer content.
ThetaOperator to_theta(const DiffOperator& L);
DiffOperator from_theta(const ThetaOperator& T);

// The operator evaluated at t = u over F_p, as a list of coefficient values.
std::vector<std::uint32_t> eval_mod(const DiffOperator& L, std::uint32_t u, const PrimeField& K);

std::string to_string(const DiffOperator& L);
std::string to_string(const ThetaOperator& T);

// Residues of T applied to the power series with the given coefficients:
// entry m is the coefficient of t^m, exact for every m below the prefix length.
std::vector<mpz_class> theta_residues(const ThetaOperator& T, const std::vector<mpz_class>& series);

// True iff L annihilates the series to the checkable order. Throws
// InsufficientTerms unless the prefix is longer than order + degree + guard.
bool operator_annihilates_series(const ThetaOperator& T, const std::vector<mpz_class>& series, int guard = 2);
bool operator_annihilates_series(const DiffOperator& L, const std::vector<mpz_class>& series, int guard = 2);

// Signed Stirling numbers of the first kind s(k, i), and of the second kind S(k, i), 0 <= i <= k.
std::vector<std::vector<mpz_class>> stirling_first(int kmax);
std::vector<std::vector<mpz_class>> stirling_second(int kmax);

}  // namespace tel
