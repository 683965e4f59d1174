#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/algebra/ratfun.hpp"

namespace tel {

using QtPoly = Poly<QtField>;

// R = num/den in Q(t)[x_1..x_n] (variables 0..n-1).
struct RationalIntegrand {
  QtPoly num;
  QtPoly den;
  int nvars = 0;
  std::vector<std::string> names;
};

// R_hom = a / f^q in Q(t)[x_0..x_n] with x_0 at index 0, homogeneous of degree -n-1.
struct HomogeneousIntegrand {
  QtPoly a;
  QtPoly f;
  int q = 1;
  int nvars = 0;  // n + 1
};

// x_0^{-n-1} R(x_1/x_0, ..., x_n/x_0). With multiply_x0 (or when the degree
// count forces it) f is replaced by x_0 f.
HomogeneousIntegrand homogenize(const RationalIntegrand& R, bool multiply_x0 = false);

// Homogenization of a single polynomial with x_0 prepended.
QtPoly homogenize_poly(const QtPoly& p, int degree);

// Laurent polynomial sum c_k x^{e_k} with integer coefficients.
struct LaurentPoly {
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, mpz_class>> terms;
};

// 1/((x_1...x_n)(1 - t g)) with the Laurent denominators cleared.
RationalIntegrand laurent_to_rational(const LaurentPoly& g);

// y dP/dy / P for P in Q(t)[vars], y the variable with index y_index.
RationalIntegrand algebraic_to_rational(const QtPoly& P, int nvars, int y_index);

}  // namespace tel
