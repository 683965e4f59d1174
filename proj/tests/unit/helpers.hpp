#pragma once

#include <random>
#include <string>
#include <vector>

#include "telescoper/algebra/poly.hpp"
#include "telescoper/algebra/prime_field.hpp"
#include "telescoper/algebra/rational_field.hpp"
#include "telescoper/algebra/ratfun.hpp"
#include "telescoper/cli/parser.hpp"

namespace th {

using namespace tel;

inline Poly<QtField> qt(const std::string& s, const std::vector<std::string>& vars) {
  return parse_polynomial(s, vars);
}

inline Poly<RationalField> qq(const std::string& s, const std::vector<std::string>& vars) {
  RationalField K;
  return poly::map_coeffs(K, parse_polynomial(s, vars), [](const QtElem& a) {
    if (a.num.size() > 1 || a.den.size() > 1) throw Error("coefficient depends on t");
    return a.num.empty() ? mpq_class(0) : mpq_class(a.num[0], a.den[0]);
  });
}

inline Poly<PrimeField> fp(const PrimeField& K, const std::string& s, const std::vector<std::string>& vars) {
  FptField L(K);
  return poly::map_coeffs(K, parse_polynomial(s, vars), [&](const QtElem& a) {
    FptElem b = reduce_mod(a, L);
    if (b.num.size() > 1 || b.den.size() > 1) throw Error("coefficient depends on t");
    return b.num.empty() ? 0u : b.num[0];
  });
}

// Random polynomial with terms of total degree d in nvars variables.
template <class F, class Gen>
Poly<F> random_homogeneous(const F& K, int nvars, int d, int nterms, Gen& gen, int cmax = 9) {
  auto mons = monomials_of_degree(nvars, d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> coef(-cmax, cmax);
  Poly<F> r;
  for (int k = 0; k < nterms; ++k) {
    int c = coef(gen);
    if (c == 0) continue;
    r = poly::add(K, r, poly::monomial(K, mons[pick(gen)], K.from_int(c)));
  }
  return r;
}

inline const std::vector<std::string> XYZ{"x", "y", "z"};
inline const std::vector<std::string> X012{"x0", "x1", "x2"};
inline const std::vector<std::string> X0123{"x0", "x1", "x2", "x3"};

}  // namespace th
