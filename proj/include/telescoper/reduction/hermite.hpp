#pragma once

#include <vector>

#include <gmpxx.h>

namespace tel {

// Dense univariate polynomial over Q, low degree first, no trailing zeros.
using QPoly = std::vector<mpq_class>;

namespace qpoly {
void trim(QPoly& a);
inline int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
QPoly derivative(const QPoly& a);
QPoly integral(const QPoly& a);
void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
// Monic gcd with Bezout cofactors: s a + t b = g.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
}  // namespace qpoly

// a/f^q = numerator/f + d/dx (cert_num / f^(q-1)), deg numerator < deg f.
struct HermiteResult {
  QPoly numerator;
  QPoly cert_num;
  int cert_power = 0;
};

// Pole-order reduction of a/f^q by a = u f + v f'. Throws NotSquarefree.
HermiteResult hermite_reduce(const QPoly& a, const QPoly& f, int q);

}  // namespace tel
