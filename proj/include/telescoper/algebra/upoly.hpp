#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "telescoper/algebra/prime_field.hpp"

namespace tel {

// Dense univariate polynomials, coefficient i at index i, no trailing zeros.
// The zero polynomial is the empty vector.
using ZPoly = std::vector<mpz_class>;
using FpPoly = std::vector<std::uint32_t>;

namespace zpoly {

inline int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
void trim(ZPoly& a);
bool is_one(const ZPoly& a);
ZPoly constant(const mpz_class& c);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly neg(const ZPoly& a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
// Non-negative gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const ZPoly& a);
ZPoly primitive(const ZPoly& a);
// Exact division over Z[t]; returns false when b does not divide a.
bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& q);
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
// gcd in Z[t], including integer content, normalized with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
mpz_class eval(const ZPoly& a, const mpz_class& x);
std::uint32_t eval_mod(const ZPoly& a, std::uint32_t x, const PrimeField& K);
FpPoly reduce_mod(const ZPoly& a, const PrimeField& K);
std::string to_string(const ZPoly& a, const std::string& var = "t");

}  // namespace zpoly

namespace fppoly {

inline int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }
void trim(FpPoly& a);
FpPoly add(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly sub(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly neg(const FpPoly& a, const PrimeField& K);
FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly scale(const FpPoly& a, std::uint32_t c, const PrimeField& K);
void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, const PrimeField& K);
FpPoly rem(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly quo(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly monic(const FpPoly& a, const PrimeField& K);
// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b, const PrimeField& K);
FpPoly derivative(const FpPoly& a, const PrimeField& K);
std::uint32_t eval(const FpPoly& a, std::uint32_t x, const PrimeField& K);
std::string to_string(const FpPoly& a, const PrimeField& K, const std::string& var = "t");

}  // namespace fppoly

}  // namespace tel
