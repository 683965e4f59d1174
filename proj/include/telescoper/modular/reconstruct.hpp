#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "telescoper/algebra/prime_field.hpp"
#include "telescoper/algebra/ratfun.hpp"
#include "telescoper/algebra/upoly.hpp"

namespace tel {

// Newton interpolation: the unique polynomial of degree < k through k points.
FpPoly interpolate_poly(const PrimeField& K, const std::vector<std::uint32_t>& us,
                        const std::vector<std::uint32_t>& vs);

// Rational function through the points (u_j, v_j), found on the extended
// Euclidean sequence of (prod (t - u_j), interpolant). The row preceded by
// the largest quotient is taken, so k points recover num/den whenever
// deg num + deg den < k. Throws NoSolution when the selected denominator
// vanishes at one of the u_j. Denominator of the result is monic.
FptElem cauchy_interpolate(const PrimeField& K, const std::vector<std::uint32_t>& us,
                           const std::vector<std::uint32_t>& vs);

// x = a mod m with |num|, den <= sqrt(m / 2), or nullopt.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

// Chinese remaindering into [0, prod p).
mpz_class crt(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes);

// crt followed by rational_reconstruct; throws NoReconstruction.
mpq_class crt_and_ratrec(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes);

}  // namespace tel
