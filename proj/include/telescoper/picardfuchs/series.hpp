#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "telescoper/picardfuchs/integrand.hpp"

namespace tel {

struct SeriesOptions {
  bool parallel = true;
  std::size_t max_cells = std::size_t(1) << 28;  // dense box size limit per buffer
};

// ct(g^k) for k = 0 .. terms-1.
// Dense multi-modular kernel: A_{k+1}(m) = sum_v c_v A_k(m - v) on a box, and
//   ct(g^{2k}) = sum_m A_k(m) A_k(-m),  ct(g^{2k+1}) = sum_m A_{k+1}(m) A_k(-m),
// lifted by CRT over 62-bit primes.
std::vector<mpz_class> constant_term_series(const LaurentPoly& g, int terms, const SeriesOptions& opt = {});

// One residue sequence of the kernel above, for a single prime.
std::vector<std::uint64_t> constant_term_series_mod(const LaurentPoly& g, int terms, std::uint64_t p,
                                                    const SeriesOptions& opt = {});

// Iterated sparse multiplication over Z. Slow; kept as a reference.
std::vector<mpz_class> constant_term_series_reference(const LaurentPoly& g, int terms);

// Largest primes below 2^62, in decreasing order.
std::vector<std::uint64_t> series_primes(std::size_t count);

}  // namespace tel
