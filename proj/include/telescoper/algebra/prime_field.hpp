#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "telescoper/errors.hpp"

namespace tel {

// Arithmetic in Z/pZ for a prime p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool has_derivation = false;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_mpz(const mpz_class& v) const;
  // Throws DegenerateEvaluation when p divides the denominator.
  Elem from_mpq(const mpq_class& v) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  void add_to(Elem& a, Elem b) const { a = add(a, b); }
  void sub_to(Elem& a, Elem b) const { a = sub(a, b); }
  // a -= b * c
  void sub_mul_to(Elem& a, Elem b, Elem c) const { a = sub(a, mul(b, c)); }
  void mul_to(Elem& a, Elem b) const { a = mul(a, b); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  // Symmetric representative in (-p/2, p/2].
  std::int64_t signed_value(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(Elem a) const { return std::to_string(signed_value(a)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime_u64(std::uint64_t n);

// Distinct random primes in [2^(bits-1), 2^bits), bits in [20, 31].
std::vector<std::uint32_t> random_primes(int bits, std::size_t count,
                                         std::mt19937_64& rng,
                                         const std::vector<std::uint32_t>& exclude = {});

}  // namespace tel
