#include "telescoper/algebra/prime_field.hpp"

#include <algorithm>

namespace tel {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1U << 31) || !is_prime_u64(p)) {
    throw Error("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  return static_cast<Elem>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

PrimeField::Elem PrimeField::from_mpq(const mpq_class& v) const {
  Elem den = from_mpz(v.get_den());
  if (den == 0) throw DegenerateEvaluation("denominator divisible by p");
  return div(from_mpz(v.get_num()), den);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("PrimeField: inverse of zero");
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p_, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  return static_cast<Elem>(powmod64(a, e, p_));
}

std::vector<std::uint32_t> random_primes(int bits, std::size_t count, std::mt19937_64& rng,
                                         const std::vector<std::uint32_t>& exclude) {
  if (bits < 20 || bits > 31) throw Error("random_primes: bits must lie in [20, 31]");
  std::uniform_int_distribution<std::uint32_t> dist(1U << (bits - 1), (bits == 31 ? 0x7fffffffU : (1U << bits) - 1));
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t c = dist(rng) | 1U;
    if (!is_prime_u64(c)) continue;
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    if (std::find(exclude.begin(), exclude.end(), c) != exclude.end()) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace tel
