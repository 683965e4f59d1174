#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "telescoper/errors.hpp"

namespace tel {

// Exponent vector packed one byte per variable (variable i in byte i),
// at most 8 variables, exponents at most 127. The top bit of every byte
// stays clear so divisibility is a single subtraction.
struct Monomial {
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 127;
  static constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

  std::uint64_t bits = 0;
  std::uint32_t deg = 0;

  static Monomial from_exponents(const std::vector<int>& e) {
    if (e.size() > kMaxVars) throw ResourceError("too many variables for packed monomials");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > kMaxExp) throw ResourceError("exponent out of range for packed monomials");
      m.bits |= static_cast<std::uint64_t>(e[i]) << (8 * i);
      m.deg += static_cast<std::uint32_t>(e[i]);
    }
    return m;
  }
  static Monomial var(int i, int e = 1) {
    Monomial m;
    m.bits = static_cast<std::uint64_t>(e) << (8 * i);
    m.deg = static_cast<std::uint32_t>(e);
    return m;
  }

  int exp(int i) const { return static_cast<int>((bits >> (8 * i)) & 0xff); }
  std::vector<int> exponents(int nvars) const {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(i);
    return e;
  }
  bool is_one() const { return bits == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.bits = bits + o.bits;
    if (r.bits & kHighBits) throw ResourceError("exponent overflow in monomial product");
    r.deg = deg + o.deg;
    return r;
  }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    r.bits = bits - o.bits;
    r.deg = deg - o.deg;
    return r;
  }
  bool divides(const Monomial& o) const {
    return deg <= o.deg && ((o.bits - bits) & kHighBits) == 0;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      std::uint64_t a = (bits >> (8 * i)) & 0xff, b = (o.bits >> (8 * i)) & 0xff;
      std::uint64_t e = a > b ? a : b;
      r.bits |= e << (8 * i);
      r.deg += static_cast<std::uint32_t>(e);
    }
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (((bits >> (8 * i)) & 0xff) && ((o.bits >> (8 * i)) & 0xff)) return false;
    }
    return true;
  }

  bool operator==(const Monomial& o) const { return bits == o.bits; }
  bool operator!=(const Monomial& o) const { return bits != o.bits; }
};

// Graded reverse lexicographic order with x_0 > x_1 > ... : returns >0 if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  if (a.bits == b.bits) return 0;
  // Equal degree: the larger packed value has the larger exponent in the last
  // differing variable, hence is smaller.
  return a.bits < b.bits ? 1 : -1;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t x = m.bits * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

// All monomials of total degree d in nvars variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace tel
