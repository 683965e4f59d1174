#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "telescoper/errors.hpp"

namespace tel {

// The field Q with GMP rationals (always canonicalized by gmpxx).
class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool has_derivation = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }
  Elem from_mpq(const mpq_class& v) const { return v; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("RationalField: inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw Error("RationalField: division by zero");
    return a / b;
  }

  void add_to(Elem& a, const Elem& b) const { a += b; }
  void sub_to(Elem& a, const Elem& b) const { a -= b; }
  void sub_mul_to(Elem& a, const Elem& b, const Elem& c) const { a -= b * c; }
  void mul_to(Elem& a, const Elem& b) const { a *= b; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace tel
