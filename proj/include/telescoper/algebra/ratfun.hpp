#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "telescoper/algebra/prime_field.hpp"
#include "telescoper/algebra/upoly.hpp"

namespace tel {

// Element of Q(t) as num/den in Z[t] with gcd(num, den) = 1 (contents included)
// and lc(den) > 0. This is canonical: equal fractions have identical storage.
struct QtElem {
  ZPoly num;
  ZPoly den{mpz_class(1)};
};

class QtField {
 public:
  using Elem = QtElem;
  static constexpr bool has_derivation = true;

  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem{{mpz_class(1)}, {mpz_class(1)}}; }
  Elem from_int(std::int64_t v) const { return from_mpz(mpz_class(static_cast<long>(v))); }
  Elem from_mpz(const mpz_class& v) const { return Elem{zpoly::constant(v), {mpz_class(1)}}; }
  Elem from_mpq(mpq_class v) const {
    v.canonicalize();
    return Elem{zpoly::constant(v.get_num()), {v.get_den()}};
  }
  Elem from_poly(const ZPoly& p) const { return Elem{p, {mpz_class(1)}}; }
  Elem t() const { return Elem{{mpz_class(0), mpz_class(1)}, {mpz_class(1)}}; }
  // num/den, normalized; throws on den = 0.
  Elem make(ZPoly num, ZPoly den) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const { return Elem{zpoly::neg(a.num), a.den}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  void add_to(Elem& a, const Elem& b) const { a = add(a, b); }
  void sub_to(Elem& a, const Elem& b) const { a = sub(a, b); }
  void sub_mul_to(Elem& a, const Elem& b, const Elem& c) const { a = sub(a, mul(b, c)); }
  void mul_to(Elem& a, const Elem& b) const { a = mul(a, b); }

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool is_one(const Elem& a) const { return zpoly::is_one(a.num) && zpoly::is_one(a.den); }
  bool equal(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }
  bool is_polynomial(const Elem& a) const { return zpoly::is_one(a.den); }

  // d/dt
  Elem derive(const Elem& a) const;

  // Evaluate at t = u modulo p; throws DegenerateEvaluation if the denominator vanishes.
  std::uint32_t eval_mod(const Elem& a, std::uint32_t u, const PrimeField& K) const;

  std::string to_string(const Elem& a) const;

  bool operator==(const QtField&) const { return true; }
};

// Element of F_p(t): num/den with monic den and gcd(num, den) = 1.
struct FptElem {
  FpPoly num;
  FpPoly den{1u};
};

class FptField {
 public:
  using Elem = FptElem;
  static constexpr bool has_derivation = true;

  explicit FptField(PrimeField K) : K_(K) {}
  const PrimeField& base() const { return K_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return Elem{{1u}, {1u}}; }
  Elem from_int(std::int64_t v) const { return from_base(K_.from_int(v)); }
  Elem from_mpz(const mpz_class& v) const { return from_base(K_.from_mpz(v)); }
  Elem from_mpq(const mpq_class& v) const { return from_base(K_.from_mpq(v)); }
  Elem from_base(std::uint32_t c) const {
    if (c == 0) return Elem{};
    return Elem{{c}, {1u}};
  }
  Elem from_poly(const FpPoly& p) const { return Elem{p, {1u}}; }
  Elem t() const { return Elem{{0u, 1u}, {1u}}; }
  Elem make(FpPoly num, FpPoly den) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const { return Elem{fppoly::neg(a.num, K_), a.den}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  void add_to(Elem& a, const Elem& b) const { a = add(a, b); }
  void sub_to(Elem& a, const Elem& b) const { a = sub(a, b); }
  void sub_mul_to(Elem& a, const Elem& b, const Elem& c) const { a = sub(a, mul(b, c)); }
  void mul_to(Elem& a, const Elem& b) const { a = mul(a, b); }

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool is_one(const Elem& a) const { return a.num == FpPoly{1u} && a.den == FpPoly{1u}; }
  bool equal(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }

  Elem derive(const Elem& a) const;
  std::uint32_t eval(const Elem& a, std::uint32_t u) const;

  std::string to_string(const Elem& a) const;

  bool operator==(const FptField& o) const { return K_ == o.K_; }

 private:
  PrimeField K_;
};

// Image of a Q(t) element in F_p(t); throws DegenerateEvaluation if p kills the denominator.
FptElem reduce_mod(const QtElem& a, const FptField& L);

}  // namespace tel
