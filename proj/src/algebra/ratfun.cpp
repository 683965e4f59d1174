#include "telescoper/algebra/ratfun.hpp"

namespace tel {

namespace {

void fix_sign(ZPoly& num, ZPoly& den) {
  if (sgn(den.back()) < 0) {
    num = zpoly::neg(num);
    den = zpoly::neg(den);
  }
}

ZPoly exact_quo(const ZPoly& a, const ZPoly& b) {
  if (zpoly::is_one(b)) return a;
  ZPoly q;
  if (!zpoly::divexact(a, b, q)) throw Error("QtField: inexact division");
  return q;
}

bool is_unit_den(const ZPoly& d) { return zpoly::is_one(d); }

}  // namespace

QtElem QtField::make(ZPoly num, ZPoly den) const {
  zpoly::trim(num);
  zpoly::trim(den);
  if (den.empty()) throw Error("QtField: zero denominator");
  if (num.empty()) return Elem{};
  ZPoly g = zpoly::gcd(num, den);
  if (!zpoly::is_one(g)) {
    num = exact_quo(num, g);
    den = exact_quo(den, g);
  }
  fix_sign(num, den);
  return Elem{std::move(num), std::move(den)};
}

QtElem QtField::add(const Elem& a, const Elem& b) const {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (is_unit_den(a.den) && is_unit_den(b.den)) return Elem{zpoly::add(a.num, b.num), {mpz_class(1)}};
  if (a.den == b.den) {
    return make(zpoly::add(a.num, b.num), a.den);
  }
  ZPoly g = zpoly::gcd(a.den, b.den);
  ZPoly ad = exact_quo(a.den, g), bd = exact_quo(b.den, g);
  ZPoly num = zpoly::add(zpoly::mul(a.num, bd), zpoly::mul(b.num, ad));
  if (num.empty()) return Elem{};
  ZPoly den = zpoly::mul(a.den, bd);
  if (zpoly::is_one(g)) {
    fix_sign(num, den);
    return Elem{std::move(num), std::move(den)};
  }
  ZPoly g2 = zpoly::gcd(num, g);
  if (!zpoly::is_one(g2)) {
    num = exact_quo(num, g2);
    den = exact_quo(den, g2);
  }
  fix_sign(num, den);
  return Elem{std::move(num), std::move(den)};
}

QtElem QtField::mul(const Elem& a, const Elem& b) const {
  if (a.num.empty() || b.num.empty()) return Elem{};
  if (is_unit_den(a.den) && is_unit_den(b.den)) return Elem{zpoly::mul(a.num, b.num), {mpz_class(1)}};
  ZPoly g1 = zpoly::gcd(a.num, b.den);
  ZPoly g2 = zpoly::gcd(b.num, a.den);
  ZPoly num = zpoly::mul(exact_quo(a.num, g1), exact_quo(b.num, g2));
  ZPoly den = zpoly::mul(exact_quo(a.den, g2), exact_quo(b.den, g1));
  fix_sign(num, den);
  return Elem{std::move(num), std::move(den)};
}

QtElem QtField::inv(const Elem& a) const {
  if (a.num.empty()) throw Error("QtField: inverse of zero");
  ZPoly num = a.den, den = a.num;
  fix_sign(num, den);
  return Elem{std::move(num), std::move(den)};
}

QtElem QtField::derive(const Elem& a) const {
  if (a.num.empty()) return Elem{};
  if (zpoly::degree(a.den) == 0) return make(zpoly::derivative(a.num), a.den);
  // (n/d)' = (n'd - nd')/d^2
  ZPoly num = zpoly::sub(zpoly::mul(zpoly::derivative(a.num), a.den),
                         zpoly::mul(a.num, zpoly::derivative(a.den)));
  return make(std::move(num), zpoly::mul(a.den, a.den));
}

std::uint32_t QtField::eval_mod(const Elem& a, std::uint32_t u, const PrimeField& K) const {
  std::uint32_t d = zpoly::eval_mod(a.den, u, K);
  if (d == 0) throw DegenerateEvaluation("denominator vanishes at evaluation point");
  return K.div(zpoly::eval_mod(a.num, u, K), d);
}

std::string QtField::to_string(const Elem& a) const {
  if (zpoly::is_one(a.den)) return zpoly::to_string(a.num);
  std::string n = zpoly::to_string(a.num), d = zpoly::to_string(a.den);
  if (a.num.size() > 1) n = "(" + n + ")";
  if (a.den.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

FptElem FptField::make(FpPoly num, FpPoly den) const {
  fppoly::trim(num);
  fppoly::trim(den);
  if (den.empty()) throw Error("FptField: zero denominator");
  if (num.empty()) return Elem{};
  FpPoly g = fppoly::gcd(num, den, K_);
  if (g.size() > 1) {
    num = fppoly::quo(num, g, K_);
    den = fppoly::quo(den, g, K_);
  }
  if (den.back() != 1) {
    std::uint32_t c = K_.inv(den.back());
    num = fppoly::scale(num, c, K_);
    den = fppoly::scale(den, c, K_);
  }
  return Elem{std::move(num), std::move(den)};
}

FptElem FptField::add(const Elem& a, const Elem& b) const {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (a.den.size() == 1 && b.den.size() == 1) return Elem{fppoly::add(a.num, b.num, K_), {1u}};
  if (a.den == b.den) return make(fppoly::add(a.num, b.num, K_), a.den);
  FpPoly g = fppoly::gcd(a.den, b.den, K_);
  FpPoly ad = fppoly::quo(a.den, g, K_), bd = fppoly::quo(b.den, g, K_);
  FpPoly num = fppoly::add(fppoly::mul(a.num, bd, K_), fppoly::mul(b.num, ad, K_), K_);
  if (num.empty()) return Elem{};
  FpPoly den = fppoly::mul(a.den, bd, K_);
  if (g.size() > 1) {
    FpPoly g2 = fppoly::gcd(num, g, K_);
    if (g2.size() > 1) {
      num = fppoly::quo(num, g2, K_);
      den = fppoly::quo(den, g2, K_);
    }
  }
  return Elem{std::move(num), std::move(den)};
}

FptElem FptField::mul(const Elem& a, const Elem& b) const {
  if (a.num.empty() || b.num.empty()) return Elem{};
  if (a.den.size() == 1 && b.den.size() == 1) return Elem{fppoly::mul(a.num, b.num, K_), {1u}};
  FpPoly g1 = fppoly::gcd(a.num, b.den, K_);
  FpPoly g2 = fppoly::gcd(b.num, a.den, K_);
  FpPoly num = fppoly::mul(g1.size() > 1 ? fppoly::quo(a.num, g1, K_) : a.num,
                           g2.size() > 1 ? fppoly::quo(b.num, g2, K_) : b.num, K_);
  FpPoly den = fppoly::mul(g2.size() > 1 ? fppoly::quo(a.den, g2, K_) : a.den,
                           g1.size() > 1 ? fppoly::quo(b.den, g1, K_) : b.den, K_);
  return Elem{std::move(num), std::move(den)};
}

FptElem FptField::inv(const Elem& a) const {
  if (a.num.empty()) throw Error("FptField: inverse of zero");
  std::uint32_t c = K_.inv(a.num.back());
  return Elem{fppoly::scale(a.den, c, K_), fppoly::scale(a.num, c, K_)};
}

FptElem FptField::derive(const Elem& a) const {
  if (a.num.empty()) return Elem{};
  if (a.den.size() == 1) return Elem{fppoly::derivative(a.num, K_), {1u}};
  FpPoly num = fppoly::sub(fppoly::mul(fppoly::derivative(a.num, K_), a.den, K_),
                           fppoly::mul(a.num, fppoly::derivative(a.den, K_), K_), K_);
  return make(std::move(num), fppoly::mul(a.den, a.den, K_));
}

std::uint32_t FptField::eval(const Elem& a, std::uint32_t u) const {
  std::uint32_t d = fppoly::eval(a.den, u, K_);
  if (d == 0) throw DegenerateEvaluation("denominator vanishes at evaluation point");
  return K_.div(fppoly::eval(a.num, u, K_), d);
}

std::string FptField::to_string(const Elem& a) const {
  if (a.den.size() == 1) return fppoly::to_string(a.num, K_);
  return "(" + fppoly::to_string(a.num, K_) + ")/(" + fppoly::to_string(a.den, K_) + ")";
}

FptElem reduce_mod(const QtElem& a, const FptField& L) {
  const PrimeField& K = L.base();
  FpPoly den = zpoly::reduce_mod(a.den, K);
  if (den.empty()) throw DegenerateEvaluation("denominator vanishes modulo p");
  return L.make(zpoly::reduce_mod(a.num, K), std::move(den));
}

}  // namespace tel
