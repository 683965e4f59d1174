#include "telescoper/algebra/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace tel {

namespace zpoly {

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

bool is_one(const ZPoly& a) { return a.size() == 1 && a[0] == 1; }

ZPoly constant(const mpz_class& c) {
  if (sgn(c) == 0) return {};
  return {c};
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly neg(const ZPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (sgn(c) == 0) return {};
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& a) {
  if (a.empty()) return {};
  mpz_class c = content(a);
  if (c == 1) return a;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

bool divexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw Error("zpoly::divexact: division by zero");
  q.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  const int db = degree(b);
  q.assign(a.size() - b.size() + 1, mpz_class(0));
  const mpz_class& lb = b.back();
  mpz_class c, rem;
  for (int i = degree(r); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    if (sgn(rem) != 0) return false;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (const auto& x : r) {
    if (sgn(x) != 0) return false;
  }
  trim(q);
  return true;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw Error("zpoly::pseudo_rem: division by zero");
  ZPoly r = a;
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (degree(r) >= db) {
    const int dr = degree(r);
    mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[dr - db + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
  }
  return r;
}

namespace {

ZPoly normalize_sign(ZPoly a) {
  if (!a.empty() && sgn(a.back()) < 0) {
    for (auto& x : a) x = -x;
  }
  return a;
}

ZPoly gcd_prs(ZPoly a, ZPoly b) {
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  a = primitive(a);
  b = primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return normalize_sign(scale(primitive(a), c));
}

ZPoly interpolate_digits(mpz_class h, const mpz_class& x) {
  ZPoly f;
  mpz_class half = x / 2, g;
  while (sgn(h) != 0) {
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    f.push_back(g);
    h = (h - g) / x;
  }
  trim(f);
  return f;
}

mpz_class max_norm(const ZPoly& a) {
  mpz_class m = 0;
  for (const auto& c : a) {
    mpz_class v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate at a large integer,
// take the integer gcd, reinterpret its balanced digits as a polynomial.
bool gcd_heuristic(const ZPoly& f0, const ZPoly& g0, ZPoly& out) {
  mpz_class common;
  mpz_gcd(common.get_mpz_t(), content(f0).get_mpz_t(), content(g0).get_mpz_t());
  ZPoly f = f0, g = g0;
  if (common != 1) {
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), common.get_mpz_t());
    for (auto& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), common.get_mpz_t());
  }
  mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class B = 2 * std::min(fn, gn) + 29;
  mpz_class sB = sqrt(B);
  mpz_class x = std::max(mpz_class(std::min(B, mpz_class(99 * sB))),
                         mpz_class(2 * std::min(mpz_class(fn / abs(f.back())), mpz_class(gn / abs(g.back()))) + 2));
  for (int iter = 0; iter < 6; ++iter) {
    mpz_class ff = eval(f, x), gg = eval(g, x);
    if (sgn(ff) != 0 && sgn(gg) != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
      ZPoly hp = primitive(interpolate_digits(h, x));
      ZPoly q;
      if (!hp.empty() && divexact(f, hp, q) && divexact(g, hp, q)) {
        out = normalize_sign(scale(hp, common));
        return true;
      }
      ZPoly cff = interpolate_digits(ff / h, x);
      ZPoly hh;
      if (!cff.empty() && divexact(f, cff, hh) && !hh.empty() && divexact(g, hh, q)) {
        out = normalize_sign(scale(hh, common));
        return true;
      }
      ZPoly cfg = interpolate_digits(gg / h, x);
      if (!cfg.empty() && divexact(g, cfg, hh) && !hh.empty() && divexact(f, hh, q)) {
        out = normalize_sign(scale(hh, common));
        return true;
      }
    }
    mpz_class s = sqrt(sqrt(x));
    x = 73794 * x * s / 27011;
  }
  return false;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return normalize_sign(b);
  if (b.empty()) return normalize_sign(a);
  if (degree(a) == 0 || degree(b) == 0) {
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    return {c};
  }
  ZPoly out;
  if (gcd_heuristic(a, b, out)) return out;
  return gcd_prs(a, b);
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

mpz_class eval(const ZPoly& a, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

std::uint32_t eval_mod(const ZPoly& a, std::uint32_t x, const PrimeField& K) {
  std::uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), K.from_mpz(a[i]));
  return r;
}

FpPoly reduce_mod(const ZPoly& a, const PrimeField& K) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.from_mpz(a[i]);
  fppoly::trim(r);
  return r;
}

std::string to_string(const ZPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (sgn(a[i]) == 0) continue;
    mpz_class c = a[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    if (i == 0 || c != 1) {
      os << c.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace zpoly

namespace fppoly {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly add(const FpPoly& a, const FpPoly& b, const PrimeField& K) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  trim(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, const PrimeField& K) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  trim(r);
  return r;
}

FpPoly neg(const FpPoly& a, const PrimeField& K) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.neg(a[i]);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& K) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = K.modulus();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  // Lazy reduction: each product is < 2^62, reduce before the sum can overflow.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (acc[i + j] >= (1ULL << 63)) acc[i + j] %= p;
    }
  }
  FpPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p);
  trim(r);
  return r;
}

FpPoly scale(const FpPoly& a, std::uint32_t c, const PrimeField& K) {
  if (c == 0) return {};
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], c);
  return r;
}

void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, const PrimeField& K) {
  if (b.empty()) throw Error("fppoly::divrem: division by zero");
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  const int db = degree(b);
  const std::uint32_t ilb = K.inv(b.back());
  for (int i = degree(r); i >= db; --i) {
    if (r[i] == 0) continue;
    std::uint32_t c = K.mul(r[i], ilb);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = K.sub(r[i - db + j], K.mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

FpPoly rem(const FpPoly& a, const FpPoly& b, const PrimeField& K) {
  FpPoly q, r;
  divrem(a, b, q, r, K);
  return r;
}

FpPoly quo(const FpPoly& a, const FpPoly& b, const PrimeField& K) {
  FpPoly q, r;
  divrem(a, b, q, r, K);
  return q;
}

FpPoly monic(const FpPoly& a, const PrimeField& K) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, K.inv(a.back()), K);
}

FpPoly gcd(const FpPoly& a0, const FpPoly& b0, const PrimeField& K) {
  FpPoly a = a0, b = b0;
  while (!b.empty()) {
    FpPoly r = rem(a, b, K);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, K);
}

FpPoly derivative(const FpPoly& a, const PrimeField& K) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], K.from_int(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

std::uint32_t eval(const FpPoly& a, std::uint32_t x, const PrimeField& K) {
  std::uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
  return r;
}

std::string to_string(const FpPoly& a, const PrimeField& K, const std::string& var) {
  ZPoly z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = static_cast<long>(K.signed_value(a[i]));
  return zpoly::to_string(z, var);
}

}  // namespace fppoly

}  // namespace tel
