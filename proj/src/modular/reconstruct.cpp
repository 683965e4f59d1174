#include "telescoper/modular/reconstruct.hpp"

#include "telescoper/errors.hpp"

namespace tel {

FpPoly interpolate_poly(const PrimeField& K, const std::vector<std::uint32_t>& us,
                        const std::vector<std::uint32_t>& vs) {
  const std::size_t k = us.size();
  if (vs.size() != k) throw Error("interpolate_poly: size mismatch");
  // Divided differences in place.
  std::vector<std::uint32_t> c = vs;
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t i = k - 1; i >= j; --i) {
      std::uint32_t d = K.sub(us[i], us[i - j]);
      if (d == 0) throw Error("interpolate_poly: repeated evaluation point");
      c[i] = K.div(K.sub(c[i], c[i - 1]), d);
    }
  }
  FpPoly p;
  for (std::size_t i = k; i-- > 0;) {
    // p = p * (t - u_i) + c_i
    FpPoly q(p.size() + 1, 0);
    for (std::size_t e = 0; e < p.size(); ++e) {
      q[e + 1] = K.add(q[e + 1], p[e]);
      q[e] = K.sub(q[e], K.mul(p[e], us[i]));
    }
    if (q.empty()) q.push_back(0);
    q[0] = K.add(q[0], c[i]);
    p = std::move(q);
  }
  fppoly::trim(p);
  return p;
}

FptElem cauchy_interpolate(const PrimeField& K, const std::vector<std::uint32_t>& us,
                           const std::vector<std::uint32_t>& vs) {
  FptField L(K);
  FpPoly P = interpolate_poly(K, us, vs);
  if (P.empty()) return L.zero();
  FpPoly M{1u};
  for (auto u : us) M = fppoly::mul(M, FpPoly{K.neg(u), 1u}, K);

  FpPoly r0 = M, r1 = P, s0, s1{1u};
  FpPoly best_r = r1, best_s = s1;
  int best_q = fppoly::degree(r0) - fppoly::degree(r1);
  while (!r1.empty()) {
    FpPoly q, r2;
    fppoly::divrem(r0, r1, q, r2, K);
    if (fppoly::degree(q) > best_q) {
      best_q = fppoly::degree(q);
      best_r = r1;
      best_s = s1;
    }
    FpPoly s2 = fppoly::sub(s0, fppoly::mul(q, s1, K), K);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  for (auto u : us) {
    if (fppoly::eval(best_s, u, K) == 0) throw NoSolution("rational interpolant has a pole at an interpolation point");
  }
  return L.make(best_r, best_s);
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound = sqrt(mpz_class(m / 2));
  mpz_class r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  if (gcd(s1, m) != 1 || gcd(r1, s1) != 1) return std::nullopt;
  mpq_class x(r1, s1);
  x.canonicalize();
  return x;
}

mpz_class crt(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes) {
  if (residues.size() != primes.size() || primes.empty()) throw Error("crt: size mismatch");
  mpz_class x = residues[0], m = primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) {
    PrimeField K(primes[i]);
    std::uint32_t xm = K.from_mpz(x);
    std::uint32_t mm = K.from_mpz(m);
    std::uint32_t h = K.div(K.sub(residues[i], xm), mm);
    x += m * h;
    m *= primes[i];
  }
  return x;
}

mpq_class crt_and_ratrec(const std::vector<std::uint32_t>& residues, const std::vector<std::uint32_t>& primes) {
  mpz_class m = 1;
  for (auto p : primes) m *= p;
  auto x = rational_reconstruct(crt(residues, primes), m);
  if (!x) throw NoReconstruction("no rational number fits the residues within the modulus bound");
  return *x;
}

}  // namespace tel
