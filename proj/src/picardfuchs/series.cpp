#include "telescoper/picardfuchs/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "telescoper/algebra/prime_field.hpp"
#include "telescoper/errors.hpp"

namespace tel {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 reduce_mpz(const mpz_class& c, u64 p) {
  mpz_class r = c % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

mpz_class to_mpz(u64 v) { return mpz_class(std::to_string(v)); }

struct Box {
  int n = 0;
  std::vector<long> radius;  // coordinate i ranges over [-radius_i, radius_i]
  std::vector<long> stride;
  std::size_t cells = 1;
  long center = 0;  // linear index of the origin

  long index(const std::vector<long>& m) const {
    long idx = 0;
    for (int i = 0; i < n; ++i) idx += (m[i] + radius[i]) * stride[i];
    return idx;
  }
};

}  // namespace

std::vector<u64> series_primes(std::size_t count) {
  std::vector<u64> out;
  u64 c = (u64(1) << 62) - 1;
  while (out.size() < count) {
    if (is_prime_u64(c)) out.push_back(c);
    c -= 2;
  }
  return out;
}

std::vector<u64> constant_term_series_mod(const LaurentPoly& g, int terms, u64 p, const SeriesOptions& opt) {
  std::vector<u64> out(std::max(terms, 0), 0);
  if (terms <= 0) return out;
  out[0] = 1 % p;
  if (terms == 1) return out;
  const int n = g.nvars;
  std::vector<std::pair<std::vector<long>, u64>> gt;
  for (const auto& [e, c] : g.terms) {
    u64 cm = reduce_mpz(c, p);
    if (cm == 0) continue;
    gt.push_back({std::vector<long>(e.begin(), e.end()), cm});
  }
  if (gt.empty()) return out;
  const bool unit = std::all_of(gt.begin(), gt.end(), [](const auto& t) { return t.second == 1; });

  // Per-coordinate exponent range of g, widened to contain 0 so sub-boxes nest.
  std::vector<long> lo(n, 0), hi(n, 0);
  for (const auto& [e, c] : gt) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  }
  const long K = (terms - 1 + 1) / 2;
  Box B;
  B.n = n;
  B.radius.resize(n);
  B.stride.assign(n, 1);
  for (int i = 0; i < n; ++i) B.radius[i] = (K + 1) * std::max(-lo[i], hi[i]);
  for (int i = n - 1; i >= 0; --i) {
    if (i < n - 1) B.stride[i] = B.stride[i + 1] * (2 * B.radius[i + 1] + 1);
  }
  for (int i = 0; i < n; ++i) {
    if (B.cells > opt.max_cells / static_cast<std::size_t>(2 * B.radius[i] + 1)) {
      throw ResourceError("series box exceeds the cell budget");
    }
    B.cells *= static_cast<std::size_t>(2 * B.radius[i] + 1);
  }
  B.center = B.index(std::vector<long>(n, 0));

  std::vector<long> offs;
  std::vector<u64> coef;
  for (const auto& [e, c] : gt) {
    offs.push_back(B.index(e) - B.center);
    coef.push_back(c);
  }

  std::vector<u64> cur(B.cells, 0), nxt(B.cells, 0);
  cur[B.center] = 1 % p;

  // Rows of the sub-box at level k: all coordinates but the last, flattened.
  auto rows_of = [&](long k, std::vector<long>& lens) {
    lens.assign(n, 0);
    long rows = 1;
    for (int i = 0; i < n; ++i) {
      lens[i] = k * (hi[i] - lo[i]) + 1;
      if (i < n - 1) rows *= lens[i];
    }
    return rows;
  };
  auto row_start = [&](long k, const std::vector<long>& lens, long r) {
    std::vector<long> m(n);
    for (int i = n - 2; i >= 0; --i) {
      m[i] = k * lo[i] + r % lens[i];
      r /= lens[i];
    }
    m[n - 1] = k * lo[n - 1];
    return B.index(m);
  };

  // sum over the support of a of a(m) b(-m)
  auto pair_sum = [&](long k, const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<long> lens;
    const long rows = rows_of(k, lens);
    const long len = lens[n - 1];
    const long twoc = 2 * B.center;
    u64 total = 0;
#pragma omp parallel for if (opt.parallel) schedule(static)
    for (long r = 0; r < rows; ++r) {
      const long s = row_start(k, lens, r);
      u64 acc = 0;
      for (long x = 0; x < len; ++x) {
        const u64 av = a[s + x];
        if (av == 0) continue;
        acc = addmod(acc, mulmod(av, b[twoc - s - x], p), p);
      }
#pragma omp critical
      total = addmod(total, acc, p);
    }
    return total % p;
  };

  const int maxj = terms - 1;
  for (long k = 0;; ++k) {
    if (2 * k <= maxj) out[2 * k] = pair_sum(k, cur, cur);
    if (2 * k + 1 > maxj) break;
    // nxt = cur * g on sub-box(k + 1)
    std::vector<long> lens;
    const long rows = rows_of(k + 1, lens);
    const long len = lens[n - 1];
#pragma omp parallel for if (opt.parallel) schedule(static)
    for (long r = 0; r < rows; ++r) {
      const long s = row_start(k + 1, lens, r);
      u64* dst = nxt.data() + s;
      std::fill(dst, dst + len, 0);
      for (std::size_t v = 0; v < offs.size(); ++v) {
        const u64* src = cur.data() + s - offs[v];
        if (unit) {
          for (long x = 0; x < len; ++x) dst[x] = addmod(dst[x], src[x], p);
        } else {
          const u64 c = coef[v];
          for (long x = 0; x < len; ++x) dst[x] = addmod(dst[x], mulmod(c, src[x], p), p);
        }
      }
    }
    out[2 * k + 1] = pair_sum(k + 1, nxt, cur);
    std::swap(cur, nxt);
  }
  return out;
}

std::vector<mpz_class> constant_term_series(const LaurentPoly& g, int terms, const SeriesOptions& opt) {
  std::vector<mpz_class> out(std::max(terms, 0));
  if (terms <= 0) return out;
  // |ct(g^k)| <= (sum |c|)^k
  mpz_class l1 = 0;
  for (const auto& [e, c] : g.terms) l1 += abs(c);
  mpz_class bound = 1;
  for (int k = 1; k < terms; ++k) bound *= std::max(l1, mpz_class(1));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
  const std::size_t nprimes = std::max<std::size_t>(1, (bits + 60) / 61);
  auto primes = series_primes(nprimes);
  std::vector<std::vector<u64>> res;
  for (u64 p : primes) res.push_back(constant_term_series_mod(g, terms, p, opt));
  for (int j = 0; j < terms; ++j) {
    mpz_class x = 0, M = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      mpz_class p = to_mpz(primes[i]);
      mpz_class r = to_mpz(res[i][j]);
      // x += M * ((r - x) / M mod p)
      mpz_class d = (r - x) % p;
      if (d < 0) d += p;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), mpz_class(M % p).get_mpz_t(), p.get_mpz_t());
      mpz_class k = d * inv % p;
      x += M * k;
      M *= p;
    }
    if (2 * x > M) x -= M;
    out[j] = x;
  }
  return out;
}

std::vector<mpz_class> constant_term_series_reference(const LaurentPoly& g, int terms) {
  std::vector<mpz_class> out;
  std::map<std::vector<int>, mpz_class> A;
  A[std::vector<int>(g.nvars, 0)] = 1;
  for (int k = 0; k < terms; ++k) {
    auto it = A.find(std::vector<int>(g.nvars, 0));
    out.push_back(it == A.end() ? mpz_class(0) : it->second);
    if (k + 1 == terms) break;
    std::map<std::vector<int>, mpz_class> B;
    for (const auto& [m, a] : A) {
      for (const auto& [e, c] : g.terms) {
        std::vector<int> s(m);
        for (int i = 0; i < g.nvars; ++i) s[i] += e[i];
        B[s] += a * c;
      }
    }
    for (auto jt = B.begin(); jt != B.end();) {
      jt = jt->second == 0 ? B.erase(jt) : std::next(jt);
    }
    A = std::move(B);
  }
  return out;
}

}  // namespace tel
