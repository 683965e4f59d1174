#include "telescoper/picardfuchs/operator.hpp"

#include <algorithm>
#include <sstream>

#include "telescoper/errors.hpp"

namespace tel {

namespace {

int valuation(const ZPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

ZPoly shift(const ZPoly& a, int s) {
  if (a.empty()) return {};
  if (s >= 0) {
    ZPoly r(s, mpz_class(0));
    r.insert(r.end(), a.begin(), a.end());
    return r;
  }
  return ZPoly(a.begin() + (-s), a.end());
}

// gcd of a list of polynomials in Z[t], content included.
ZPoly common_gcd(const std::vector<ZPoly>& v) {
  ZPoly g;
  for (const auto& a : v) {
    if (a.empty()) continue;
    g = g.empty() ? (a.back() < 0 ? zpoly::neg(a) : a) : zpoly::gcd(g, a);
    if (zpoly::is_one(g)) break;
  }
  return g;
}

ZPoly falling_factorial(int k, const std::vector<std::vector<mpz_class>>& s1) {
  ZPoly r(s1[k].begin(), s1[k].begin() + k + 1);
  zpoly::trim(r);
  return r;
}

}  // namespace

int DiffOperator::degree() const {
  int d = -1;
  for (const auto& c : coeffs) d = std::max(d, zpoly::degree(c));
  return d;
}

int ThetaOperator::order() const {
  int d = -1;
  for (const auto& r : rows) d = std::max(d, zpoly::degree(r));
  return d;
}

std::vector<std::vector<mpz_class>> stirling_first(int kmax) {
  std::vector<std::vector<mpz_class>> s(kmax + 1, std::vector<mpz_class>(kmax + 1, 0));
  s[0][0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    for (int i = 1; i <= k; ++i) s[k][i] = s[k - 1][i - 1] - (k - 1) * s[k - 1][i];
  }
  return s;
}

std::vector<std::vector<mpz_class>> stirling_second(int kmax) {
  std::vector<std::vector<mpz_class>> S(kmax + 1, std::vector<mpz_class>(kmax + 1, 0));
  S[0][0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    for (int i = 1; i <= k; ++i) S[k][i] = S[k - 1][i - 1] + i * S[k - 1][i];
  }
  return S;
}

DiffOperator normalize_operator(std::vector<ZPoly> coeffs) {
  for (auto& c : coeffs) zpoly::trim(c);
  while (!coeffs.empty() && coeffs.back().empty()) coeffs.pop_back();
  if (coeffs.empty()) throw Error("normalize_operator: zero operator");
  ZPoly g = common_gcd(coeffs);
  for (auto& c : coeffs) {
    if (c.empty()) continue;
    ZPoly q;
    zpoly::divexact(c, g, q);
    c = std::move(q);
  }
  if (coeffs.back().back() < 0) {
    for (auto& c : coeffs) c = zpoly::neg(c);
  }
  return DiffOperator{std::move(coeffs)};
}

DiffOperator normalize_operator(const std::vector<QtElem>& coeffs) {
  ZPoly l{mpz_class(1)};
  for (const auto& c : coeffs) {
    if (c.num.empty()) continue;
    ZPoly g = zpoly::gcd(l, c.den);
    ZPoly q;
    zpoly::divexact(c.den, g, q);
    l = zpoly::mul(l, q);
  }
  std::vector<ZPoly> out;
  for (const auto& c : coeffs) {
    if (c.num.empty()) {
      out.emplace_back();
      continue;
    }
    ZPoly q;
    zpoly::divexact(l, c.den, q);
    out.push_back(zpoly::mul(c.num, q));
  }
  return normalize_operator(std::move(out));
}

ThetaOperator to_theta(const DiffOperator& L) {
  const int m = L.order();
  int e = 0;
  for (int k = 0; k <= m; ++k) {
    if (!L.coeffs[k].empty()) e = std::max(e, k - valuation(L.coeffs[k]));
  }
  auto s1 = stirling_first(std::max(m, 0));
  std::vector<ZPoly> rows;
  for (int k = 0; k <= m; ++k) {
    if (L.coeffs[k].empty()) continue;
    ZPoly c = shift(L.coeffs[k], e - k);
    ZPoly ff = falling_factorial(k, s1);
    if (rows.size() < c.size()) rows.resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) rows[j] = zpoly::add(rows[j], zpoly::scale(ff, c[j]));
    }
  }
  std::size_t lo = 0;
  while (lo < rows.size() && rows[lo].empty()) ++lo;
  rows.erase(rows.begin(), rows.begin() + lo);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  mpz_class c;
  for (const auto& r : rows) c = gcd(c, zpoly::content(r));
  if (c != 0 && c != 1) {
    for (auto& r : rows) {
      for (auto& x : r) x /= c;
    }
  }
  if (!rows.empty() && rows.front().back() < 0) {
    for (auto& r : rows) r = zpoly::neg(r);
  }
  return ThetaOperator{std::move(rows)};
}

DiffOperator from_theta(const ThetaOperator& T) {
  const int m = T.order();
  if (m < 0) throw Error("from_theta: zero operator");
  auto S = stirling_second(m);
  std::vector<ZPoly> a(m + 1);
  for (std::size_t j = 0; j < T.rows.size(); ++j) {
    const ZPoly& P = T.rows[j];
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (P[i] == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        if (S[i][k] == 0) continue;
        ZPoly term(j + k + 1, mpz_class(0));
        term[j + k] = P[i] * S[i][k];
        a[k] = zpoly::add(a[k], term);
      }
    }
  }
  return normalize_operator(std::move(a));
}

std::vector<std::uint32_t> eval_mod(const DiffOperator& L, std::uint32_t u, const PrimeField& K) {
  std::vector<std::uint32_t> out;
  for (const auto& c : L.coeffs) out.push_back(zpoly::eval_mod(c, u, K));
  return out;
}

std::string to_string(const DiffOperator& L) {
  std::ostringstream os;
  bool first = true;
  for (int k = L.order(); k >= 0; --k) {
    if (L.coeffs[k].empty()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << zpoly::to_string(L.coeffs[k]) << ")";
    if (k == 1) os << "*D";
    if (k > 1) os << "*D^" << k;
  }
  return first ? "0" : os.str();
}

std::string to_string(const ThetaOperator& T) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < T.rows.size(); ++j) {
    if (T.rows[j].empty()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 1) os << "t*";
    if (j > 1) os << "t^" << j << "*";
    os << "(" << zpoly::to_string(T.rows[j], "theta") << ")";
  }
  return first ? "0" : os.str();
}

std::vector<mpz_class> theta_residues(const ThetaOperator& T, const std::vector<mpz_class>& s) {
  std::vector<mpz_class> res(s.size(), 0);
  for (std::size_t m = 0; m < s.size(); ++m) {
    for (std::size_t j = 0; j < T.rows.size() && j <= m; ++j) {
      if (T.rows[j].empty() || s[m - j] == 0) continue;
      res[m] += zpoly::eval(T.rows[j], mpz_class(static_cast<unsigned long>(m - j))) * s[m - j];
    }
  }
  return res;
}

bool operator_annihilates_series(const ThetaOperator& T, const std::vector<mpz_class>& s, int guard) {
  const long need = static_cast<long>(T.order()) + static_cast<long>(T.rows.size()) - 1 + guard;
  if (static_cast<long>(s.size()) <= need) {
    throw InsufficientTerms("series prefix of length " + std::to_string(s.size()) + " is too short, need more than " +
                            std::to_string(need));
  }
  for (const auto& r : theta_residues(T, s)) {
    if (r != 0) return false;
  }
  return true;
}

bool operator_annihilates_series(const DiffOperator& L, const std::vector<mpz_class>& s, int guard) {
  return operator_annihilates_series(to_theta(L), s, guard);
}

}  // namespace tel
