#include "telescoper/reduction/hermite.hpp"

#include "telescoper/errors.hpp"

namespace tel {

namespace qpoly {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) { return add(a, scale(b, -1)); }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (c == 0) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

QPoly integral(const QPoly& a) {
  if (a.empty()) return {};
  QPoly r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i] / static_cast<long>(i + 1);
  return r;
}

void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw Error("qpoly::divrem: division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t s = r.size() - b.size();
    mpq_class c = r.back() / b.back();
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[s + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    QPoly q, r2;
    divrem(r0, r1, q, r2);
    QPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  mpq_class lc = r0.back();
  s = scale(s0, 1 / lc);
  t = scale(t0, 1 / lc);
  return scale(r0, 1 / lc);
}

}  // namespace qpoly

HermiteResult hermite_reduce(const QPoly& a0, const QPoly& f, int q) {
  if (q < 1) throw Error("hermite_reduce: q must be at least 1");
  if (qpoly::degree(f) < 1) throw Error("hermite_reduce: f must be non-constant");
  const QPoly fp = qpoly::derivative(f);
  QPoly s, t;
  QPoly g = qpoly::xgcd(f, fp, s, t);
  if (g.size() > 1) throw NotSquarefree("hermite_reduce: f has a repeated factor");

  HermiteResult out;
  out.cert_power = q - 1;
  QPoly a = a0;
  QPoly fpow{1};  // f^(q-1-k) for the current exponent k
  for (int k = q; k > 1; --k) {
    // a = u f + v f' with deg v < deg f.
    QPoly quo, v, u;
    qpoly::divrem(qpoly::mul(a, t), f, quo, v);
    qpoly::divrem(qpoly::sub(a, qpoly::mul(v, fp)), f, u, quo);
    // v f'/f^k = -(v/((k-1) f^(k-1)))' + v'/((k-1) f^(k-1))
    mpq_class c(1, k - 1);
    out.cert_num = qpoly::sub(out.cert_num, qpoly::mul(qpoly::scale(v, c), fpow));
    a = qpoly::add(u, qpoly::scale(qpoly::derivative(v), c));
    fpow = qpoly::mul(fpow, f);
  }
  QPoly quo, rem;
  qpoly::divrem(a, f, quo, rem);
  out.cert_num = qpoly::add(out.cert_num, qpoly::mul(qpoly::integral(quo), fpow));
  out.numerator = std::move(rem);
  return out;
}

}  // namespace tel
