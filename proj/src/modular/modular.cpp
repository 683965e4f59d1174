#include "telescoper/modular/modular.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "telescoper/errors.hpp"
#include "telescoper/modular/reconstruct.hpp"
#include "telescoper/picardfuchs/driver.hpp"
#include "telescoper/reduction/engine.hpp"

namespace tel {

namespace {

using FpPolyM = Poly<PrimeField>;

FpPolyM specialize(const QtPoly& a, const PrimeField& K, std::uint32_t u, bool strict) {
  QtField Q;
  FpPolyM out;
  out.terms.reserve(a.size());
  for (const auto& t : a.terms) {
    std::uint32_t c = Q.eval_mod(t.c, u, K);
    if (c == 0) {
      if (strict) throw DegenerateEvaluation("a coefficient of f vanishes at the evaluation point");
      continue;
    }
    out.terms.push_back({t.m, c});
  }
  return out;
}

bool same_support(const PointImage& a, const PointImage& b) {
  if (a.basis.size() != b.basis.size() || a.frontier != b.frontier) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    if (a.basis[i] != b.basis[i]) return false;
  }
  return true;
}

struct Shape {
  std::vector<std::pair<int, int>> degs;
  bool operator<(const Shape& o) const { return degs < o.degs; }
};

Shape shape_of(const std::vector<FptElem>& rel) {
  Shape s;
  for (const auto& a : rel) s.degs.push_back({fppoly::degree(a.num), fppoly::degree(a.den)});
  return s;
}

// Lifts same-shape residue relations to Q(t); throws NoReconstruction.
std::vector<QtElem> lift_relation(const std::vector<std::vector<FptElem>>& rels,
                                  const std::vector<std::uint32_t>& primes) {
  QtField Q;
  std::vector<QtElem> out;
  const std::size_t m = rels[0].size();
  std::vector<std::uint32_t> res(primes.size());
  auto lift_poly = [&](std::size_t k, bool num, mpz_class& lcm_den) {
    const std::size_t len = (num ? rels[0][k].num : rels[0][k].den).size();
    std::vector<mpq_class> c(len);
    lcm_den = 1;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < primes.size(); ++j) res[j] = (num ? rels[j][k].num : rels[j][k].den)[i];
      c[i] = crt_and_ratrec(res, primes);
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c[i].get_den_mpz_t());
    }
    ZPoly z(len);
    for (std::size_t i = 0; i < len; ++i) z[i] = c[i].get_num() * (lcm_den / c[i].get_den());
    return z;
  };
  for (std::size_t k = 0; k < m; ++k) {
    if (rels[0][k].num.empty()) {
      out.push_back(Q.zero());
      continue;
    }
    mpz_class ln, ld;
    ZPoly zn = lift_poly(k, true, ln);
    ZPoly zd = lift_poly(k, false, ld);
    out.push_back(Q.make(zpoly::scale(zn, ld), zpoly::scale(zd, ln)));
  }
  return out;
}

bool matches(const std::vector<QtElem>& lifted, const std::vector<FptElem>& rel, const FptField& L) {
  if (lifted.size() != rel.size()) return false;
  for (std::size_t k = 0; k < rel.size(); ++k) {
    if (!L.equal(reduce_mod(lifted[k], L), rel[k])) return false;
  }
  return true;
}

}  // namespace

PointImage point_image(const HomogeneousIntegrand& H, int r, const PrimeField& K, std::uint32_t u,
                       std::size_t max_basis) {
  QtField Q;
  FpPolyM fu = specialize(H.f, K, u, true);
  FpPolyM fdu = specialize(poly::coeff_derivative(Q, H.f), K, u, false);
  FpPolyM au = specialize(H.a, K, u, false);
  ReductionEngine<PrimeField> E(K, fu, H.nvars);
  const FormContext& ctx = E.ctx();

  TopForm<PrimeField> rho0 = E.reduce_r(au, r);
  std::unordered_map<Monomial, int, MonomialHash> index;
  std::vector<Monomial> mons;
  std::vector<TopForm<PrimeField>> images;
  auto add = [&](const Monomial& m) {
    if (index.emplace(m, static_cast<int>(mons.size())).second) {
      mons.push_back(m);
      if (mons.size() > max_basis) throw ResourceError("reduction basis exceeds max_basis");
    }
  };
  for (const auto& t : rho0.terms) add(t.m);
  std::vector<char> front;
  for (std::size_t j = 0; j < mons.size(); ++j) {
    const int q = ctx.pole_of_top_degree(static_cast<int>(mons[j].deg));
    front.push_back(q > E.n());
    if (front.back()) {
      images.emplace_back();
      continue;
    }
    images.push_back(E.reduce_r(poly::mul_term(K, fdu, mons[j], K.one()), r));
    for (const auto& t : images.back().terms) add(t.m);
  }

  std::vector<int> order(mons.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return grevlex_cmp(mons[a], mons[b]) > 0; });
  std::vector<int> where(mons.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);

  PointImage P;
  P.u = u;
  P.basis.resize(mons.size());
  P.frontier.resize(mons.size());
  P.rho0.assign(mons.size(), 0);
  P.cols.resize(mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    const int w = where[j];
    P.basis[w] = mons[j];
    P.frontier[w] = front[j];
    for (const auto& t : images[j].terms) P.cols[w].push_back({where[index.at(t.m)], t.c});
    std::sort(P.cols[w].begin(), P.cols[w].end());
  }
  for (const auto& t : rho0.terms) P.rho0[where[index.at(t.m)]] = t.c;
  return P;
}

ModularSnapshot delta_matrix(const HomogeneousIntegrand& H, int r, std::uint32_t p, const ModularOptions& opt,
                             std::mt19937_64& rng) {
  PrimeField K(p);
  FptField L(K);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> us;
  std::set<std::uint32_t> seen;
  std::vector<std::optional<PointImage>> imgs;
  int want = std::max(opt.initial_points, opt.quorum);

  while (true) {
    const std::size_t old = us.size();
    while (us.size() < static_cast<std::size_t>(want) + 1) {
      std::uint32_t u = dist(rng);
      if (seen.insert(u).second) us.push_back(u);
    }
    imgs.resize(us.size());
    std::exception_ptr failure;
    const long total = static_cast<long>(us.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (long i = static_cast<long>(old); i < total; ++i) {
      try {
        imgs[i] = point_image(H, r, K, us[i], opt.max_basis);
      } catch (const DegenerateEvaluation&) {
        imgs[i].reset();
      } catch (...) {
#pragma omp critical(tel_modular_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    // Majority support among the non-degenerate points.
    std::vector<int> valid;
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      if (imgs[i]) valid.push_back(static_cast<int>(i));
    }
    std::vector<int> group;
    for (int i : valid) {
      std::vector<int> g;
      for (int j : valid) {
        if (same_support(*imgs[i], *imgs[j])) g.push_back(j);
      }
      if (g.size() > group.size()) group = std::move(g);
      if (group.size() * 2 > valid.size()) break;
    }
    const bool quorate = group.size() * 2 > valid.size() && static_cast<int>(group.size()) >= opt.quorum;
    if (!quorate) {
      if (want >= opt.max_points) throw SupportDisagreement("no majority support among the evaluation points");
      want *= 2;
      continue;
    }

    // The last agreeing point is withheld for confirmation.
    const PointImage& ref = *imgs[group.front()];
    const PointImage& held = *imgs[group.back()];
    std::vector<int> interp(group.begin(), group.end() - 1);
    const std::size_t n = ref.basis.size();
    const std::size_t k = interp.size();
    std::vector<std::uint32_t> xs;
    for (int i : interp) xs.push_back(us[i]);

    // Entry (col, row) -> values at the interpolation points, plus the withheld value.
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> entries;
    auto slot = [&](int c, int row) -> std::vector<std::uint32_t>& {
      auto it = entries.find({c, row});
      if (it == entries.end()) it = entries.emplace(std::make_pair(c, row), std::vector<std::uint32_t>(k + 1, 0)).first;
      return it->second;
    };
    for (std::size_t s = 0; s <= k; ++s) {
      const PointImage& P = s < k ? *imgs[interp[s]] : held;
      for (std::size_t j = 0; j < n; ++j) {
        if (P.rho0[j]) slot(-1, static_cast<int>(j))[s] = P.rho0[j];
        for (const auto& [row, v] : P.cols[j]) slot(static_cast<int>(j), row)[s] = v;
      }
    }
    std::vector<std::pair<std::pair<int, int>, std::vector<std::uint32_t>>> flat(entries.begin(), entries.end());
    std::vector<FptElem> vals(flat.size());
    int bad = 0;
#pragma omp parallel for schedule(dynamic) if (opt.parallel) reduction(+ : bad)
    for (long e = 0; e < static_cast<long>(flat.size()); ++e) {
      const auto& v = flat[e].second;
      try {
        std::vector<std::uint32_t> ys(v.begin(), v.begin() + k);
        FptElem x = cauchy_interpolate(K, xs, ys);
        // One spare degree of freedom inside the interpolation set.
        if (fppoly::degree(x.num) + fppoly::degree(x.den) + 2 > static_cast<int>(k) || L.eval(x, held.u) != v[k]) {
          ++bad;
        } else {
          vals[e] = std::move(x);
        }
      } catch (const Error&) {
        ++bad;
      }
    }
    if (bad) {
      if (want >= opt.max_points) throw InterpolationDegreeExceeded("rational interpolation needs more than max_points points");
      want *= 2;
      continue;
    }

    ModularSnapshot S;
    S.p = p;
    S.basis = ref.basis;
    S.frontier = ref.frontier;
    S.rho0.assign(n, L.zero());
    S.cols.resize(n);
    for (std::size_t e = 0; e < flat.size(); ++e) {
      const auto [c, row] = flat[e].first;
      if (L.is_zero(vals[e])) continue;
      if (c < 0) {
        S.rho0[row] = std::move(vals[e]);
      } else {
        S.cols[c].push_back({row, std::move(vals[e])});
      }
    }
    S.points_used = static_cast<int>(us.size());
    return S;
  }
}

std::optional<std::vector<FptElem>> relation_from_snapshot(const ModularSnapshot& S, int max_order) {
  FptField L{PrimeField(S.p)};
  const std::size_t n = S.basis.size();
  std::vector<FptElem> rho = S.rho0;
  DependenceFinder<FptField> dep(L);
  for (int m = 0;; ++m) {
    Poly<FptField> v;
    for (std::size_t j = 0; j < n; ++j) {
      if (L.is_zero(rho[j])) continue;
      if (S.frontier[j]) return std::nullopt;
      v.terms.push_back({S.basis[j], rho[j]});
    }
    if (auto rel = dep.insert(v)) return rel;
    if (m >= max_order) throw ResourceError("no relation found up to the maximal order");
    std::vector<FptElem> next(n);
    for (std::size_t j = 0; j < n; ++j) next[j] = L.derive(rho[j]);
    for (std::size_t j = 0; j < n; ++j) {
      if (L.is_zero(rho[j])) continue;
      for (const auto& [i, b] : S.cols[j]) L.sub_mul_to(next[i], b, rho[j]);
    }
    rho = std::move(next);
  }
}

ModularResult picard_fuchs_modular(const HomogeneousIntegrand& H, const ModularOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  detail::Deadline dl(opt.budget_seconds);
  std::vector<std::uint32_t> used;
  auto fresh_prime = [&] {
    std::uint32_t p = random_primes(opt.prime_bits, 1, rng, used)[0];
    used.push_back(p);
    return p;
  };

  for (int r = opt.r_start; r <= opt.max_r; ++r) {
    std::size_t basis_size = 0;
    int points = 0;
    // nullopt on escape; throws DegenerateEvaluation on unlucky primes.
    auto residue = [&](std::uint32_t p) {
      dl.check();
      ModularSnapshot S = delta_matrix(H, r, p, opt, rng);
      basis_size = S.basis.size();
      points = std::max(points, S.points_used);
      return relation_from_snapshot(S, opt.max_order);
    };
    // Next usable prime with its residue; false on escape.
    auto next_residue = [&](std::uint32_t& p, std::vector<FptElem>& rel) {
      for (int tries = 0;; ++tries) {
        p = fresh_prime();
        try {
          auto res = residue(p);
          if (!res) return false;
          rel = std::move(*res);
          return true;
        } catch (const DegenerateEvaluation&) {
          if (tries >= 8) throw;
        }
      }
    };

    std::vector<std::uint32_t> pool_p;
    std::vector<std::vector<FptElem>> pool;
    std::size_t target = opt.primes > 0 ? static_cast<std::size_t>(opt.primes) : 1;
    bool escaped = false;
    while (!escaped) {
      while (pool.size() < target) {
        std::uint32_t p;
        std::vector<FptElem> rel;
        if (!next_residue(p, rel)) {
          escaped = true;
          break;
        }
        if (opt.fault) opt.fault(pool.size(), rel, FptField(PrimeField(p)));
        pool_p.push_back(p);
        pool.push_back(std::move(rel));
      }
      if (escaped) break;

      // Majority shape across primes.
      std::map<Shape, std::vector<std::size_t>> shapes;
      for (std::size_t i = 0; i < pool.size(); ++i) shapes[shape_of(pool[i])].push_back(i);
      const std::vector<std::size_t>* best = nullptr;
      for (const auto& [s, idx] : shapes) {
        if (!best || idx.size() > best->size()) best = &idx;
      }
      std::vector<std::vector<FptElem>> rels;
      std::vector<std::uint32_t> ps;
      for (std::size_t i : *best) {
        rels.push_back(pool[i]);
        ps.push_back(pool_p[i]);
      }

      std::vector<QtElem> lifted;
      try {
        lifted = lift_relation(rels, ps);
      } catch (const NoReconstruction&) {
        if (opt.primes > 0 || static_cast<int>(pool.size()) >= opt.max_primes) throw;
        ++target;
        continue;
      }

      std::uint32_t pw;
      std::vector<FptElem> relw;
      if (!next_residue(pw, relw)) {
        escaped = true;
        break;
      }
      bool ok = false;
      try {
        ok = matches(lifted, relw, FptField(PrimeField(pw)));
      } catch (const DegenerateEvaluation&) {
        ok = false;
      }
      if (ok) {
        ModularResult out;
        out.op = normalize_operator(lifted);
        out.relation = std::move(lifted);
        out.r_used = r;
        out.primes = ps;
        out.confirmation_prime = pw;
        out.points_per_prime = points;
        out.basis_size = basis_size;
        return out;
      }
      if (opt.primes > 0 || static_cast<int>(pool.size()) + 1 >= opt.max_primes) {
        throw UnconfirmedReconstruction("the withheld prime disagrees with the reconstructed operator");
      }
      pool_p.push_back(pw);
      pool.push_back(std::move(relw));
      target = pool.size();
    }
  }
  throw ResourceError("reduction order exceeded max_r");
}

}  // namespace tel
