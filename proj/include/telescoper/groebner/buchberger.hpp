#pragma once

#include <climits>
#include <cstddef>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "telescoper/errors.hpp"
#include "telescoper/groebner/module.hpp"

namespace tel {

// Buchberger's algorithm for submodules of a free module of rank `rank`
// (ideals are rank 1). Gebauer-Moeller pair elimination, normal strategy,
// and degree truncation: compute(D) finishes every pair whose lcm has
// weighted degree <= D and can be resumed later with a larger D. With
// homogeneous input the basis is then exact in all degrees <= D.
template <class F>
class ModuleGB {
 public:
  using Elem = typename F::Elem;

  ModuleGB(F K, ModuleOrder ord, int rank, std::vector<int> weights = {})
      : K_(std::move(K)), ord_(ord), rank_(rank), weights_(std::move(weights)), by_pos_(rank) {
    if (weights_.empty()) weights_.assign(rank, 0);
  }

  const F& field() const { return K_; }
  const ModuleOrder& order() const { return ord_; }
  int rank() const { return rank_; }

  // Upper bound on S-polynomial reductions before ResourceError; 0 means unlimited.
  void set_step_budget(std::size_t steps) { budget_ = steps; }
  std::size_t steps() const { return steps_; }

  void add_generator(const ModulePoly<F>& g) {
    if (g.is_zero()) return;
    for (const auto& t : g.terms) {
      if (wdeg(t.pos, t.m) != wdeg(g.lead().pos, g.lead().m)) homogeneous_ = false;
    }
    Pair p;
    p.i = -1;
    p.j = static_cast<int>(pending_gens_.size());
    p.pos = g.lead().pos;
    p.lcm = g.lead().m;
    p.wdeg = wdeg(p.pos, p.lcm);
    pending_gens_.push_back(g);
    pairs_.push_back(p);
  }

  // Process all pending pairs and generators up to weighted degree max_wdeg.
  void compute(long max_wdeg = LONG_MAX) {
    long min_new = LONG_MAX;
    while (true) {
      int best = -1;
      for (int k = 0; k < static_cast<int>(pairs_.size()); ++k) {
        const Pair& p = pairs_[k];
        if (p.wdeg > max_wdeg) continue;
        if (best < 0 || pair_less(p, pairs_[best])) best = k;
      }
      if (best < 0) break;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ModulePoly<F> h = p.i < 0 ? pending_gens_[p.j] : spoly(p.i, p.j);
      if (p.i < 0) pending_gens_[p.j] = ModulePoly<F>{};
      ++steps_;
      if (budget_ && steps_ > budget_) throw ResourceError("Groebner basis step budget exceeded");
      h = reduce(h);
      if (h.is_zero()) continue;
      make_monic(h);
      min_new = std::min(min_new, wdeg(h.lead().pos, h.lead().m));
      insert(std::move(h));
    }
    if (min_new != LONG_MAX) interreduce(min_new);
    done_deg_ = std::max(done_deg_, max_wdeg);
  }

  bool complete() const { return pairs_.empty(); }
  long completed_degree() const { return pairs_.empty() ? LONG_MAX : done_deg_; }

  // Active (reduced) basis elements in insertion order.
  std::vector<const ModulePoly<F>*> elements() const {
    std::vector<const ModulePoly<F>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  const ModulePoly<F>& poly(int idx) const { return polys_[idx]; }

  // Index of the first active element whose leading term divides x^m e_pos, or -1.
  int find_divisor(int pos, const Monomial& m) const {
    for (const auto& li : by_pos_[pos]) {
      if (li.m.divides(m)) return li.idx;
    }
    return -1;
  }

  // Full normal form of h with respect to the active basis.
  ModulePoly<F> reduce(const ModulePoly<F>& h) const {
    return reduce_impl(h, -1);
  }

  long wdeg(int pos, const Monomial& m) const { return static_cast<long>(m.deg) + weights_[pos]; }

 private:
  struct Pair {
    int i, j;  // i < 0 marks a pending generator with index j
    int pos;
    Monomial lcm;
    long wdeg;
  };
  struct LeadInfo {
    Monomial m;
    int idx;
  };
  struct Key {
    int pos;
    Monomial m;
    bool operator==(const Key& o) const { return pos == o.pos && m == o.m; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return MonomialHash{}(k.m) ^ (static_cast<std::size_t>(k.pos) * 0x51ED27ULL);
    }
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
    int c = ord_.cmp(a.pos, a.lcm, b.pos, b.lcm);
    if (c != 0) return c < 0;
    // Generators first, then older pairs.
    if ((a.i < 0) != (b.i < 0)) return a.i < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void make_monic(ModulePoly<F>& h) const {
    if (K_.is_one(h.lead().c)) return;
    Elem inv = K_.inv(h.lead().c);
    for (auto& t : h.terms) t.c = K_.mul(t.c, inv);
  }

  ModulePoly<F> spoly(int i, int j) const {
    const auto& a = polys_[i];
    const auto& b = polys_[j];
    Monomial l = a.lead().m.lcm(b.lead().m);
    ModulePoly<F> sa = mpoly::mul_term(K_, a, l / a.lead().m, K_.one());
    ModulePoly<F> sb = mpoly::mul_term(K_, b, l / b.lead().m, K_.neg(K_.one()));
    return mpoly::add(K_, ord_, sa, sb);
  }

  ModulePoly<F> reduce_impl(const ModulePoly<F>& h, int skip) const {
    ModulePoly<F> out;
    if (h.is_zero()) return out;
    auto less = [this](const Key& a, const Key& b) { return ord_.cmp(a.pos, a.m, b.pos, b.m) < 0; };
    std::priority_queue<Key, std::vector<Key>, decltype(less)> heap(less);
    std::unordered_map<Key, Elem, KeyHash> acc;
    acc.reserve(h.size() * 2);
    for (const auto& t : h.terms) {
      Key k{t.pos, t.m};
      auto it = acc.find(k);
      if (it == acc.end()) {
        acc.emplace(k, t.c);
        heap.push(k);
      } else {
        K_.add_to(it->second, t.c);
      }
    }
    while (!heap.empty()) {
      Key k = heap.top();
      heap.pop();
      auto it = acc.find(k);
      if (it == acc.end()) continue;
      Elem c = std::move(it->second);
      acc.erase(it);
      if (K_.is_zero(c)) continue;
      int d = -1;
      for (const auto& li : by_pos_[k.pos]) {
        if (li.idx != skip && li.m.divides(k.m)) {
          d = li.idx;
          break;
        }
      }
      if (d < 0) {
        out.terms.push_back({k.pos, k.m, std::move(c)});
        continue;
      }
      const auto& g = polys_[d];
      Monomial q = k.m / g.lead().m;
      for (std::size_t s = 1; s < g.size(); ++s) {
        const auto& t = g.terms[s];
        Key nk{t.pos, t.m * q};
        auto jt = acc.find(nk);
        if (jt == acc.end()) {
          acc.emplace(nk, K_.neg(K_.mul(c, t.c)));
          heap.push(nk);
        } else {
          K_.sub_mul_to(jt->second, c, t.c);
        }
      }
    }
    return out;
  }

  void insert(ModulePoly<F> h) {
    const int hi = static_cast<int>(polys_.size());
    const int pos = h.lead().pos;
    const Monomial lm = h.lead().m;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> C;
    for (int g = 0; g < hi; ++g) {
      if (!active_[g] || polys_[g].lead().pos != pos) continue;
      Monomial l = lm.lcm(polys_[g].lead().m);
      C.push_back(Pair{g, hi, pos, l, wdeg(pos, l)});
    }
    const bool product_criterion = rank_ == 1;
    auto coprime = [&](const Pair& p) { return product_criterion && lm.coprime(polys_[p.i].lead().m); };
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (C[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < D.size() && keep; ++b) {
          if (D[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const auto& p : D) {
      if (!coprime(p)) E.push_back(p);
    }
    std::vector<Pair> B;
    for (const auto& p : pairs_) {
      if (p.i >= 0 && p.pos == pos && lm.divides(p.lcm)) {
        Monomial l1 = polys_[p.i].lead().m.lcm(lm);
        Monomial l2 = polys_[p.j].lead().m.lcm(lm);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      B.push_back(p);
    }
    for (auto& p : E) B.push_back(p);
    pairs_ = std::move(B);

    for (int g = 0; g < hi; ++g) {
      if (active_[g] && polys_[g].lead().pos == pos && lm.divides(polys_[g].lead().m)) active_[g] = false;
    }
    rebuild_index();
  }

  void rebuild_index() {
    for (auto& v : by_pos_) v.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) by_pos_[polys_[k].lead().pos].push_back({polys_[k].lead().m, static_cast<int>(k)});
    }
  }

  void interreduce(long from_wdeg) {
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      const auto& g = polys_[k];
      if (g.size() == 1) continue;
      // Homogeneous tails share the lead's degree, so lower-degree elements are already reduced.
      if (homogeneous_ && wdeg(g.lead().pos, g.lead().m) < from_wdeg) continue;
      ModulePoly<F> tail;
      tail.terms.assign(g.terms.begin() + 1, g.terms.end());
      ModulePoly<F> rt = reduce_impl(tail, static_cast<int>(k));
      ModulePoly<F> ng;
      ng.terms.reserve(rt.size() + 1);
      ng.terms.push_back(g.terms.front());
      for (auto& t : rt.terms) ng.terms.push_back(std::move(t));
      polys_[k] = std::move(ng);
    }
  }

  F K_;
  ModuleOrder ord_;
  int rank_;
  std::vector<int> weights_;
  std::vector<ModulePoly<F>> polys_;
  std::vector<bool> active_;
  std::vector<std::vector<LeadInfo>> by_pos_;
  std::vector<Pair> pairs_;
  std::vector<ModulePoly<F>> pending_gens_;
  bool homogeneous_ = true;
  std::size_t budget_ = 0;
  std::size_t steps_ = 0;
  long done_deg_ = -1;
};

}  // namespace tel
