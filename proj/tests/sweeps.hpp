#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sak/brute.hpp"
#include "sak/domino.hpp"
#include "sak/reductions.hpp"
#include "sak/snd.hpp"

namespace sak::testing {

inline std::optional<VertexSet> naive_min_alliance_unsigned(
    const UnsignedGraph& g, int max_size = -1) {
  int n = g.n();
  if (max_size < 0) max_size = n;
  for (int s = 1; s <= max_size; s++) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; i++) idx[i] = i;
    while (true) {
      VertexSet set(n);
      for (int v : idx) set.add(v);
      if (is_offensive_alliance_unsigned(g, set).accepted) return set;
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline std::optional<VertexSet> min_hitting_set(const Hypergraph& h, int k) {
  for (int s = 0; s <= std::min(k, h.n); s++) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; i++) idx[i] = i;
    while (true) {
      VertexSet set(h.n);
      for (int v : idx) set.add(v);
      bool hits = true;
      for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e) hit |= set.contains(v);
        if (!hit) hits = false;
      }
      if (hits) return set;
      int i = s - 1;
      while (i >= 0 && idx[i] == h.n - s + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// All unsigned graphs on n vertices up to isomorphism, via minimum edge
// bitmask over vertex permutations. Feasible for n <= 6.
inline std::vector<UnsignedGraph> nonisomorphic_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) pairs.push_back({u, v});
  int m = (int)pairs.size();
  std::vector<int> pair_index(n * n);
  for (int i = 0; i < m; i++) {
    auto [u, v] = pairs[i];
    pair_index[u * n + v] = pair_index[v * n + u] = i;
  }

  std::vector<uint64_t> seen;
  std::vector<UnsignedGraph> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); mask++) {
    uint64_t canon = mask;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      uint64_t mapped = 0;
      for (int i = 0; i < m; i++)
        if (mask >> i & 1) {
          auto [u, v] = pairs[i];
          mapped |= uint64_t(1) << pair_index[perm[u] * n + perm[v]];
        }
      canon = std::min(canon, mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canon != mask) continue;
    seen.push_back(mask);
    UnsignedGraph g(n);
    for (int i = 0; i < m; i++)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

// All hypergraphs on n vertices with up to max_edges distinct nonempty
// hyperedges.
inline std::vector<Hypergraph> all_hypergraphs(int n, int max_edges) {
  std::vector<std::vector<int>> pool;
  for (unsigned mask = 1; mask < (1u << n); mask++) {
    std::vector<int> e;
    for (int v = 0; v < n; v++)
      if (mask >> v & 1) e.push_back(v);
    pool.push_back(std::move(e));
  }
  std::vector<Hypergraph> out;
  int p = (int)pool.size();
  for (int count = 0; count <= std::min(max_edges, p); count++) {
    std::vector<int> idx(count);
    for (int i = 0; i < count; i++) idx[i] = i;
    bool more = true;
    while (more) {
      Hypergraph h;
      h.n = n;
      for (int i : idx) h.edges.push_back(pool[i]);
      out.push_back(std::move(h));
      int i = count - 1;
      while (i >= 0 && idx[i] == p - count + i) i--;
      if (i < 0)
        more = false;
      else {
        idx[i]++;
        for (int j = i + 1; j < count; j++) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return out;
}

struct SweepStats {
  int instances = 0;
  int yes_instances = 0;
  int failures = 0;
  std::string first_failure;
};

inline void sweep_fail(SweepStats& st, std::string what) {
  st.failures++;
  if (st.first_failure.empty()) st.first_failure = std::move(what);
}

// Unsigned-OA reduction: yes/no equivalence at budget 3k, planted-witness
// soundness, and gadget rigidity of the optimal target alliance.
inline SweepStats unsigned_oa_reduction_sweep(int max_n, int max_k) {
  SweepStats st;
  for (int n = 1; n <= max_n; n++) {
    auto graphs = nonisomorphic_graphs(n);
    for (const UnsignedGraph& g0 : graphs)
      for (int k = 1; k <= max_k; k++) {
        st.instances++;
        std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        ReductionInstance inst = reduce_unsigned_oa(g0, k);
        auto src = naive_min_alliance_unsigned(g0, k);
        auto tgt =
            min_offensive_alliance_bruteforce(inst.graph, {.budget = inst.budget});
        if ((bool)src != (bool)tgt) {
          sweep_fail(st, "status mismatch at " + tag);
          continue;
        }
        if (!src) continue;
        st.yes_instances++;

        VertexSet planted = inst.witness_map(*src);
        if ((int)planted.count() > inst.budget ||
            !is_offensive_alliance(inst.graph, planted).accepted)
          sweep_fail(st, "planted witness rejected at " + tag);

        const VertexSet& s = tgt->witness.alliance;
        for (const char* group : {"Mv", "vprime"})
          if (inst.groups.count(group))
            for (int v : inst.groups.at(group))
              if (s.contains(v)) sweep_fail(st, "gadget vertex in optimum at " + tag);
        // an original vertex in the optimum drags both pendants along: every
        // anchor next to it must see all its negative neighbors inside s
        auto in_group = [&](const char* group, int v) {
          if (!inst.groups.count(group)) return false;
          const auto& vec = inst.groups.at(group);
          return std::find(vec.begin(), vec.end(), v) != vec.end();
        };
        for (int v = 0; v < inst.graph.n(); v++) {
          if (!s.contains(v) || in_group("v1", v) || in_group("v2", v)) continue;
          inst.graph.neighbors(v).for_each([&](int a) {
            if (in_group("vprime", a)) {
              bool all = true;
              inst.graph.neg_neighbors(a).for_each(
                  [&](int p) { all &= s.contains(p); });
              if (!all) sweep_fail(st, "pendant pair missing at " + tag);
            }
          });
        }
      }
  }
  return st;
}

// Hitting-Set reduction: yes/no equivalence at budget k+3, planted-witness
// soundness, and {w,p,q} containment / M-block exclusion of the optimum.
inline SweepStats hitting_set_reduction_sweep(int max_n, int max_m, int max_k) {
  SweepStats st;
  for (int n = 1; n <= max_n; n++)
    for (const Hypergraph& h : all_hypergraphs(n, max_m))
      for (int k = 1; k <= max_k; k++) {
        st.instances++;
        std::string tag = "n=" + std::to_string(n) +
                          " m=" + std::to_string((int)h.edges.size()) +
                          " k=" + std::to_string(k);
        ReductionInstance inst = reduce_hitting_set(h, k);
        auto src = min_hitting_set(h, k);
        auto tgt =
            min_offensive_alliance_bruteforce(inst.graph, {.budget = inst.budget});
        if ((bool)src != (bool)tgt) {
          sweep_fail(st, "status mismatch at " + tag);
          continue;
        }
        if (!src) continue;
        st.yes_instances++;

        VertexSet planted = inst.witness_map(*src);
        if ((int)planted.count() > inst.budget ||
            !is_offensive_alliance(inst.graph, planted).accepted)
          sweep_fail(st, "planted witness rejected at " + tag);

        const VertexSet& s = tgt->witness.alliance;
        for (const char* group : {"w", "p", "q"})
          if (!s.contains(inst.groups.at(group)[0]))
            sweep_fail(st, std::string(group) + " missing from optimum at " + tag);
        for (const char* group : {"Mv", "Me"})
          if (inst.groups.count(group))
            for (int v : inst.groups.at(group))
              if (s.contains(v)) sweep_fail(st, "M-block vertex in optimum at " + tag);
      }
  return st;
}

// Signed path / cycle / caterpillar instances matching the canonical
// decomposition builders, with seed-driven signs.
inline SignedGraph signed_from_edges(int n,
                                     const std::vector<std::pair<int, int>>& es,
                                     uint64_t seed) {
  std::mt19937_64 rng(seed);
  SignedGraph g(n);
  for (auto [u, v] : es)
    g.add_edge(u, v, rng() % 2 ? Sign::Positive : Sign::Negative);
  return g;
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
  return es;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
  auto es = path_edges(n);
  es.push_back({n - 1, 0});
  return es;
}

inline std::vector<std::pair<int, int>> caterpillar_edges(
    const std::vector<int>& legs) {
  int s = (int)legs.size();
  auto es = path_edges(s);
  int next = s;
  for (int i = 0; i < s; i++)
    for (int l = 0; l < legs[i]; l++) es.push_back({i, next++});
  return es;
}

// Domino DP vs brute force across the three decomposition families.
inline SweepStats domino_oracle_sweep(int per_family, int max_n,
                                      uint64_t seed0) {
  SweepStats st;
  auto check = [&](const SignedGraph& g, const DominoDecomposition& dec,
                   const std::string& tag) {
    st.instances++;
    SolveResult dp = dp_solve(g, dec);
    auto brute = min_offensive_alliance_bruteforce(g);
    if (!brute || dp.optimum != brute->optimum)
      sweep_fail(st, "optimum mismatch at " + tag);
    else if (!dp.witness.accepted ||
             (int)dp.witness.alliance.count() != dp.optimum)
      sweep_fail(st, "witness mismatch at " + tag);
    else
      st.yes_instances++;
  };
  for (int i = 0; i < per_family; i++) {
    uint64_t seed = seed0 + i;
    int n = 3 + i % (max_n - 2);
    check(signed_from_edges(n, path_edges(n), seed), domino_path(n),
          "path seed=" + std::to_string(seed));
    check(signed_from_edges(n, cycle_edges(n), seed * 2 + 1), domino_cycle(n),
          "cycle seed=" + std::to_string(seed));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    int spine = 2 + (int)(rng() % 7);
    std::vector<int> legs(spine);
    int total = spine;
    for (int& l : legs) {
      l = (int)(rng() % 3);
      total += l;
    }
    if (total <= max_n)
      check(signed_from_edges(total, caterpillar_edges(legs), seed * 3 + 2),
            domino_caterpillar(legs),
            "caterpillar seed=" + std::to_string(seed));
  }
  return st;
}

// ILP pipeline vs brute force on random graphs of mixed densities.
inline SweepStats ilp_oracle_sweep(int instances, int max_n, uint64_t seed0) {
  SweepStats st;
  const double densities[][2] = {
      {0.2, 0.2}, {0.3, 0.3}, {0.15, 0.45}, {0.45, 0.15}, {0.5, 0.3}};
  for (int i = 0; i < instances; i++) {
    int n = 4 + i % (max_n - 3);
    auto [pp, pn] = densities[i % 5];
    SignedGraph g = random_signed(n, pp, pn, seed0 + i);
    st.instances++;
    std::string tag = "seed=" + std::to_string(seed0 + i);
    SolveResult ilp = min_offensive_alliance_ilp(g);
    auto brute = min_offensive_alliance_bruteforce(g);
    if (!brute || ilp.optimum != brute->optimum)
      sweep_fail(st, "optimum mismatch at " + tag);
    else if (!ilp.witness.accepted ||
             (int)ilp.witness.alliance.count() != ilp.optimum)
      sweep_fail(st, "witness mismatch at " + tag);
    else
      st.yes_instances++;
  }
  return st;
}

}  // namespace sak::testing
