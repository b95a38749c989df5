#pragma once

#include <optional>
#include <random>
#include <vector>

#include "sak/brute.hpp"
#include "sak/signed_graph.hpp"

namespace sak::testing {

// Fig-style worked example, unsigned variant. Vertices 0..6 stand for v1..v7.
inline UnsignedGraph example7_unsigned() {
  UnsignedGraph g(7);
  int es[][2] = {{0, 1}, {2, 0}, {3, 0}, {2, 1}, {1, 4},
                 {2, 3}, {2, 4}, {3, 6}, {5, 4}, {6, 5}};
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

// Signed variant of the same 7-vertex graph:
// E+ = {v1v3, v1v4, v2v5, v3v4, v3v5}, E- = {v1v2, v2v3, v4v7, v5v6, v6v7}.
inline SignedGraph example7_signed() {
  SignedGraph g(7);
  g.add_edge(0, 2, Sign::Positive);
  g.add_edge(0, 3, Sign::Positive);
  g.add_edge(1, 4, Sign::Positive);
  g.add_edge(2, 3, Sign::Positive);
  g.add_edge(2, 4, Sign::Positive);
  g.add_edge(0, 1, Sign::Negative);
  g.add_edge(1, 2, Sign::Negative);
  g.add_edge(3, 6, Sign::Negative);
  g.add_edge(4, 5, Sign::Negative);
  g.add_edge(5, 6, Sign::Negative);
  for (int v = 0; v < 7; v++) g.set_label(v, "v" + std::to_string(v + 1));
  return g;
}

// Independent oracle: plain subset enumeration by increasing size over the
// whole vertex set, using only the verification predicate. No pruning, no
// per-component splitting.
inline std::optional<VertexSet> naive_min_alliance(const SignedGraph& g,
                                                   int max_size = -1) {
  int n = g.n();
  if (max_size < 0) max_size = n;
  for (int s = 1; s <= max_size; s++) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; i++) idx[i] = i;
    while (true) {
      VertexSet set(n);
      for (int v : idx) set.add(v);
      if (is_offensive_alliance(g, set).accepted) return set;
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) i--;
      if (i < 0) break;
      idx[i]++;
      for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline SignedGraph random_signed(int n, double p_pos, double p_neg,
                                 uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SignedGraph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      double r = coin(rng);
      if (r < p_pos)
        g.add_edge(u, v, Sign::Positive);
      else if (r < p_pos + p_neg)
        g.add_edge(u, v, Sign::Negative);
    }
  return g;
}

}  // namespace sak::testing
