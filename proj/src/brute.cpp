#include "sak/brute.hpp"

#include <algorithm>

namespace sak {

namespace {

// Least fixpoint of {v} under "members pull their non-attackable neighbors".
// Every alliance containing v contains the whole closure: a non-attackable
// neighbor of an alliance member cannot sit in the boundary, so it must
// join the set.
VertexSet attack_closure(const SignedGraph& g, int v,
                         const std::vector<char>& atk) {
  VertexSet t(g.n());
  t.add(v);
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    g.neighbors(x).for_each([&](int y) {
      if (!atk[y] && !t.contains(y)) {
        t.add(y);
        stack.push_back(y);
      }
    });
  }
  return t;
}

struct ComponentSearch {
  const SignedGraph& g;
  const BruteOptions& opts;
  std::vector<int> verts;           // ascending
  std::vector<char> atk;            // attackable flags, whole graph
  std::vector<VertexSet> closure;   // per graph vertex (prune mode)
  uint64_t explored = 0;

  std::optional<AllianceCertificate> best;

  // DFS over size-s subsets in lexicographic order of the sorted vertex
  // tuple; returns the first accepted set, which is the lex-smallest one.
  std::optional<AllianceCertificate> find_of_size(int s) {
    VertexSet sset(g.n());
    VertexSet forced(g.n());
    std::optional<AllianceCertificate> found;
    auto rec = [&](auto&& self, size_t from, int taken) -> bool {
      if (taken == s) {
        explored++;
        if (opts.prune && !(forced - sset).empty()) return false;
        AllianceCertificate cert = is_offensive_alliance(g, sset);
        if (cert.accepted) {
          found = std::move(cert);
          return true;
        }
        return false;
      }
      for (size_t i = from; i + (size_t)(s - taken) <= verts.size(); i++) {
        int v = verts[i];
        if (opts.prune && closure[v].count() > s) continue;
        VertexSet saved_forced = forced;
        sset.add(v);
        if (opts.prune) forced |= closure[v];
        bool ok = true;
        if (opts.prune) {
          VertexSet miss = forced - sset;
          if (sset.count() + miss.count() > s) ok = false;
          // Vertices are added in increasing order only.
          if (ok && miss.next(0) >= 0 && miss.next(0) < v) ok = false;
        }
        if (ok && self(self, i + 1, taken + 1)) return true;
        sset.remove(v);
        forced = saved_forced;
      }
      return false;
    };
    rec(rec, 0, 0);
    return found;
  }
};

}  // namespace

std::optional<SolveResult> min_offensive_alliance_bruteforce(
    const SignedGraph& g, const BruteOptions& opts) {
  if (g.n() == 0) throw EmptyGraph("graph has no vertices");

  std::vector<char> atk(g.n());
  for (int v = 0; v < g.n(); v++) atk[v] = attackable(g, v);
  std::vector<VertexSet> closure;
  if (opts.prune) {
    closure.reserve(g.n());
    for (int v = 0; v < g.n(); v++)
      closure.push_back(attack_closure(g, v, atk));
  }

  std::optional<AllianceCertificate> best;
  uint64_t explored = 0;
  auto better = [&](const AllianceCertificate& cand) {
    return !best ||
           VertexSet::lex_less(cand.alliance, best->alliance);
  };

  for (const VertexSet& comp : g.components()) {
    int csize = comp.count();
    int cap = csize - 1;  // whole component handled as the trivial fallback
    if (best) cap = std::min(cap, best->alliance.count());
    if (opts.budget) cap = std::min(cap, *opts.budget);

    ComponentSearch search{g, opts, comp.to_vector(), atk, closure};
    int lb = std::max(1, opts.prune ? size_lower_bound(g, comp) : 1);
    for (int s = lb; s <= cap; s++) {
      auto found = search.find_of_size(s);
      if (found) {
        if (better(*found)) best = std::move(found);
        break;
      }
    }
    explored += search.explored;

    if (!opts.budget || csize <= *opts.budget) {
      if (!best || csize < best->alliance.count() ||
          (csize == best->alliance.count() &&
           VertexSet::lex_less(comp, best->alliance))) {
        AllianceCertificate trivial = is_offensive_alliance(g, comp);
        if (better(trivial)) best = std::move(trivial);
      }
    }
  }

  if (!best) return std::nullopt;  // budget below a_so
  SolveResult res;
  res.optimum = best->alliance.count();
  res.witness = std::move(*best);
  res.strategy = opts.prune ? "brute" : "brute-unpruned";
  res.explored = explored;
  return res;
}

SmallAllianceResult small_alliance_check(const SignedGraph& g) {
  SmallAllianceResult res;
  for (int v = 0; v < g.n(); v++) {
    bool ok = true;
    g.neighbors(v).for_each([&](int u) {
      if (g.deg_pos(u) != 0) ok = false;
    });
    if (ok) {
      res.size1 = v;
      return res;
    }
  }
  for (int v = 0; v < g.n(); v++) {
    for (int u = v + 1; u < g.n(); u++) {
      VertexSet nv = g.neighbors(v);
      VertexSet nu = g.neighbors(u);
      VertexSet common = nv & nu;
      VertexSet sym = (nv | nu) - common;
      sym.remove(v);
      sym.remove(u);
      common.remove(v);
      common.remove(u);
      bool ok = true;
      sym.for_each([&](int w) {
        if (g.deg_pos(w) != 0) ok = false;
      });
      common.for_each([&](int w) {
        if (g.deg_pos(w) > 1) ok = false;
      });
      if (ok) {
        res.size2 = std::make_pair(v, u);
        return res;
      }
    }
  }
  return res;
}

}  // namespace sak
