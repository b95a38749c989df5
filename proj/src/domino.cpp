#include "sak/domino.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace sak {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Layout {
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // ascending node id
  std::vector<int> post;                   // post-order, root last
  std::vector<std::vector<int>> bv;        // bag vertices, ascending
};

Layout make_layout(const DominoDecomposition& d) {
  int m = (int)d.bags.size();
  if (m == 0) throw InvalidDecomposition("decomposition has no nodes");
  if (d.root < 0 || d.root >= m) throw InvalidDecomposition("root id out of range");
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || a >= m || b < 0 || b >= m || a == b)
      throw InvalidDecomposition("malformed tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Layout lay;
  lay.parent.assign(m, -2);
  lay.children.resize(m);
  std::vector<int> stack{d.root};
  lay.parent[d.root] = -1;
  std::vector<int> order;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    std::sort(adj[t].begin(), adj[t].end());
    for (int u : adj[t]) {
      if (u == lay.parent[t]) continue;
      if (lay.parent[u] != -2) throw InvalidDecomposition("tree contains a cycle");
      lay.parent[u] = t;
      lay.children[t].push_back(u);
      stack.push_back(u);
    }
  }
  if ((int)order.size() != m)
    throw InvalidDecomposition("tree is not connected");
  lay.post.assign(order.rbegin(), order.rend());
  lay.bv.resize(m);
  for (int t = 0; t < m; t++) lay.bv[t] = d.bags[t].to_vector();
  return lay;
}

bool attacked(const SignedGraph& g, int u, const VertexSet& s) {
  int neg_in = g.neg_neighbors(u).count_and(s);
  int pos_in = g.pos_neighbors(u).count_and(s);
  int pos_out = g.deg_pos(u) - pos_in;
  return neg_in >= pos_in && neg_in >= pos_out + 1;
}

}  // namespace

int validate_domino(const SignedGraph& g, const DominoDecomposition& d) {
  Layout lay = make_layout(d);
  int m = (int)d.bags.size();
  std::vector<std::vector<int>> holders(g.n());
  for (int t = 0; t < m; t++)
    d.bags[t].for_each([&](int v) {
      if (v >= g.n()) throw InvalidDecomposition("bag vertex out of range");
      holders[v].push_back(t);
    });
  for (int v = 0; v < g.n(); v++) {
    if (holders[v].empty())
      throw NotCover("vertex " + std::to_string(v) + " is in no bag");
    if (holders[v].size() > 2)
      throw NotDomino("vertex " + std::to_string(v) + " is in more than two bags");
    if (holders[v].size() == 2) {
      int a = holders[v][0], b = holders[v][1];
      if (lay.parent[a] != b && lay.parent[b] != a)
        throw NotConnectedTrace("bags of vertex " + std::to_string(v) +
                                " are not tree-adjacent");
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int t : holders[e.u])
      covered |= d.bags[t].contains(e.v);
    if (!covered)
      throw EdgeUncovered("edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " is in no bag");
  }
  int width = 0;
  for (int t = 0; t < m; t++) width = std::max(width, d.bags[t].count() - 1);
  return width;
}

BagVertexType vertex_type(const DominoDecomposition& d, int t, int v) {
  Layout lay = make_layout(d);
  if (t < 0 || t >= (int)d.bags.size() || !d.bags[t].contains(v))
    throw NotInBag("vertex " + std::to_string(v) + " is not in bag " +
                   std::to_string(t));
  if (lay.parent[t] >= 0 && d.bags[lay.parent[t]].contains(v))
    return BagVertexType::Type2;
  for (int c : lay.children[t])
    if (d.bags[c].contains(v)) return BagVertexType::Type1;
  return BagVertexType::Type3;
}

namespace {

// Shared clause logic for `compatible` and `formative`.
bool selections_admissible(const SignedGraph& g, const DominoDecomposition& d,
                           const Layout& lay, int t, const VertexSet& sel_t,
                           const std::vector<VertexSet>& sel_children,
                           bool exempt_parent_bag) {
  const auto& kids = lay.children[t];
  if (sel_children.size() != kids.size())
    throw InputError("one selection per child expected");
  VertexSet local = sel_t;
  for (size_t j = 0; j < kids.size(); j++) {
    if (!sel_children[j].subset_of(d.bags[kids[j]]))
      throw InputError("child selection leaves its bag");
    VertexSet shared = d.bags[t] & d.bags[kids[j]];
    if ((sel_t & shared) != (sel_children[j] & shared)) return false;
    local |= sel_children[j];
  }
  int par = lay.parent[t];
  for (int u : lay.bv[t]) {
    if (sel_t.contains(u)) continue;
    if (exempt_parent_bag && par >= 0 && d.bags[par].contains(u)) continue;
    if (!g.neighbors(u).intersects(local)) continue;
    if (!attacked(g, u, local)) return false;
  }
  return true;
}

}  // namespace

bool compatible(const SignedGraph& g, const DominoDecomposition& d, int t,
                const VertexSet& a_t, const std::vector<VertexSet>& a_children) {
  Layout lay = make_layout(d);
  if (!a_t.subset_of(d.bags[t])) throw InputError("selection leaves its bag");
  return selections_admissible(g, d, lay, t, a_t, a_children, true);
}

bool formative(const SignedGraph& g, const DominoDecomposition& d, int t,
               const VertexSet& b_t, const std::vector<VertexSet>& b_children) {
  Layout lay = make_layout(d);
  if (b_t.empty()) throw EmptySet("formative selection must be non-empty");
  if (!b_t.subset_of(d.bags[t])) throw InputError("selection leaves its bag");
  if (lay.parent[t] >= 0 && b_t.intersects(d.bags[lay.parent[t]]))
    throw InputError("formative selection must avoid the parent bag");
  return selections_admissible(g, d, lay, t, b_t, b_children, false);
}

namespace {

struct DpState {
  const SignedGraph& g;
  const DominoDecomposition& d;
  const Layout& lay;
  // per node: cost per bag-subset mask, chosen child masks, and the
  // empty-selection scalar with its provenance
  std::vector<std::vector<long long>> cost;
  std::vector<std::vector<std::vector<uint32_t>>> pick;
  std::vector<long long> cempty;
  std::vector<int> cempty_child;              // >= 0: inherited from child
  std::vector<uint32_t> cempty_mask;          // else: formative B_t mask
  std::vector<std::vector<uint32_t>> cempty_pick;
  uint64_t explored = 0;

  VertexSet verts_of(int t, uint32_t mask) const {
    VertexSet s(g.n());
    for (size_t i = 0; i < lay.bv[t].size(); i++)
      if (mask >> i & 1) s.add(lay.bv[t][i]);
    return s;
  }

  // All boundary vertices of `local` inside bag t attacked; Type2 vertices
  // (parent-bag members) are exempt unless `check_all`.
  bool bag_attacks(int t, const VertexSet& sel_t, const VertexSet& local,
                   bool check_all) const {
    int par = lay.parent[t];
    for (int u : lay.bv[t]) {
      if (sel_t.contains(u)) continue;
      if (!check_all && par >= 0 && d.bags[par].contains(u)) continue;
      if (!g.neighbors(u).intersects(local)) continue;
      if (!attacked(g, u, local)) return false;
    }
    return true;
  }

  // Minimum over all child-selection tuples admissible with sel_t; fills
  // `chosen` with the argmin tuple. `check_all` selects the formative rule.
  long long best_tuple(int t, const VertexSet& sel_t, bool check_all,
                       std::vector<uint32_t>& chosen) {
    const auto& kids = lay.children[t];
    std::vector<uint32_t> cur(kids.size(), 0);
    std::vector<uint32_t> best_masks;
    long long best = kInf;
    std::function<void(size_t, long long, VertexSet)> rec =
        [&](size_t j, long long acc, VertexSet local) {
          if (acc >= kInf) return;
          if (j == kids.size()) {
            explored++;
            if (!bag_attacks(t, sel_t, local, check_all)) return;
            if (acc < best) {
              best = acc;
              best_masks = cur;
            }
            return;
          }
          int c = kids[j];
          VertexSet shared = d.bags[t] & d.bags[c];
          VertexSet want = sel_t & shared;
          for (uint32_t m = 0; m < (uint32_t)cost[c].size(); m++) {
            VertexSet cs = verts_of(c, m);
            if ((cs & shared) != want) continue;
            long long add = 0;
            if (m != 0) {
              if (cost[c][m] >= kInf) continue;
              add = cost[c][m] - cs.count_and(sel_t);
            }
            cur[j] = m;
            rec(j + 1, acc + add, local | cs);
          }
        };
    rec(0, 0, sel_t);
    chosen = std::move(best_masks);
    return best;
  }

  void run() {
    int m = (int)d.bags.size();
    cost.resize(m);
    pick.resize(m);
    cempty.assign(m, kInf);
    cempty_child.assign(m, -1);
    cempty_mask.assign(m, 0);
    cempty_pick.resize(m);
    for (int t : lay.post) {
      int sz = (int)lay.bv[t].size();
      cost[t].assign(1u << sz, kInf);
      pick[t].resize(1u << sz);
      int par = lay.parent[t];
      uint32_t avoid_parent = 0;
      for (int i = 0; i < sz; i++)
        if (par >= 0 && d.bags[par].contains(lay.bv[t][i]))
          avoid_parent |= 1u << i;

      for (uint32_t mask = 1; mask < (1u << sz); mask++) {
        VertexSet sel = verts_of(t, mask);
        std::vector<uint32_t> chosen;
        long long extra = best_tuple(t, sel, false, chosen);
        if (extra < kInf) {
          cost[t][mask] = sel.count() + extra;
          pick[t][mask] = std::move(chosen);
        }
      }
      for (int c : lay.children[t])
        if (cempty[c] < cempty[t]) {
          cempty[t] = cempty[c];
          cempty_child[t] = c;
        }
      for (uint32_t mask = 1; mask < (1u << sz); mask++) {
        if (mask & avoid_parent) continue;
        VertexSet sel = verts_of(t, mask);
        std::vector<uint32_t> chosen;
        long long extra = best_tuple(t, sel, true, chosen);
        long long b = extra < kInf ? sel.count() + extra : kInf;
        if (b < cempty[t]) {
          cempty[t] = b;
          cempty_child[t] = -1;
          cempty_mask[t] = mask;
          cempty_pick[t] = std::move(chosen);
        }
      }
    }
  }

  void collect(int t, uint32_t mask, VertexSet& out) const {
    out |= verts_of(t, mask);
    const auto& kids = lay.children[t];
    for (size_t j = 0; j < kids.size(); j++) {
      uint32_t cm = pick[t][mask][j];
      if (cm) collect(kids[j], cm, out);
    }
  }

  VertexSet witness() const {
    VertexSet out(g.n());
    int t = d.root;
    while (cempty_child[t] >= 0) t = cempty_child[t];
    out |= verts_of(t, cempty_mask[t]);
    const auto& kids = lay.children[t];
    for (size_t j = 0; j < kids.size(); j++) {
      uint32_t cm = cempty_pick[t][j];
      if (cm) collect(kids[j], cm, out);
    }
    return out;
  }
};

}  // namespace

SolveResult dp_solve(const SignedGraph& g, const DominoDecomposition& d) {
  if (g.n() == 0) throw EmptyGraph("graph has no vertices");
  validate_domino(g, d);
  if (g.components().size() != 1)
    throw InputError("graph must be connected");
  Layout lay = make_layout(d);
  // attack locality: a Type3 vertex has all neighbors inside its only bag
  for (int t = 0; t < (int)d.bags.size(); t++)
    for (int v : lay.bv[t]) {
      bool elsewhere = false;
      for (int o = 0; o < (int)d.bags.size(); o++)
        if (o != t && d.bags[o].contains(v)) elsewhere = true;
      if (!elsewhere && !g.neighbors(v).subset_of(d.bags[t]))
        throw InternalInconsistency("single-bag vertex with outside neighbors");
    }

  DpState dp{g, d, lay};
  dp.run();
  if (dp.cempty[d.root] >= kInf)
    throw InternalInconsistency("table reports no alliance");
  VertexSet s = dp.witness();
  AllianceCertificate cert = is_offensive_alliance(g, s);
  if (!cert.accepted || (long long)s.count() != dp.cempty[d.root])
    throw InternalInconsistency("reconstructed witness disagrees with table");
  SolveResult res;
  res.optimum = (int)dp.cempty[d.root];
  res.witness = std::move(cert);
  res.strategy = "domino-dp";
  res.explored = dp.explored;
  return res;
}

DpTable dp_tables(const SignedGraph& g, const DominoDecomposition& d) {
  if (g.n() == 0) throw EmptyGraph("graph has no vertices");
  validate_domino(g, d);
  Layout lay = make_layout(d);
  DpState dp{g, d, lay};
  dp.run();
  DpTable out;
  out.bag_vertices = lay.bv;
  out.cost = std::move(dp.cost);
  out.cempty = std::move(dp.cempty);
  out.infinity = kInf;
  return out;
}

DominoDecomposition domino_path(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  DominoDecomposition d;
  if (n == 1) {
    d.bags.push_back(VertexSet::of(1, {0}));
    return d;
  }
  for (int i = 0; i + 1 < n; i++) {
    d.bags.push_back(VertexSet::of(n, {i, i + 1}));
    if (i) d.tree_edges.push_back({i - 1, i});
  }
  return d;
}

DominoDecomposition domino_cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  DominoDecomposition d;
  int l = 0, r = n - 1;
  while (r - l + 1 > 4) {
    d.bags.push_back(VertexSet::of(n, {l, l + 1, r - 1, r}));
    l++;
    r--;
  }
  VertexSet last(n);
  for (int v = l; v <= r; v++) last.add(v);
  d.bags.push_back(last);
  for (size_t i = 0; i + 1 < d.bags.size(); i++)
    d.tree_edges.push_back({(int)i, (int)i + 1});
  return d;
}

DominoDecomposition domino_caterpillar(const std::vector<int>& legs) {
  int s = (int)legs.size();
  if (s < 1) throw InputError("caterpillar needs a non-empty spine");
  int n = s;
  for (int l : legs) {
    if (l < 0) throw InputError("leg counts must be non-negative");
    n += l;
  }
  DominoDecomposition d;
  int next_leg = s;
  for (int i = 0; i < s; i++) {
    VertexSet bag(n);
    bag.add(i);
    for (int l = 0; l < legs[i]; l++) bag.add(next_leg++);
    if (i + 1 < s) bag.add(i + 1);
    d.bags.push_back(bag);
    if (i) d.tree_edges.push_back({i - 1, i});
  }
  return d;
}

}  // namespace sak
