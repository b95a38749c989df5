#include "sak/reductions.hpp"

#include <random>

namespace sak {

namespace {

// Incremental builder: vertices are named first, edges added once the final
// count is known.
struct GraphBuilder {
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  int vertex(std::string label) {
    labels.push_back(std::move(label));
    return (int)labels.size() - 1;
  }
  void pos(int u, int v) { edges.push_back({u, v, Sign::Positive}); }
  void neg(int u, int v) { edges.push_back({u, v, Sign::Negative}); }

  SignedGraph build() const {
    SignedGraph g((int)labels.size());
    for (int v = 0; v < g.n(); v++) g.set_label(v, labels[v]);
    for (const Edge& e : edges) g.add_edge(e.u, e.v, e.sign);
    return g;
  }
};

// Not-in-the-solution block: two hubs positively adjacent to every interior
// vertex; `size` total vertices, size >= 3. Returns {hub1, hub2}.
std::pair<int, int> add_ns_block(GraphBuilder& b, const std::string& prefix,
                                 int size,
                                 std::vector<int>& group) {
  int hub1 = b.vertex(prefix + ":1");
  int hub2 = b.vertex(prefix + ":2");
  group.push_back(hub1);
  group.push_back(hub2);
  for (int l = 3; l <= size; l++) {
    int inner = b.vertex(prefix + ":" + std::to_string(l));
    group.push_back(inner);
    b.pos(hub1, inner);
    b.pos(hub2, inner);
  }
  return {hub1, hub2};
}

}  // namespace

ReductionInstance reduce_unsigned_oa(const UnsignedGraph& g0, int k) {
  if (k < 1) throw InputError("budget parameter must be at least 1");
  int n0 = g0.n();
  GraphBuilder b;
  ReductionInstance inst;

  // Every vertex carries a pendant pair v_1, v_2 and anchors that force
  // {v, v_1, v_2} to co-occur in any alliance within budget, so alliances
  // translate 3-to-1 between the two sides. Vertices of degree >= 2 get the
  // d'(v)-1 positively attached anchors; the boundary arithmetic demands
  // exactly d'(v)-1 positive neighbors, so a vertex of degree <= 1 instead
  // gets one negatively attached anchor with two exposed block hubs, which
  // forces the same co-occurrence without touching its positive degree.
  std::vector<int> orig(n0), pend1(n0), pend2(n0);
  for (int v = 0; v < n0; v++) orig[v] = b.vertex(std::to_string(v));
  for (int v = 0; v < n0; v++) {
    int dprime = g0.deg(v) / 2 + 1;  // ceil((deg+1)/2)
    std::string vi = std::to_string(v);
    pend1[v] = b.vertex(vi + "@1");
    pend2[v] = b.vertex(vi + "@2");
    inst.groups["v1"].push_back(pend1[v]);
    inst.groups["v2"].push_back(pend2[v]);
    for (int i = dprime >= 2 ? 1 : 0; i <= dprime - 1; i++) {
      int anchor = b.vertex(vi + "@p" + std::to_string(i));
      inst.groups["vprime"].push_back(anchor);
      auto [hub1, hub2] = add_ns_block(b, vi + "@M" + std::to_string(i),
                                       3 * k + 1, inst.groups["Mv"]);
      if (i >= 1) {
        b.pos(orig[v], anchor);
        b.pos(anchor, hub1);
      } else {
        b.pos(anchor, hub1);
        b.pos(anchor, hub2);
        b.neg(orig[v], anchor);
      }
      b.neg(pend1[v], anchor);
      b.neg(pend2[v], anchor);
    }
  }
  for (auto [u, v] : g0.edges()) b.neg(orig[u], orig[v]);

  inst.graph = b.build();
  inst.budget = 3 * k;
  inst.source = "unsigned-oa n=" + std::to_string(n0) + " k=" + std::to_string(k);
  int nn = inst.graph.n();
  inst.witness_map = [orig, pend1, pend2, nn](const VertexSet& s) {
    VertexSet out(nn);
    s.for_each([&](int v) {
      out.add(orig[v]);
      out.add(pend1[v]);
      out.add(pend2[v]);
    });
    return out;
  };
  return inst;
}

ReductionInstance reduce_vertex_cover(const UnsignedGraph& g0, int k,
                                      VcVariant variant) {
  for (int v = 0; v < g0.n(); v++)
    if (g0.deg(v) > 3)
      throw DegreeTooHigh("vertex " + std::to_string(v) + " has degree > 3");
  int n0 = g0.n();
  int chain_len = 3 * k + 1;
  GraphBuilder b;
  ReductionInstance inst;

  std::vector<int> orig(n0), up1(n0), up2(n0), low1(n0), low2(n0);
  for (int v = 0; v < n0; v++) orig[v] = b.vertex(std::to_string(v));

  auto add_chain = [&](const std::string& prefix) {
    std::vector<int> chain(chain_len);
    for (int i = 0; i < chain_len; i++) {
      chain[i] = b.vertex(prefix + std::to_string(i + 1));
      inst.groups["chain"].push_back(chain[i]);
      if (i > 0) b.pos(chain[i - 1], chain[i]);
    }
    return chain;
  };

  std::vector<int> shared_chain;
  if (variant == VcVariant::SharedGadget) shared_chain = add_chain("c@");

  for (int v = 0; v < n0; v++) {
    std::string vs = std::to_string(v);
    up1[v] = b.vertex(vs + "@^1");
    up2[v] = b.vertex(vs + "@^2");
    low1[v] = b.vertex(vs + "@1");
    low2[v] = b.vertex(vs + "@2");
    inst.groups["vup"].push_back(up1[v]);
    inst.groups["vup"].push_back(up2[v]);
    inst.groups["vlow"].push_back(low1[v]);
    inst.groups["vlow"].push_back(low2[v]);

    const std::vector<int>& chain =
        variant == VcVariant::SharedGadget ? shared_chain : add_chain(vs + "@c");
    b.pos(orig[v], low1[v]);
    b.pos(orig[v], low2[v]);
    b.pos(low1[v], chain.front());
    // The construction names v'_{4k} here, but the chain only has 3k+1
    // vertices; its last vertex is used instead (only the chain's length
    // relative to the budget matters).
    b.pos(low2[v], chain.back());
    b.neg(low1[v], up1[v]);
    b.neg(low1[v], up2[v]);
    b.neg(low2[v], up1[v]);
    b.neg(low2[v], up2[v]);
  }
  for (auto [u, v] : g0.edges()) b.neg(orig[u], orig[v]);

  inst.graph = b.build();
  inst.budget = 3 * k;
  inst.source = std::string("vertex-cover ") +
                (variant == VcVariant::SharedGadget ? "shared" : "per-vertex") +
                " n=" + std::to_string(n0) + " k=" + std::to_string(k);
  int nn = inst.graph.n();
  inst.witness_map = [orig, up1, up2, nn](const VertexSet& s) {
    VertexSet out(nn);
    s.for_each([&](int v) {
      out.add(orig[v]);
      out.add(up1[v]);
      out.add(up2[v]);
    });
    return out;
  };
  return inst;
}

ReductionInstance reduce_hitting_set(const Hypergraph& h, int k) {
  if (k < 1) throw InputError("budget parameter must be at least 1");
  for (const auto& e : h.edges)
    if (e.empty()) throw EmptyHyperedge("hyperedge must be non-empty");

  GraphBuilder b;
  ReductionInstance inst;
  int n0 = h.n;
  int m = (int)h.edges.size();
  int block = 5 * k;

  std::vector<int> orig(n0), pend(n0), vedge(m);
  for (int v = 0; v < n0; v++) orig[v] = b.vertex(std::to_string(v));
  int w = b.vertex("w");
  int p = b.vertex("p");
  int q = b.vertex("q");
  inst.groups["w"] = {w};
  inst.groups["p"] = {p};
  inst.groups["q"] = {q};

  for (int v = 0; v < n0; v++) {
    std::string vs = std::to_string(v);
    pend[v] = b.vertex(vs + "@1");
    inst.groups["vlow"].push_back(pend[v]);
    auto [hub1, hub2] = add_ns_block(b, vs + "@M", block, inst.groups["Mv"]);
    (void)hub2;
    b.pos(w, pend[v]);
    b.pos(pend[v], hub1);
    b.neg(w, orig[v]);
    b.neg(p, pend[v]);
    b.neg(q, pend[v]);
  }
  for (int j = 0; j < m; j++) {
    std::string es = "e" + std::to_string(j);
    vedge[j] = b.vertex(es + "@ve");
    inst.groups["ve"].push_back(vedge[j]);
    auto [hub1, hub2] = add_ns_block(b, es + "@M", block, inst.groups["Me"]);
    (void)hub2;
    b.pos(vedge[j], hub1);
    b.neg(w, vedge[j]);
    for (int v : h.edges[j]) b.neg(orig[v], vedge[j]);
  }

  inst.graph = b.build();
  inst.budget = k + 3;
  inst.source = "hitting-set n=" + std::to_string(n0) + " m=" +
                std::to_string(m) + " k=" + std::to_string(k);
  int nn = inst.graph.n();
  inst.witness_map = [orig, w, p, q, nn](const VertexSet& s) {
    VertexSet out(nn);
    s.for_each([&](int v) { out.add(orig[v]); });
    out.add(w);
    out.add(p);
    out.add(q);
    return out;
  };
  return inst;
}

SignedGraph gen_complete(const std::vector<int>& parts, CompleteMode mode) {
  if (parts.empty()) throw InputError("partition must be non-empty");
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw InputError("part sizes must be positive");
    n += p;
  }
  std::vector<int> part_of(n);
  int at = 0;
  for (size_t i = 0; i < parts.size(); i++)
    for (int j = 0; j < parts[i]; j++) part_of[at++] = (int)i;

  Sign intra = mode == CompleteMode::Balanced ? Sign::Positive : Sign::Negative;
  Sign cross = mode == CompleteMode::Balanced ? Sign::Negative : Sign::Positive;
  SignedGraph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      g.add_edge(u, v, part_of[u] == part_of[v] ? intra : cross);
  return g;
}

SignedGraph gen_random_signed(int n, double p_pos, double p_neg,
                              uint64_t seed) {
  if (p_pos < 0 || p_neg < 0 || p_pos + p_neg > 1)
    throw BadProbabilities("need p_pos, p_neg >= 0 and p_pos + p_neg <= 1");
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

Hypergraph gen_hypergraph(int n, int m, int max_edge, uint64_t seed) {
  if (n < 1 || max_edge < 1) throw InputError("need n >= 1 and max_edge >= 1");
  std::mt19937_64 rng(seed);
  Hypergraph h;
  h.n = n;
  for (int j = 0; j < m; j++) {
    int size = 1 + (int)(rng() % (uint64_t)std::min(max_edge, n));
    VertexSet used(n);
    std::vector<int> edge;
    while ((int)edge.size() < size) {
      int v = (int)(rng() % (uint64_t)n);
      if (!used.contains(v)) {
        used.add(v);
        edge.push_back(v);
      }
    }
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  return h;
}

}  // namespace sak
