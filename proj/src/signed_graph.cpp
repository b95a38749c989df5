#include "sak/signed_graph.hpp"

#include <algorithm>

namespace sak {

SignedGraph::SignedGraph(int n)
    : n_(n), pos_(n, VertexSet(n)), neg_(n, VertexSet(n)), labels_(n) {
  for (int v = 0; v < n_; v++) labels_[v] = std::to_string(v);
}

SignedGraph SignedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  SignedGraph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v, e.sign);
  return g;
}

void SignedGraph::add_edge(int u, int v, Sign sign) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("vertex index out of range");
  if (u == v) throw SelfLoop("self-loop at vertex " + labels_[u]);
  auto& same = sign == Sign::Positive ? pos_ : neg_;
  auto& other = sign == Sign::Positive ? neg_ : pos_;
  if (other[u].contains(v))
    throw ConflictingSign("edge {" + labels_[u] + "," + labels_[v] +
                          "} carries both signs");
  same[u].add(v);
  same[v].add(u);
}

int SignedGraph::num_pos_edges() const {
  int d = 0;
  for (int v = 0; v < n_; v++) d += deg_pos(v);
  return d / 2;
}

int SignedGraph::num_neg_edges() const {
  int d = 0;
  for (int v = 0; v < n_; v++) d += deg_neg(v);
  return d / 2;
}

int SignedGraph::index_of(const std::string& label) const {
  for (int v = 0; v < n_; v++)
    if (labels_[v] == label) return v;
  return -1;
}

std::vector<Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; u++) {
    pos_[u].for_each([&](int v) {
      if (u < v) out.push_back({u, v, Sign::Positive});
    });
    neg_[u].for_each([&](int v) {
      if (u < v) out.push_back({u, v, Sign::Negative});
    });
  }
  return out;
}

std::vector<VertexSet> SignedGraph::components() const {
  std::vector<VertexSet> comps;
  VertexSet seen(n_);
  for (int s = 0; s < n_; s++) {
    if (seen.contains(s)) continue;
    VertexSet comp(n_);
    std::vector<int> stack{s};
    comp.add(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      neighbors(u).for_each([&](int v) {
        if (!comp.contains(v)) {
          comp.add(v);
          stack.push_back(v);
        }
      });
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

SignedGraph SignedGraph::induced(const VertexSet& keep) const {
  std::vector<int> verts = keep.to_vector();
  std::vector<int> dense(n_, -1);
  for (size_t i = 0; i < verts.size(); i++) dense[verts[i]] = (int)i;
  SignedGraph g((int)verts.size());
  for (size_t i = 0; i < verts.size(); i++) g.set_label((int)i, labels_[verts[i]]);
  for (int u : verts) {
    (pos_[u] & keep).for_each([&](int v) {
      if (u < v) g.add_edge(dense[u], dense[v], Sign::Positive);
    });
    (neg_[u] & keep).for_each([&](int v) {
      if (u < v) g.add_edge(dense[u], dense[v], Sign::Negative);
    });
  }
  return g;
}

UnsignedGraph::UnsignedGraph(int n) : n_(n), adj_(n, VertexSet(n)) {}

void UnsignedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("vertex index out of range");
  if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
  adj_[u].add(v);
  adj_[v].add(u);
}

std::vector<std::pair<int, int>> UnsignedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; u++)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

DegreeProfile degree_profile(const SignedGraph& g, int v, const VertexSet& s) {
  DegreeProfile p;
  p.pos_in = g.pos_neighbors(v).count_and(s);
  p.neg_in = g.neg_neighbors(v).count_and(s);
  p.pos_out = g.deg_pos(v) - p.pos_in;
  p.neg_out = g.deg_neg(v) - p.neg_in;
  return p;
}

VertexSet boundary(const SignedGraph& g, const VertexSet& s) {
  VertexSet b(g.n());
  s.for_each([&](int v) { b |= g.neighbors(v); });
  b -= s;
  return b;
}

VertexSet boundary(const UnsignedGraph& g, const VertexSet& s) {
  VertexSet b(g.n());
  s.for_each([&](int v) { b |= g.neighbors(v); });
  b -= s;
  return b;
}

AllianceCertificate is_offensive_alliance(const SignedGraph& g,
                                          const VertexSet& s) {
  if (s.empty()) throw EmptySet("offensive alliance must be non-empty");
  AllianceCertificate cert;
  cert.alliance = s;
  cert.boundary = boundary(g, s);
  cert.boundary.for_each([&](int v) {
    DegreeProfile p = degree_profile(g, v, s);
    if (p.neg_in < p.pos_in)
      cert.violations.push_back({v, FailedCondition::Hostility, p});
    if (p.neg_in < p.pos_out + 1)
      cert.violations.push_back({v, FailedCondition::Superiority, p});
  });
  cert.accepted = cert.violations.empty();
  return cert;
}

AllianceCertificate is_offensive_alliance_unsigned(const UnsignedGraph& g,
                                                   const VertexSet& s) {
  if (s.empty()) throw EmptySet("offensive alliance must be non-empty");
  AllianceCertificate cert;
  cert.alliance = s;
  cert.boundary = boundary(g, s);
  cert.boundary.for_each([&](int u) {
    int in = g.neighbors(u).count_and(s);
    int out = g.deg(u) - in;
    if (in > 0 && in < out + 1) {
      DegreeProfile p;
      p.pos_in = in;
      p.pos_out = out;
      cert.violations.push_back({u, FailedCondition::Superiority, p});
    }
  });
  cert.accepted = cert.violations.empty();
  return cert;
}

bool attackable(const SignedGraph& g, int v) {
  return g.deg_neg(v) >= g.deg_pos(v) / 2 + 1;
}

bool existence_precondition(const SignedGraph& g, const VertexSet& component) {
  int max_neg = 0;
  int min_pos = g.n();
  component.for_each([&](int v) {
    max_neg = std::max(max_neg, g.deg_neg(v));
    min_pos = std::min(min_pos, g.deg_pos(v));
  });
  return max_neg >= min_pos / 2 + 1;
}

int size_lower_bound(const SignedGraph& g, const VertexSet& component) {
  int min_pos = g.n();
  component.for_each([&](int v) { min_pos = std::min(min_pos, g.deg_pos(v)); });
  return min_pos + 1;
}

}  // namespace sak
