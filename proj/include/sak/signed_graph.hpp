#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sak/errors.hpp"
#include "sak/vertex_set.hpp"

namespace sak {

enum class Sign { Positive, Negative };

struct Edge {
  int u;
  int v;
  Sign sign;
};

// Graph with disjoint positive and negative symmetric adjacency.
// Immutable after construction; all queries are const.
class SignedGraph {
 public:
  explicit SignedGraph(int n);

  static SignedGraph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }

  // Idempotent for duplicate identical edges; throws ConflictingSign if the
  // pair already carries the opposite sign, SelfLoop on u == v.
  void add_edge(int u, int v, Sign sign);

  const VertexSet& pos_neighbors(int v) const { return pos_[v]; }
  const VertexSet& neg_neighbors(int v) const { return neg_[v]; }
  VertexSet neighbors(int v) const { return pos_[v] | neg_[v]; }

  int deg_pos(int v) const { return pos_[v].count(); }
  int deg_neg(int v) const { return neg_[v].count(); }
  int deg(int v) const { return deg_pos(v) + deg_neg(v); }

  bool has_pos_edge(int u, int v) const { return pos_[u].contains(v); }
  bool has_neg_edge(int u, int v) const { return neg_[u].contains(v); }

  int num_pos_edges() const;
  int num_neg_edges() const;

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string name) { labels_[v] = std::move(name); }
  // Index of the vertex carrying this label, or -1.
  int index_of(const std::string& label) const;

  std::vector<Edge> edges() const;

  // Connected components of the underlying graph (V, E+ u E-),
  // ordered by smallest contained vertex.
  std::vector<VertexSet> components() const;

  // Subgraph induced on `keep`; vertices are re-indexed in increasing order,
  // labels carried over.
  SignedGraph induced(const VertexSet& keep) const;

 private:
  int n_;
  std::vector<VertexSet> pos_;
  std::vector<VertexSet> neg_;
  std::vector<std::string> labels_;
};

// Plain unsigned graph, used by the unsigned alliance predicate and the
// reduction sources.
class UnsignedGraph {
 public:
  explicit UnsignedGraph(int n);

  void add_edge(int u, int v);

  int n() const { return n_; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int deg(int v) const { return adj_[v].count(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

// Degrees of one vertex split by sign and by membership in S.
struct DegreeProfile {
  int pos_in = 0;
  int neg_in = 0;
  int pos_out = 0;
  int neg_out = 0;
};

DegreeProfile degree_profile(const SignedGraph& g, int v, const VertexSet& s);

// N(S) \ S.
VertexSet boundary(const SignedGraph& g, const VertexSet& s);
VertexSet boundary(const UnsignedGraph& g, const VertexSet& s);

enum class FailedCondition { Hostility, Superiority };

struct Violation {
  int vertex;
  FailedCondition condition;
  DegreeProfile profile;
};

struct AllianceCertificate {
  VertexSet alliance;
  VertexSet boundary;
  bool accepted = false;
  std::vector<Violation> violations;  // every violating boundary vertex
};

// Checks both offensive conditions on every boundary vertex:
//   1) deg_S^-(v) >= deg_S^+(v)
//   2) deg_S^-(v) >= deg_{V\S}^+(v) + 1
// S must be non-empty (EmptySet otherwise).
AllianceCertificate is_offensive_alliance(const SignedGraph& g,
                                          const VertexSet& s);

// Unsigned variant: every u outside S with deg_S(u) > 0 must satisfy
// deg_S(u) >= deg_{V\S}(u) + 1.
AllianceCertificate is_offensive_alliance_unsigned(const UnsignedGraph& g,
                                                   const VertexSet& s);

// deg^-(v) >= ceil((deg^+(v)+1)/2): necessary for v to lie in the boundary
// of any offensive alliance.
bool attackable(const SignedGraph& g, int v);

// Per connected component: max neg degree >= ceil((min pos degree + 1)/2).
// When false, the component only has the trivial (whole-component) alliance.
bool existence_precondition(const SignedGraph& g, const VertexSet& component);

// Per connected component: every alliance inside has size >= min pos degree + 1.
int size_lower_bound(const SignedGraph& g, const VertexSet& component);

}  // namespace sak
