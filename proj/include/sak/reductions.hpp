#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sak/signed_graph.hpp"

namespace sak {

struct DegreeTooHigh : InputError {
  using InputError::InputError;
};
struct EmptyHyperedge : InputError {
  using InputError::InputError;
};
struct BadProbabilities : InputError {
  using InputError::InputError;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
};

// A constructed hardness-reduction instance with a planted forward witness.
struct ReductionInstance {
  SignedGraph graph{0};
  int budget = 0;
  std::string source;
  // Gadget vertex groups; every non-copied vertex belongs to exactly one.
  std::map<std::string, std::vector<int>> groups;
  // Maps a solution of the source problem to a target alliance of size
  // <= budget (sound for yes-instances of the respective source problem).
  std::function<VertexSet(const VertexSet&)> witness_map;
};

// From unsigned Offensive Alliance (G0, k): per-vertex pendant pair v_1,v_2
// plus d'(v)-1 not-in-the-solution blocks of size 3k+1; budget 3k.
ReductionInstance reduce_unsigned_oa(const UnsignedGraph& g0, int k);

enum class VcVariant { PerVertexGadget, SharedGadget };

// From Vertex Cover on max-degree-3 graphs; budget 3k. The planted witness
// S u {v^1,v^2 | v in S} verifies when every non-cover vertex has degree
// exactly 3 (the cubic sources the construction is stated for). SharedGadget
// uses one common chain, giving at most 5n+3k+1 vertices.
ReductionInstance reduce_vertex_cover(const UnsignedGraph& g0, int k,
                                      VcVariant variant);

// From Hitting Set (H, k): budget k+3; witness S u {w,p,q}.
ReductionInstance reduce_hitting_set(const Hypergraph& h, int k);

enum class CompleteMode { Balanced, AntiBalanced };

// Complete signed graph over consecutive parts: intra-part edges carry the
// pure sign of the mode, cross edges the opposite sign.
SignedGraph gen_complete(const std::vector<int>& parts, CompleteMode mode);

SignedGraph gen_random_signed(int n, double p_pos, double p_neg, uint64_t seed);

Hypergraph gen_hypergraph(int n, int m, int max_edge, uint64_t seed);

}  // namespace sak
