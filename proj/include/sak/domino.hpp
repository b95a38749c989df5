#pragma once

#include <utility>
#include <vector>

#include "sak/brute.hpp"
#include "sak/signed_graph.hpp"

namespace sak {

struct InvalidDecomposition : InputError {
  using InputError::InputError;
};
struct NotCover : InvalidDecomposition {
  using InvalidDecomposition::InvalidDecomposition;
};
struct EdgeUncovered : InvalidDecomposition {
  using InvalidDecomposition::InvalidDecomposition;
};
struct NotConnectedTrace : InvalidDecomposition {
  using InvalidDecomposition::InvalidDecomposition;
};
struct NotDomino : InvalidDecomposition {
  using InvalidDecomposition::InvalidDecomposition;
};
struct NotInBag : InputError {
  using InputError::InputError;
};

// Rooted tree decomposition where every vertex lies in at most two bags and
// those bags are tree-adjacent.
struct DominoDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int root = 0;
};

// Checks the tree-decomposition properties plus the domino property;
// returns the width (max bag size - 1).
int validate_domino(const SignedGraph& g, const DominoDecomposition& d);

enum class BagVertexType { Type1, Type2, Type3 };

// Type1: v also in a child bag; Type2: also in the parent bag;
// Type3: only in bag t.
BagVertexType vertex_type(const DominoDecomposition& d, int t, int v);

// Bag-selection agreement plus attack check on Type1/Type3 boundary
// vertices of bag t; children order matches the tree order of d.
bool compatible(const SignedGraph& g, const DominoDecomposition& d, int t,
                const VertexSet& a_t, const std::vector<VertexSet>& a_children);

// As `compatible`, but b_t must avoid the parent bag and every boundary
// vertex of bag t is checked (no parent exemption).
bool formative(const SignedGraph& g, const DominoDecomposition& d, int t,
               const VertexSet& b_t, const std::vector<VertexSet>& b_children);

// Exact minimum non-empty offensive alliance via the table recurrence over
// the decomposition; strategy "domino-dp". The graph must be connected.
SolveResult dp_solve(const SignedGraph& g, const DominoDecomposition& d);

// Filled-in tables for inspection: cost[t][mask] is c[t, A_t] where bit i of
// mask selects bag_vertices[t][i], and cempty[t] is c[t, empty]. Entries of
// value `infinity` mean no potential alliance exists.
struct DpTable {
  std::vector<std::vector<int>> bag_vertices;
  std::vector<std::vector<long long>> cost;
  std::vector<long long> cempty;
  long long infinity = 0;
};

DpTable dp_tables(const SignedGraph& g, const DominoDecomposition& d);

// Canonical decompositions for the test families. Vertex conventions:
// path/cycle vertices 0..n-1 in order; caterpillar spine 0..s-1 followed by
// the legs of spine vertex 0, then of 1, and so on.
DominoDecomposition domino_path(int n);
DominoDecomposition domino_cycle(int n);
DominoDecomposition domino_caterpillar(const std::vector<int>& legs);

}  // namespace sak
