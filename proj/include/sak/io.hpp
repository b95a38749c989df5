#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sak/domino.hpp"
#include "sak/reductions.hpp"

namespace sak {

struct ParseError : InputError {
  using InputError::InputError;
};
struct UnknownLabel : InputError {
  using InputError::InputError;
};

// Text format: comment lines start with `c`, header `p sg <n> <m+> <m->`,
// optional label lines `v <index> <label>`, then one edge per line as
// `<u> <v> +` or `<u> <v> -` with 0-based indices.
SignedGraph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const SignedGraph& g);

// JSON mirror: {"n":…, "pos":[[u,v],…], "neg":[[u,v],…]} with an optional
// "labels" array. Edges sorted ascending for byte-stable output.
SignedGraph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const SignedGraph& g);

// Sniffs the first non-blank character: '{' selects JSON, otherwise text.
SignedGraph read_graph(std::istream& in);
SignedGraph load_graph(const std::string& path);

// Hypergraph: header `p hs <n> <m>`, one line `e v1 v2 …` per hyperedge.
Hypergraph read_hypergraph_text(std::istream& in);
void write_hypergraph_text(std::ostream& out, const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);

// Decomposition: header `td <#nodes> <width+1> <n>`, bag lines
// `b <id> <v…>`, root marker `r <id>`, remaining `<id> <id>` lines are tree
// edges. Node ids are 0-based.
DominoDecomposition read_decomposition_text(std::istream& in);
void write_decomposition_text(std::ostream& out, const DominoDecomposition& d);
DominoDecomposition load_decomposition(const std::string& path);

// Whitespace-separated vertex labels; comment lines start with `c`.
// Throws UnknownLabel for labels absent from g.
VertexSet read_vertex_set(std::istream& in, const SignedGraph& g);

std::vector<std::string> label_list(const SignedGraph& g, const VertexSet& s);

// Sidecar JSON {budget, witness:[labels…], groups:{name:[labels…]}}; the
// witness slot is empty unless a mapped source solution is supplied.
std::string witness_sidecar_json(const ReductionInstance& inst,
                                 const std::optional<VertexSet>& witness);

// Certificate JSON with labels and the full violation list.
std::string certificate_json(const SignedGraph& g,
                             const AllianceCertificate& cert);

}  // namespace sak
