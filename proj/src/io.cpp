#include "sak/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sak {

namespace {

using nlohmann::json;

bool skippable(const std::string& line) {
  size_t at = line.find_first_not_of(" \t\r");
  return at == std::string::npos || line[at] == 'c';
}

int parse_int(const std::string& tok, const std::string& what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != tok.size())
    throw ParseError("bad " + what + ": '" + tok + "'");
  return value;
}

int vertex_index(const std::string& tok, int n) {
  int v = parse_int(tok, "vertex index");
  if (v < 0 || v >= n)
    throw ParseError("vertex index " + tok + " out of range");
  return v;
}

}  // namespace

SignedGraph read_graph_text(std::istream& in) {
  std::string line;
  int n = -1, want_pos = 0, want_neg = 0;
  SignedGraph g(0);
  int seen_pos = 0, seen_neg = 0;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "p") {
      if (n >= 0) throw ParseError("duplicate header");
      std::string kind, sn, sp, sm;
      if (!(ls >> kind >> sn >> sp >> sm) || kind != "sg")
        throw ParseError("expected header 'p sg <n> <m+> <m->'");
      n = parse_int(sn, "vertex count");
      want_pos = parse_int(sp, "positive edge count");
      want_neg = parse_int(sm, "negative edge count");
      if (n < 0 || want_pos < 0 || want_neg < 0)
        throw ParseError("negative count in header");
      g = SignedGraph(n);
      continue;
    }
    if (n < 0) throw ParseError("edge data before 'p sg' header");
    if (tok == "v") {
      std::string sv, label;
      if (!(ls >> sv) || !std::getline(ls, label))
        throw ParseError("expected 'v <index> <label>'");
      size_t at = label.find_first_not_of(" \t");
      size_t end = label.find_last_not_of(" \t\r");
      if (at == std::string::npos)
        throw ParseError("expected 'v <index> <label>'");
      g.set_label(vertex_index(sv, n), label.substr(at, end - at + 1));
      continue;
    }
    std::string sv, sign;
    if (!(ls >> sv >> sign) || (sign != "+" && sign != "-"))
      throw ParseError("expected '<u> <v> +|-': '" + line + "'");
    int u = vertex_index(tok, n), v = vertex_index(sv, n);
    g.add_edge(u, v, sign == "+" ? Sign::Positive : Sign::Negative);
    (sign == "+" ? seen_pos : seen_neg)++;
  }
  if (n < 0) throw ParseError("missing 'p sg' header");
  if (seen_pos != want_pos || seen_neg != want_neg)
    throw ParseError("edge counts disagree with header");
  return g;
}

void write_graph_text(std::ostream& out, const SignedGraph& g) {
  out << "p sg " << g.n() << " " << g.num_pos_edges() << " "
      << g.num_neg_edges() << "\n";
  for (int v = 0; v < g.n(); v++)
    if (g.label(v) != std::to_string(v))
      out << "v " << v << " " << g.label(v) << "\n";
  for (const Edge& e : g.edges())
    out << e.u << " " << e.v << " " << (e.sign == Sign::Positive ? "+" : "-")
        << "\n";
}

namespace {

json parse_json(std::istream& in) {
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

SignedGraph read_graph_json(std::istream& in) {
  json j = parse_json(in);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("negative vertex count");
  SignedGraph g(n);
  for (auto [key, sign] : {std::pair{"pos", Sign::Positive},
                           std::pair{"neg", Sign::Negative}}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw ParseError("'" + std::string(key) +
                                             "' must be an edge array");
    for (const json& e : j[key]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("edges must be [u,v] integer pairs");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("edge endpoint out of range");
      g.add_edge(u, v, sign);
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || (int)j["labels"].size() != n)
      throw ParseError("'labels' must list one string per vertex");
    for (int v = 0; v < n; v++) {
      if (!j["labels"][v].is_string())
        throw ParseError("'labels' must list one string per vertex");
      g.set_label(v, j["labels"][v].get<std::string>());
    }
  }
  return g;
}

void write_graph_json(std::ostream& out, const SignedGraph& g) {
  json j;
  j["n"] = g.n();
  j["pos"] = json::array();
  j["neg"] = json::array();
  for (const Edge& e : g.edges())
    j[e.sign == Sign::Positive ? "pos" : "neg"].push_back({e.u, e.v});
  bool labeled = false;
  for (int v = 0; v < g.n(); v++) labeled |= g.label(v) != std::to_string(v);
  if (labeled) {
    j["labels"] = json::array();
    for (int v = 0; v < g.n(); v++) j["labels"].push_back(g.label(v));
  }
  out << j.dump(2) << "\n";
}

SignedGraph read_graph(std::istream& in) {
  int c;
  while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
  return c == '{' ? read_graph_json(in) : read_graph_text(in);
}

SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

Hypergraph read_hypergraph_text(std::istream& in) {
  std::string line;
  Hypergraph h;
  int want_edges = -1;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "p") {
      if (want_edges >= 0) throw ParseError("duplicate header");
      std::string kind, sn, sm;
      if (!(ls >> kind >> sn >> sm) || kind != "hs")
        throw ParseError("expected header 'p hs <n> <m>'");
      h.n = parse_int(sn, "vertex count");
      want_edges = parse_int(sm, "hyperedge count");
      if (h.n < 0 || want_edges < 0)
        throw ParseError("negative count in header");
      continue;
    }
    if (want_edges < 0) throw ParseError("hyperedge before 'p hs' header");
    if (tok != "e") throw ParseError("expected 'e v1 v2 …': '" + line + "'");
    std::vector<int> edge;
    std::string sv;
    while (ls >> sv) edge.push_back(vertex_index(sv, h.n));
    h.edges.push_back(std::move(edge));
  }
  if (want_edges < 0) throw ParseError("missing 'p hs' header");
  if ((int)h.edges.size() != want_edges)
    throw ParseError("hyperedge count disagrees with header");
  return h;
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h) {
  out << "p hs " << h.n << " " << h.edges.size() << "\n";
  for (const std::vector<int>& e : h.edges) {
    out << "e";
    for (int v : e) out << " " << v;
    out << "\n";
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_hypergraph_text(in);
}

DominoDecomposition read_decomposition_text(std::istream& in) {
  std::string line;
  int nodes = -1, width1 = 0, n = 0;
  DominoDecomposition d;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "td") {
      if (nodes >= 0) throw ParseError("duplicate header");
      std::string sm, sw, sn;
      if (!(ls >> sm >> sw >> sn))
        throw ParseError("expected header 'td <#nodes> <width+1> <n>'");
      nodes = parse_int(sm, "node count");
      width1 = parse_int(sw, "width");
      n = parse_int(sn, "vertex count");
      if (nodes <= 0 || width1 <= 0 || n < 0)
        throw ParseError("non-positive count in header");
      d.bags.assign(nodes, VertexSet(n));
      seen.assign(nodes, false);
      continue;
    }
    if (nodes < 0) throw ParseError("decomposition data before 'td' header");
    if (tok == "b") {
      std::string sid, sv;
      if (!(ls >> sid)) throw ParseError("expected 'b <id> <v…>'");
      int id = parse_int(sid, "node id");
      if (id < 0 || id >= nodes) throw ParseError("node id out of range");
      if (seen[id]) throw ParseError("duplicate bag " + sid);
      seen[id] = true;
      while (ls >> sv) d.bags[id].add(vertex_index(sv, n));
      if (d.bags[id].count() > width1)
        throw ParseError("bag " + sid + " exceeds the declared width");
      continue;
    }
    if (tok == "r") {
      std::string sid;
      if (!(ls >> sid)) throw ParseError("expected 'r <id>'");
      d.root = parse_int(sid, "root id");
      if (d.root < 0 || d.root >= nodes) throw ParseError("root id out of range");
      continue;
    }
    std::string sb;
    if (!(ls >> sb)) throw ParseError("expected tree edge '<id> <id>'");
    int a = parse_int(tok, "node id"), b = parse_int(sb, "node id");
    if (a < 0 || a >= nodes || b < 0 || b >= nodes)
      throw ParseError("tree edge endpoint out of range");
    d.tree_edges.push_back({a, b});
  }
  if (nodes < 0) throw ParseError("missing 'td' header");
  for (int t = 0; t < nodes; t++)
    if (!seen[t]) throw ParseError("bag " + std::to_string(t) + " missing");
  return d;
}

void write_decomposition_text(std::ostream& out,
                              const DominoDecomposition& d) {
  if (d.bags.empty()) throw InputError("decomposition has no nodes");
  int width1 = 0, n = d.bags[0].universe();
  for (const VertexSet& b : d.bags) width1 = std::max(width1, b.count());
  out << "td " << d.bags.size() << " " << width1 << " " << n << "\n";
  for (size_t t = 0; t < d.bags.size(); t++) {
    out << "b " << t;
    d.bags[t].for_each([&](int v) { out << " " << v; });
    out << "\n";
  }
  for (auto [a, b] : d.tree_edges) out << a << " " << b << "\n";
  out << "r " << d.root << "\n";
}

DominoDecomposition load_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_decomposition_text(in);
}

VertexSet read_vertex_set(std::istream& in, const SignedGraph& g) {
  VertexSet s(g.n());
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int v = g.index_of(tok);
      if (v < 0) throw UnknownLabel("unknown vertex label '" + tok + "'");
      s.add(v);
    }
  }
  return s;
}

std::vector<std::string> label_list(const SignedGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

std::string witness_sidecar_json(const ReductionInstance& inst,
                                 const std::optional<VertexSet>& witness) {
  json j;
  j["schema"] = 1;
  j["budget"] = inst.budget;
  j["source"] = inst.source;
  j["witness"] =
      witness ? label_list(inst.graph, *witness) : std::vector<std::string>{};
  j["groups"] = json::object();
  for (const auto& [name, verts] : inst.groups) {
    std::vector<std::string> labels;
    for (int v : verts) labels.push_back(inst.graph.label(v));
    j["groups"][name] = labels;
  }
  return j.dump(2) + "\n";
}

std::string certificate_json(const SignedGraph& g,
                             const AllianceCertificate& cert) {
  json j;
  j["schema"] = 1;
  j["accepted"] = cert.accepted;
  j["alliance"] = label_list(g, cert.alliance);
  j["boundary"] = label_list(g, cert.boundary);
  j["violations"] = json::array();
  for (const Violation& v : cert.violations) {
    json row;
    row["vertex"] = g.label(v.vertex);
    row["condition"] = v.condition == FailedCondition::Hostility
                           ? "hostility"
                           : "superiority";
    row["pos_in"] = v.profile.pos_in;
    row["neg_in"] = v.profile.neg_in;
    row["pos_out"] = v.profile.pos_out;
    row["neg_out"] = v.profile.neg_out;
    j["violations"].push_back(row);
  }
  return j.dump(2) + "\n";
}

}  // namespace sak
