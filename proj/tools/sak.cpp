#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sak/brute.hpp"
#include "sak/complete.hpp"
#include "sak/domino.hpp"
#include "sak/io.hpp"
#include "sak/reductions.hpp"
#include "sak/snd.hpp"

using json = nlohmann::json;
using namespace sak;

namespace {

constexpr const char* kVersion = "0.1.0";

struct StrategyUnavailable : InputError {
  using InputError::InputError;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a(const std::string& content) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char b : content) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char hex[20];
  std::snprintf(hex, sizeof hex, "%016llx", (unsigned long long)h);
  return std::string("fnv1a:") + hex;
}

int threads() {
  const char* env = std::getenv("SAK_THREADS");
  return env ? std::max(1, std::atoi(env)) : 1;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
  }
}

UnsignedGraph underlying(const SignedGraph& g) {
  UnsignedGraph u(g.n());
  for (const Edge& e : g.edges()) u.add_edge(e.u, e.v);
  return u;
}

SolveResult verified(const SignedGraph& g, int optimum, const VertexSet& s,
                     std::string strategy, uint64_t explored) {
  AllianceCertificate cert = is_offensive_alliance(g, s);
  if (!cert.accepted || s.count() != optimum)
    throw InternalInconsistency("strategy " + strategy +
                                " produced a bad witness");
  SolveResult r;
  r.optimum = optimum;
  r.witness = std::move(cert);
  r.strategy = std::move(strategy);
  r.explored = explored;
  return r;
}

std::optional<SolveResult> try_small(const SignedGraph& g) {
  SmallAllianceResult small = small_alliance_check(g);
  if (small.size1)
    return verified(g, 1, VertexSet::of(g.n(), {*small.size1}), "small", 0);
  if (small.size2)
    return verified(
        g, 2, VertexSet::of(g.n(), {small.size2->first, small.size2->second}),
        "small", 0);
  return std::nullopt;
}

std::optional<SolveResult> try_closed(const SignedGraph& g) {
  CompleteClassification cc = classify_complete(g);
  if (cc.kind != CompleteKind::Balanced && cc.kind != CompleteKind::AntiBalanced)
    return std::nullopt;
  ClosedForm cf = cc.kind == CompleteKind::Balanced
                      ? aso_balanced(cc.parts)
                      : aso_anti_balanced(cc.parts);
  return verified(g, cf.optimum, cf.witness, "closed", 0);
}

int cmd_solve(const std::string& path, const std::string& strategy,
              std::optional<int> budget, const std::string& dec_path,
              int snd_threshold) {
  auto t0 = std::chrono::steady_clock::now();
  std::string content = slurp(path);
  std::istringstream in(content);
  SignedGraph g = read_graph(in);
  double parse_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  std::optional<SolveResult> result;
  if (strategy == "brute") {
    BruteOptions opts;
    opts.budget = budget;
    result = min_offensive_alliance_bruteforce(g, opts);
  } else if (strategy == "closed") {
    result = try_closed(g);
    if (!result)
      throw StrategyUnavailable("graph is not (anti-)balanced complete");
  } else if (strategy == "ilp") {
    result = min_offensive_alliance_ilp(g);
  } else if (strategy == "dp") {
    if (dec_path.empty())
      throw StrategyUnavailable("dp needs --decomposition");
    result = dp_solve(g, load_decomposition(dec_path));
  } else {  // auto
    result = try_small(g);
    if (!result) result = try_closed(g);
    if (!result && snd_partition(g).k() <= snd_threshold)
      result = min_offensive_alliance_ilp(g);
    if (!result) result = min_offensive_alliance_bruteforce(g);
  }
  double solve_ms = ms_since(t1);

  bool yes = result && (!budget || result->optimum <= *budget);
  json report;
  report["schema"] = 1;
  report["version"] = kVersion;
  report["command"] = "solve";
  report["input"] = {{"path", path}, {"digest", fnv1a(content)}};
  report["threads"] = threads();
  if (budget) {
    report["budget"] = *budget;
    report["answer"] = yes ? "yes" : "no";
  }
  if (result) {
    // re-verify before reporting, whatever the strategy did internally
    AllianceCertificate check = is_offensive_alliance(g, result->witness.alliance);
    if (!check.accepted)
      throw InternalInconsistency("reported witness fails verification");
    report["strategy"] = result->strategy;
    report["optimum"] = result->optimum;
    report["witness"] = label_list(g, result->witness.alliance);
    report["stats"] = {{"explored", result->explored}};
  } else {
    report["strategy"] = "brute";
    report["optimum"] = nullptr;
  }
  report["timings_ms"] = {{"parse", parse_ms}, {"solve", solve_ms}};
  std::cout << report.dump(2) << "\n";
  return yes ? 0 : 1;
}

int cmd_verify(const std::string& graph_path, const std::string& set_path) {
  SignedGraph g = load_graph(graph_path);
  std::ifstream in(set_path);
  if (!in) throw InputError("cannot open " + set_path);
  VertexSet s = read_vertex_set(in, g);
  AllianceCertificate cert = is_offensive_alliance(g, s);
  std::cout << certificate_json(g, cert);
  return cert.accepted ? 0 : 1;
}

int cmd_reduce(const std::string& kind, const std::string& source_path, int k,
               const std::string& variant, const std::string& solution_path,
               const std::string& out_path, std::string sidecar_path) {
  ReductionInstance inst;
  int source_n = 0;
  if (kind == "hs") {
    Hypergraph h = load_hypergraph(source_path);
    source_n = h.n;
    inst = reduce_hitting_set(h, k);
  } else {
    // unsigned sources are read in the standard format, signs ignored
    SignedGraph src = load_graph(source_path);
    source_n = src.n();
    UnsignedGraph u = underlying(src);
    inst = kind == "uoa"
               ? reduce_unsigned_oa(u, k)
               : reduce_vertex_cover(u, k,
                                     variant == "shared"
                                         ? VcVariant::SharedGadget
                                         : VcVariant::PerVertexGadget);
  }
  std::optional<VertexSet> witness;
  if (!solution_path.empty()) {
    std::ifstream in(solution_path);
    if (!in) throw InputError("cannot open " + solution_path);
    VertexSet sol(source_n);
    std::string tok;
    while (in >> tok) {
      if (tok == "c") {
        std::getline(in, tok);
        continue;
      }
      int v = -1;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
      }
      if (v < 0 || v >= source_n)
        throw ParseError("bad source vertex '" + tok + "'");
      sol.add(v);
    }
    witness = inst.witness_map(sol);
  }
  std::ostringstream text;
  write_graph_text(text, inst.graph);
  emit_text(text.str(), out_path);
  if (sidecar_path.empty() && !out_path.empty())
    sidecar_path = out_path + ".witness.json";
  if (!sidecar_path.empty())
    emit_text(witness_sidecar_json(inst, witness), sidecar_path);
  return 0;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    parts.push_back(std::stoi(tok));
  return parts;
}

int cmd_snd(const std::string& path, bool dump) {
  SignedGraph g = load_graph(path);
  SndPartition p = snd_partition(g);
  if (dump) {
    std::cout << dump_model(build_oa_ilp(p));
    return 0;
  }
  json report;
  report["schema"] = 1;
  report["k"] = p.k();
  report["classes"] = json::array();
  for (int i = 0; i < p.k(); i++) {
    const char* kind = p.kinds[i] == ClassKind::PositiveClique ? "positive_clique"
                       : p.kinds[i] == ClassKind::NegativeClique
                           ? "negative_clique"
                           : "independent";
    report["classes"].push_back({{"vertices", label_list(g, p.classes[i])},
                                 {"kind", kind},
                                 {"z", p.z[i]}});
  }
  report["inter_sign"] = p.inter_sign;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_check_bounds(const std::string& path) {
  SignedGraph g = load_graph(path);
  json report;
  report["schema"] = 1;
  report["components"] = json::array();
  for (const VertexSet& comp : g.components()) {
    report["components"].push_back(
        {{"vertices", label_list(g, comp)},
         {"existence_precondition", existence_precondition(g, comp)},
         {"size_lower_bound", size_lower_bound(g, comp)}});
  }
  json attack = json::array();
  for (int v = 0; v < g.n(); v++)
    if (attackable(g, v)) attack.push_back(g.label(v));
  report["attackable"] = attack;
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum non-empty offensive alliances on signed graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string graph_path, strategy = "auto", dec_path, set_path;
  std::optional<int> budget;
  int snd_threshold = 8;
  solve->add_option("graph", graph_path)->required();
  solve->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "brute", "closed", "ilp", "dp"}));
  solve->add_option("--budget", budget, "Decision mode: answer yes iff a_so <= budget");
  solve->add_option("--decomposition", dec_path);
  solve->add_option("--snd-threshold", snd_threshold);

  auto* verify = app.add_subcommand("verify", "Verify a vertex set");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("set", set_path)->required();

  auto* reduce = app.add_subcommand("reduce", "Build a hardness-reduction instance");
  std::string kind, source_path, variant = "per-vertex", solution_path,
              out_path, sidecar_path;
  int k = 0;
  reduce->add_option("kind", kind)->required()
      ->check(CLI::IsMember({"uoa", "vc", "hs"}));
  reduce->add_option("source", source_path)->required();
  reduce->add_option("-k,--budget", k)->required();
  reduce->add_option("--variant", variant)
      ->check(CLI::IsMember({"per-vertex", "shared"}));
  reduce->add_option("--solution", solution_path,
                     "Source solution (vertex indices) to plant a witness");
  reduce->add_option("-o,--output", out_path);
  reduce->add_option("--sidecar", sidecar_path);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  auto* gen_c = gen->add_subcommand("complete", "(Anti-)balanced complete graph");
  std::string parts_text, mode = "balanced";
  gen_c->add_option("--parts", parts_text)->required();
  gen_c->add_option("--mode", mode)->check(CLI::IsMember({"balanced", "anti"}));
  gen_c->add_option("-o,--output", out_path);
  auto* gen_r = gen->add_subcommand("random", "Random signed graph");
  int n = 0, m = 0, max_edge = 3;
  double p_pos = 0.3, p_neg = 0.3;
  uint64_t seed = 0;
  gen_r->add_option("-n", n)->required();
  gen_r->add_option("--p-pos", p_pos);
  gen_r->add_option("--p-neg", p_neg);
  gen_r->add_option("--seed", seed);
  gen_r->add_option("-o,--output", out_path);
  auto* gen_h = gen->add_subcommand("hypergraph", "Random hypergraph");
  gen_h->add_option("-n", n)->required();
  gen_h->add_option("-m", m)->required();
  gen_h->add_option("--max-edge", max_edge);
  gen_h->add_option("--seed", seed);
  gen_h->add_option("-o,--output", out_path);

  auto* snd = app.add_subcommand("snd", "Signed neighborhood diversity partition");
  bool dump = false;
  snd->add_option("graph", graph_path)->required();
  snd->add_flag("--dump-model", dump, "Print the ILP instead of the partition");

  auto* bounds = app.add_subcommand("check-bounds", "Existence and size bounds");
  bounds->add_option("graph", graph_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed())
      return cmd_solve(graph_path, strategy, budget, dec_path, snd_threshold);
    if (verify->parsed()) return cmd_verify(graph_path, set_path);
    if (reduce->parsed())
      return cmd_reduce(kind, source_path, k, variant, solution_path, out_path,
                        sidecar_path);
    if (gen->parsed()) {
      std::ostringstream text;
      if (gen_c->parsed()) {
        write_graph_text(text, gen_complete(parse_parts(parts_text),
                                            mode == "anti"
                                                ? CompleteMode::AntiBalanced
                                                : CompleteMode::Balanced));
      } else if (gen_r->parsed()) {
        write_graph_text(text, gen_random_signed(n, p_pos, p_neg, seed));
      } else {
        write_hypergraph_text(text, gen_hypergraph(n, m, max_edge, seed));
      }
      emit_text(text.str(), out_path);
      return 0;
    }
    if (snd->parsed()) return cmd_snd(graph_path, dump);
    if (bounds->parsed()) return cmd_check_bounds(graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
