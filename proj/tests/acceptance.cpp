// Release gate: every check prints exactly one PASS/FAIL line.
#include <cstdio>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sak/complete.hpp"
#include "sweeps.hpp"

using namespace sak;
using namespace sak::testing;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) failures++;
}

// All non-increasing partition profiles of n.
std::vector<std::vector<int>> profiles(int n, int cap = -1) {
  if (cap < 0) cap = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(cap, n); first >= 1; first--)
    for (auto rest : profiles(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

void worked_example_fidelity() {
  UnsignedGraph ug = example7_unsigned();
  SignedGraph sg = example7_signed();
  bool ok = true;
  std::string detail;
  auto unsigned_min = naive_min_alliance_unsigned(ug);
  if (!unsigned_min || unsigned_min->count() != 3) {
    ok = false;
    detail = "unsigned optimum is not 3";
  }
  if (!is_offensive_alliance_unsigned(ug, VertexSet::of(7, {0, 1, 2})).accepted ||
      is_offensive_alliance_unsigned(ug, VertexSet::of(7, {0, 2, 3, 4})).accepted) {
    ok = false;
    detail = "unsigned set checks disagree";
  }
  auto signed_min = min_offensive_alliance_bruteforce(sg);
  if (!signed_min || signed_min->optimum != 4) {
    ok = false;
    detail = "signed optimum is not 4";
  }
  if (!is_offensive_alliance(sg, VertexSet::of(7, {0, 2, 3, 4})).accepted ||
      is_offensive_alliance(sg, VertexSet::of(7, {0, 1, 2})).accepted) {
    ok = false;
    detail = "signed set checks disagree";
  }
  report(1, "worked example fidelity", ok, detail);
  // informational only: {v1,v3,v4,v6} is sometimes quoted as an alliance for
  // this example, but v5 fails superiority under the edge signs used here
  bool disputed =
      is_offensive_alliance(sg, VertexSet::of(7, {0, 2, 3, 5})).accepted;
  std::printf("  note: documented discrepancy, {v1,v3,v4,v6} verifies as %s\n",
              disputed ? "accepted" : "rejected");
}

void closed_form_oracle() {
  int count = 0;
  std::string detail;
  for (int n = 1; n <= 8 && detail.empty(); n++)
    for (const auto& profile : profiles(n))
      for (auto mode : {CompleteMode::Balanced, CompleteMode::AntiBalanced}) {
        count++;
        SignedGraph g = gen_complete(profile, mode);
        auto c = classify_complete(g);
        if (c.kind != CompleteKind::Balanced &&
            c.kind != CompleteKind::AntiBalanced) {
          detail = "unclassified profile at n=" + std::to_string(n);
          break;
        }
        ClosedForm cf = c.kind == CompleteKind::Balanced
                            ? aso_balanced(c.parts)
                            : aso_anti_balanced(c.parts);
        auto brute = min_offensive_alliance_bruteforce(g);
        if (!brute || cf.optimum != brute->optimum ||
            !is_offensive_alliance(g, cf.witness).accepted ||
            cf.witness.count() != cf.optimum) {
          detail = "mismatch at n=" + std::to_string(n);
          break;
        }
      }
  report(2, "closed form vs oracle", detail.empty(),
         detail.empty() ? std::to_string(count) + " profiles" : detail);
}

void sweep_report(int idx, const char* name, const SweepStats& st,
                  int min_instances) {
  bool ok = st.failures == 0 && st.instances >= min_instances;
  std::string detail = st.failures
                           ? st.first_failure
                           : std::to_string(st.instances) + " instances, " +
                                 std::to_string(st.yes_instances) + " yes";
  report(idx, name, ok, detail);
}

void bound_invariants() {
  std::string detail;
  int solved = 0;

  auto check_solved = [&](const SignedGraph& g, const std::string& tag) {
    if (!detail.empty() || g.components().size() != 1) return;
    auto r = min_offensive_alliance_bruteforce(g);
    if (!r) {
      detail = "unsolved instance at " + tag;
      return;
    }
    solved++;
    if (r->optimum < size_lower_bound(g, VertexSet::full(g.n())))
      detail = "degree lower bound violated at " + tag;
    r->witness.boundary.for_each([&](int v) {
      if (!attackable(g, v)) detail = "unattackable boundary vertex at " + tag;
    });
  };

  for (int n = 1; n <= 8; n++)
    for (const auto& profile : profiles(n))
      for (auto mode : {CompleteMode::Balanced, CompleteMode::AntiBalanced})
        check_solved(gen_complete(profile, mode),
                     "complete n=" + std::to_string(n));
  check_solved(example7_signed(), "worked example");
  for (uint64_t seed = 0; seed < 150; seed++)
    check_solved(random_signed(3 + (int)(seed % 8), 0.3, 0.3, seed + 5000),
                 "random seed=" + std::to_string(seed + 5000));

  // When no boundary vertex can exist, only the trivial whole-component
  // alliance should survive exhaustive enumeration.
  int precondition_failures = 0;
  for (uint64_t seed = 0; precondition_failures < 30 && seed < 400; seed++) {
    int n = 2 + (int)(seed % 9);  // up to 10
    SignedGraph g = random_signed(n, 0.5, seed % 3 ? 0.0 : 0.1, seed + 8000);
    if (g.components().size() != 1) continue;
    if (existence_precondition(g, VertexSet::full(n))) continue;
    precondition_failures++;
    for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); mask++) {
      VertexSet s(n);
      for (int v = 0; v < n; v++)
        if (mask >> v & 1) s.add(v);
      if (is_offensive_alliance(g, s).accepted) {
        detail = "non-trivial alliance despite failed precondition, seed=" +
                 std::to_string(seed + 8000);
        break;
      }
    }
  }
  if (detail.empty() && precondition_failures < 30)
    detail = "too few precondition-failing graphs";
  report(7, "bound invariants", detail.empty(),
         detail.empty() ? std::to_string(solved) + " solved, " +
                              std::to_string(precondition_failures) +
                              " precondition checks"
                        : detail);
}

void small_alliance_agreement() {
  std::string detail;
  int count = 0;
  for (uint64_t seed = 0; seed < 500 && detail.empty(); seed++) {
    int n = 3 + (int)(seed % 8);  // up to 10
    SignedGraph g = random_signed(n, 0.35, 0.35, seed + 12000);
    count++;
    std::string tag = "seed=" + std::to_string(seed + 12000);
    bool exists1 = false, exists2 = false;
    for (int u = 0; u < n; u++) {
      exists1 |= is_offensive_alliance(g, VertexSet::of(n, {u})).accepted;
      for (int v = u + 1; v < n; v++)
        exists2 |= is_offensive_alliance(g, VertexSet::of(n, {u, v})).accepted;
    }
    SmallAllianceResult small = small_alliance_check(g);
    if ((bool)small.size1 != exists1)
      detail = "size-1 disagreement at " + tag;
    else if (small.size1 &&
             !is_offensive_alliance(g, VertexSet::of(n, {*small.size1})).accepted)
      detail = "bad size-1 witness at " + tag;
    else if (!exists1 && (bool)small.size2 != exists2)
      detail = "size-2 disagreement at " + tag;
    else if (!exists1 && small.size2 &&
             !is_offensive_alliance(
                  g, VertexSet::of(n, {small.size2->first, small.size2->second}))
                  .accepted)
      detail = "bad size-2 witness at " + tag;
  }
  report(8, "small alliance characterization", detail.empty(),
         detail.empty() ? std::to_string(count) + " graphs" : detail);
}

UnsignedGraph random_subcubic(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  UnsignedGraph g(n);
  for (int tries = 0; tries < 3 * n; tries++) {
    int u = (int)(rng() % n), v = (int)(rng() % n);
    if (u == v || g.has_edge(u, v) || g.deg(u) >= 3 || g.deg(v) >= 3) continue;
    g.add_edge(u, v);
  }
  return g;
}

void shared_gadget_size() {
  std::string detail;
  int count = 0;
  for (uint64_t seed = 0; seed < 120 && detail.empty(); seed++) {
    int n = 2 + (int)(seed % 11);  // up to 12
    int k = (int)(seed % 6);
    UnsignedGraph g = random_subcubic(n, seed + 23000);
    ReductionInstance inst =
        reduce_vertex_cover(g, k, VcVariant::SharedGadget);
    count++;
    if (inst.graph.n() > 5 * n + 3 * k + 1)
      detail = "size bound violated at seed=" + std::to_string(seed + 23000);
  }
  report(9, "shared gadget size bound", detail.empty(),
         detail.empty() ? std::to_string(count) + " instances" : detail);
}

}  // namespace

int main() {
  worked_example_fidelity();
  closed_form_oracle();
  sweep_report(3, "ilp vs oracle", ilp_oracle_sweep(200, 12, 9000), 200);
  sweep_report(4, "domino dp vs oracle", domino_oracle_sweep(40, 20, 7000), 100);
  sweep_report(5, "unsigned reduction equivalence",
               unsigned_oa_reduction_sweep(5, 3), 150);
  sweep_report(6, "hitting set reduction equivalence",
               hitting_set_reduction_sweep(4, 4, 3), 1000);
  bound_invariants();
  small_alliance_agreement();
  shared_gadget_size();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
