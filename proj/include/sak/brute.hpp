#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sak/signed_graph.hpp"

namespace sak {

struct SolveResult {
  int optimum = 0;
  AllianceCertificate witness;  // accepted, |alliance| == optimum
  std::string strategy;
  uint64_t explored = 0;  // candidate sets examined
};

struct BruteOptions {
  // Decision budget: report NoneWithinBudget (nullopt) if a_so > budget.
  std::optional<int> budget;
  // Disable all pruning; used by the self-consistency tests.
  bool prune = true;
};

// Exact minimum non-empty offensive alliance by subset enumeration in
// increasing size, per connected component. The whole component is always a
// feasible fallback. Deterministic: ties among minimum witnesses are broken
// towards the lexicographically smallest vertex set.
std::optional<SolveResult> min_offensive_alliance_bruteforce(
    const SignedGraph& g, const BruteOptions& opts = {});

struct SmallAllianceResult {
  std::optional<int> size1;                 // v with all neighbors of deg+ = 0
  std::optional<std::pair<int, int>> size2; // checked only when size1 absent
};

// Closed-form existence tests for alliances of size 1 and 2.
SmallAllianceResult small_alliance_check(const SignedGraph& g);

}  // namespace sak
