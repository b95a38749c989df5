#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sak/brute.hpp"
#include "sak/signed_graph.hpp"

namespace sak {

struct VerificationFailed : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};
struct InvalidCertificate : InputError {
  using InputError::InputError;
};

enum class ClassKind { PositiveClique, NegativeClique, Independent };

// Signed-neighborhood-diversity partition: u and v share a class iff
// N+(v)\{u} = N+(u)\{v} and N-(v)\{u} = N-(u)\{v}.
struct SndPartition {
  std::vector<VertexSet> classes;   // decreasing size, ties by lowest vertex
  std::vector<ClassKind> kinds;
  std::vector<std::vector<int>> inter_sign;  // +1 / -1 / 0 (no edges)
  std::vector<int> z;                        // 1 iff positive clique
  int n = 0;

  int k() const { return (int)classes.size(); }
  // Classes fully positively (resp. negatively) adjacent to class i,
  // including i itself for clique classes of the matching sign.
  std::vector<int> pos_classes(int i) const;
  std::vector<int> neg_classes(int i) const;
};

SndPartition snd_partition(const SignedGraph& g);

// One row of the model, normalized to sum(coeffs . vars) >= rhs.
struct IlpRow {
  std::vector<long long> coeffs;
  long long rhs;
  std::string tag;
};

// Variables are x_0..x_{k-1}, w_0..w_{k-1}, y_0..y_{k-1} in that order;
// objective is minimize x_0 + ... + x_{k-1}.
struct IlpModel {
  int k = 0;
  std::vector<long long> lb, ub;
  std::vector<IlpRow> rows;
  std::vector<int> branch_order;  // x variables, classes by decreasing size
};

IlpModel build_oa_ilp(const SndPartition& p);

struct IlpSolution {
  std::vector<long long> values;
  long long objective = 0;
  long long nodes = 0;
};

// Exact branch-and-bound; nullopt iff the model is infeasible.
std::optional<IlpSolution> solve_ilp(const IlpModel& model);

// Lowest-indexed x_i vertices of each class; the result is re-verified and
// VerificationFailed signals a formulation bug.
VertexSet decode_solution(const SignedGraph& g, const SndPartition& p,
                          const IlpSolution& sol);

// Partition + model + solve + decode; strategy "snd-ilp".
SolveResult min_offensive_alliance_ilp(const SignedGraph& g);

// LP-style text dump for debugging; write-only format.
std::string dump_model(const IlpModel& model);

struct SndBoundReport {
  long long bound;
  int measured;
};

// Bound 3^|cover| + |cover| from a vertex cover of the underlying graph.
SndBoundReport snd_bound_from_cover(const SignedGraph& g,
                                    const VertexSet& cover);

enum class BalanceMode { Balanced, AntiBalanced };

// Bound 3^|D| * k + |D| where G - D is a k-(anti-)balanced complete graph.
SndBoundReport snd_bound_from_distance(const SignedGraph& g, const VertexSet& d,
                                       BalanceMode mode);

}  // namespace sak
