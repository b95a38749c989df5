#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sak/signed_graph.hpp"

namespace sak {

struct NotBalanced : InputError {
  using InputError::InputError;
};
struct NotAntiBalanced : InputError {
  using InputError::InputError;
};
struct SinglePart : InputError {
  using InputError::InputError;
};

enum class CompleteKind { NotComplete, OtherComplete, Balanced, AntiBalanced };

// Classification of a complete signed graph. A graph can satisfy both
// definitions at once (e.g. an all-negative clique is 1-anti-balanced and
// n-balanced); the kind with fewer parts is reported as primary and the
// other is kept as an annotation.
struct CompleteClassification {
  CompleteKind kind = CompleteKind::NotComplete;
  std::vector<VertexSet> parts;  // non-increasing size, ties by lowest vertex
  std::optional<int> also_balanced_k;
  std::optional<int> also_anti_balanced_k;
};

CompleteClassification classify_complete(const SignedGraph& g);

struct ClosedForm {
  int optimum;
  VertexSet witness;
};

// Balanced case: a_so = |V1|, the largest part is a minimum alliance.
ClosedForm aso_balanced(const std::vector<VertexSet>& parts);

// Anti-balanced case, sub-cases tried in priority order:
//   i)  two parts with |V2| >= ceil((n+1)/3): a_so = 2*ceil((|V1|+1)/2)
//   ii) |V1| >= n/2: a_so = max(n-|V1|+1, 2(n-|V1|)); 1 when |V1| = n
//   iii) otherwise a_so = n
ClosedForm aso_anti_balanced(const std::vector<VertexSet>& parts);

// Minimality test for a multi-part selection S in the balanced case:
// true iff |S| = |V1| >= 2|S_l|, S_l the largest part-intersection whose
// host part is not fully inside S. S must meet at least two parts.
bool is_min_balanced_multipart(const std::vector<VertexSet>& parts,
                               const VertexSet& s);

}  // namespace sak
