#include "sak/complete.hpp"

#include <algorithm>

namespace sak {

namespace {

// Components of the chosen sign's graph, provided every component is free of
// opposite-sign internal edges; nullopt otherwise.
std::optional<std::vector<VertexSet>> pure_partition(const SignedGraph& g,
                                                     Sign sign) {
  SignedGraph side(g.n());
  for (const Edge& e : g.edges())
    if (e.sign == sign) side.add_edge(e.u, e.v, e.sign);
  std::vector<VertexSet> parts = side.components();
  for (const VertexSet& part : parts) {
    bool pure = true;
    part.for_each([&](int v) {
      const VertexSet& opp =
          sign == Sign::Positive ? g.neg_neighbors(v) : g.pos_neighbors(v);
      if (opp.intersects(part)) pure = false;
    });
    if (!pure) return std::nullopt;
  }
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.next(0) < b.next(0);
  });
  return parts;
}

int total_size(const std::vector<VertexSet>& parts) {
  int n = 0;
  for (const VertexSet& p : parts) n += p.count();
  return n;
}

// `take` lowest-index vertices of a part.
VertexSet take_lowest(const VertexSet& part, int take) {
  VertexSet out(part.universe());
  for (int v = part.next(0); take > 0 && v >= 0; v = part.next(v + 1), take--)
    out.add(v);
  return out;
}

}  // namespace

CompleteClassification classify_complete(const SignedGraph& g) {
  CompleteClassification c;
  for (int u = 0; u < g.n(); u++)
    for (int v = u + 1; v < g.n(); v++)
      if (!g.has_pos_edge(u, v) && !g.has_neg_edge(u, v)) return c;

  auto bal = pure_partition(g, Sign::Positive);
  auto anti = pure_partition(g, Sign::Negative);
  if (!bal && !anti) {
    c.kind = CompleteKind::OtherComplete;
    return c;
  }
  bool primary_balanced =
      bal && (!anti || bal->size() <= anti->size());
  if (primary_balanced) {
    c.kind = CompleteKind::Balanced;
    c.parts = std::move(*bal);
    if (anti) c.also_anti_balanced_k = (int)anti->size();
  } else {
    c.kind = CompleteKind::AntiBalanced;
    c.parts = std::move(*anti);
    if (bal) c.also_balanced_k = (int)bal->size();
  }
  return c;
}

ClosedForm aso_balanced(const std::vector<VertexSet>& parts) {
  if (parts.empty()) throw NotBalanced("empty partition");
  return {parts[0].count(), parts[0]};
}

ClosedForm aso_anti_balanced(const std::vector<VertexSet>& parts) {
  if (parts.empty()) throw NotAntiBalanced("empty partition");
  int n = total_size(parts);
  int v1 = parts[0].count();

  if (parts.size() == 2 && 3 * parts[1].count() >= n + 1) {
    int t = (v1 + 2) / 2;  // ceil((|V1|+1)/2)
    // implied by the case condition: 3|V2| >= n+1 gives 2|V2| >= |V1|+1
    if (t > parts[1].count())
      throw InternalInconsistency("case (i) witness does not fit the parts");
    return {2 * t, take_lowest(parts[0], t) | take_lowest(parts[1], t)};
  }
  if (2 * v1 >= n) {
    if (v1 == n) return {1, take_lowest(parts[0], 1)};
    int rest = n - v1;
    VertexSet witness = take_lowest(parts[0], rest);
    for (size_t j = 1; j < parts.size(); j++) witness |= parts[j];
    return {std::max(rest + 1, 2 * rest), witness};
  }
  VertexSet all(parts[0].universe());
  for (const VertexSet& p : parts) all |= p;
  return {n, all};
}

bool is_min_balanced_multipart(const std::vector<VertexSet>& parts,
                               const VertexSet& s) {
  if (parts.empty()) throw NotBalanced("empty partition");
  int met = 0;
  int largest_open = -1;  // |S_l|
  for (const VertexSet& part : parts) {
    int inter = part.count_and(s);
    if (inter == 0) continue;
    met++;
    if (inter < part.count()) largest_open = std::max(largest_open, inter);
  }
  if (met < 2) throw SinglePart("selection must meet at least two parts");
  if (largest_open < 0)
    throw InputError("every met part fully inside the selection; argmax undefined");
  return s.count() == parts[0].count() && s.count() >= 2 * largest_open;
}

}  // namespace sak
