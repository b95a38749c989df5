#include "sak/snd.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sak/complete.hpp"

namespace sak {

namespace {

int find_root(std::vector<int>& up, int v) {
  while (up[v] != v) v = up[v] = up[up[v]];
  return v;
}

// Uniform sign between two vertex groups: +1 / -1 / 0, or nullopt if mixed.
std::optional<int> uniform_sign(const SignedGraph& g, const VertexSet& a,
                                const VertexSet& b) {
  bool any_pos = false, any_neg = false, any_none = false;
  a.for_each([&](int u) {
    int pos = g.pos_neighbors(u).count_and(b);
    int neg = g.neg_neighbors(u).count_and(b);
    int total = b.count() - (int)b.contains(u);
    if (pos) any_pos = true;
    if (neg) any_neg = true;
    if (pos + neg < total) any_none = true;
  });
  if ((int)any_pos + (int)any_neg + (int)any_none > 1) return std::nullopt;
  return any_pos ? 1 : any_neg ? -1 : 0;
}

}  // namespace

std::vector<int> SndPartition::pos_classes(int i) const {
  std::vector<int> out;
  for (int j = 0; j < k(); j++) {
    if (j == i ? (kinds[i] == ClassKind::PositiveClique)
               : (inter_sign[i][j] == 1))
      out.push_back(j);
  }
  return out;
}

std::vector<int> SndPartition::neg_classes(int i) const {
  std::vector<int> out;
  for (int j = 0; j < k(); j++) {
    if (j == i ? (kinds[i] == ClassKind::NegativeClique)
               : (inter_sign[i][j] == -1))
      out.push_back(j);
  }
  return out;
}

SndPartition snd_partition(const SignedGraph& g) {
  int n = g.n();
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);

  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      VertexSet pu = g.pos_neighbors(u), pv = g.pos_neighbors(v);
      VertexSet nu = g.neg_neighbors(u), nv = g.neg_neighbors(v);
      for (VertexSet* s : {&pu, &pv, &nu, &nv}) {
        s->remove(u);
        s->remove(v);
      }
      if (pu == pv && nu == nv) up[find_root(up, u)] = find_root(up, v);
    }

  SndPartition p;
  p.n = n;
  std::vector<VertexSet> classes;
  std::vector<int> root_class(n, -1);
  for (int v = 0; v < n; v++) {
    int r = find_root(up, v);
    if (root_class[r] < 0) {
      root_class[r] = (int)classes.size();
      classes.emplace_back(n);
    }
    classes[root_class[r]].add(v);
  }
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.count() != b.count()) return a.count() > b.count();
              return a.next(0) < b.next(0);
            });
  p.classes = std::move(classes);

  int k = p.k();
  for (int i = 0; i < k; i++) {
    const VertexSet& c = p.classes[i];
    if (c.count() == 1) {
      p.kinds.push_back(ClassKind::Independent);
      continue;
    }
    auto sign = uniform_sign(g, c, c);
    if (!sign) throw InternalInconsistency("class is neither clique nor independent");
    p.kinds.push_back(*sign == 1   ? ClassKind::PositiveClique
                      : *sign == -1 ? ClassKind::NegativeClique
                                    : ClassKind::Independent);
  }
  p.inter_sign.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) {
      auto sign = uniform_sign(g, p.classes[i], p.classes[j]);
      if (!sign) throw InternalInconsistency("mixed signs between two classes");
      p.inter_sign[i][j] = p.inter_sign[j][i] = *sign;
    }
  for (int i = 0; i < k; i++)
    p.z.push_back(p.kinds[i] == ClassKind::PositiveClique ? 1 : 0);
  return p;
}

IlpModel build_oa_ilp(const SndPartition& p) {
  int k = p.k();
  long long bigv = p.n;
  IlpModel m;
  m.k = k;
  m.lb.assign(3 * k, 0);
  m.ub.assign(3 * k, 1);
  for (int i = 0; i < k; i++) m.ub[i] = p.classes[i].count();
  for (int i = 0; i < k; i++) m.branch_order.push_back(i);

  auto row = [&](std::string tag) -> IlpRow& {
    m.rows.push_back({std::vector<long long>(3 * k, 0), 0, std::move(tag)});
    return m.rows.back();
  };

  for (int i = 0; i < k; i++) {
    auto pos = p.pos_classes(i), neg = p.neg_classes(i);
    std::string is = std::to_string(i);

    IlpRow& hostility = row("hostility[" + is + "]");
    for (int j : neg) hostility.coeffs[j] += 1;
    for (int j : pos) hostility.coeffs[j] -= 1;
    hostility.coeffs[k + i] = -2 * bigv;
    hostility.coeffs[2 * k + i] = 2 * bigv;
    hostility.rhs = -2 * bigv;

    IlpRow& superiority = row("superiority[" + is + "]");
    long long csum = 0;
    for (int j : neg) superiority.coeffs[j] += 1;
    for (int j : pos) {
      superiority.coeffs[j] += 1;
      csum += p.classes[j].count();
    }
    superiority.coeffs[k + i] = -2 * bigv;
    superiority.coeffs[2 * k + i] = 2 * bigv;
    superiority.rhs = csum + 1 - p.z[i] - 2 * bigv;

    // closed (clique) or open (independent) neighborhood classes for w_i
    std::vector<int> hood = pos;
    hood.insert(hood.end(), neg.begin(), neg.end());
    if (p.kinds[i] != ClassKind::Independent &&
        std::find(hood.begin(), hood.end(), i) == hood.end())
      hood.push_back(i);

    IlpRow& wlo = row("wlink-lo[" + is + "]");
    wlo.coeffs[k + i] = bigv;
    for (int j : hood) wlo.coeffs[j] -= 1;
    IlpRow& whi = row("wlink-hi[" + is + "]");
    whi.coeffs[k + i] = -bigv;
    for (int j : hood) whi.coeffs[j] += bigv;

    IlpRow& ylo = row("ylink-lo[" + is + "]");
    ylo.coeffs[2 * k + i] = 1;
    ylo.coeffs[i] = -1;
    ylo.rhs = 1 - (long long)p.classes[i].count();
    IlpRow& yhi = row("ylink-hi[" + is + "]");
    yhi.coeffs[i] = 1;
    yhi.coeffs[2 * k + i] = -(long long)p.classes[i].count();
  }
  IlpRow& nonempty = row("nonempty");
  for (int i = 0; i < k; i++) nonempty.coeffs[i] = 1;
  nonempty.rhs = 1;
  return m;
}

namespace {

struct BnB {
  const IlpModel& m;
  std::vector<long long> lo, hi;
  std::vector<long long> best;
  long long best_obj = 0;
  bool found = false;
  long long nodes = 0;

  explicit BnB(const IlpModel& model) : m(model), lo(m.lb), hi(m.ub) {}

  bool row_feasible_box(const IlpRow& r) const {
    long long max = 0;
    for (size_t v = 0; v < r.coeffs.size(); v++)
      max += r.coeffs[v] > 0 ? r.coeffs[v] * hi[v] : r.coeffs[v] * lo[v];
    return max >= r.rhs;
  }

  long long row_value(const IlpRow& r, const std::vector<long long>& vals) const {
    long long s = 0;
    for (size_t v = 0; v < r.coeffs.size(); v++) s += r.coeffs[v] * vals[v];
    return s;
  }

  // With every x fixed, per-class binaries are independent: pick the
  // lexicographically first (w_i, y_i) pair satisfying all rows touching it.
  void close_leaf() {
    std::vector<long long> vals = lo;
    for (int i = 0; i < m.k; i++) {
      bool ok = false;
      for (int w = 0; w <= 1 && !ok; w++)
        for (int y = 0; y <= 1 && !ok; y++) {
          vals[m.k + i] = w;
          vals[2 * m.k + i] = y;
          ok = true;
          for (const IlpRow& r : m.rows)
            if ((r.coeffs[m.k + i] || r.coeffs[2 * m.k + i]) &&
                row_value(r, vals) < r.rhs)
              ok = false;
        }
      if (!ok) return;
    }
    for (const IlpRow& r : m.rows)
      if (row_value(r, vals) < r.rhs) return;
    long long obj = 0;
    for (int i = 0; i < m.k; i++) obj += vals[i];
    if (!found || obj < best_obj) {
      found = true;
      best_obj = obj;
      best = vals;
    }
  }

  void dfs(size_t depth) {
    nodes++;
    long long obj_lb = 0;
    for (int i = 0; i < m.k; i++) obj_lb += lo[i];
    if (found && obj_lb >= best_obj) return;
    for (const IlpRow& r : m.rows)
      if (!row_feasible_box(r)) return;
    if (depth == m.branch_order.size()) {
      close_leaf();
      return;
    }
    int var = m.branch_order[depth];
    long long save_lo = lo[var], save_hi = hi[var];
    for (long long val = save_lo; val <= save_hi; val++) {
      lo[var] = hi[var] = val;
      dfs(depth + 1);
      lo[var] = save_lo;
      hi[var] = save_hi;
    }
  }
};

long long pow3(int e) {
  long long r = 1;
  for (int i = 0; i < e; i++) r *= 3;
  return r;
}

}  // namespace

std::optional<IlpSolution> solve_ilp(const IlpModel& model) {
  BnB bnb(model);
  bnb.dfs(0);
  if (!bnb.found) return std::nullopt;
  return IlpSolution{std::move(bnb.best), bnb.best_obj, bnb.nodes};
}

VertexSet decode_solution(const SignedGraph& g, const SndPartition& p,
                          const IlpSolution& sol) {
  VertexSet s(g.n());
  for (int i = 0; i < p.k(); i++) {
    long long take = sol.values[i];
    for (int v = p.classes[i].next(0); take > 0; v = p.classes[i].next(v + 1)) {
      s.add(v);
      take--;
    }
  }
  if (!is_offensive_alliance(g, s).accepted)
    throw VerificationFailed("decoded set is not an offensive alliance");
  return s;
}

SolveResult min_offensive_alliance_ilp(const SignedGraph& g) {
  if (g.n() == 0) throw EmptyGraph("graph has no vertices");
  SndPartition p = snd_partition(g);
  IlpModel model = build_oa_ilp(p);
  auto sol = solve_ilp(model);
  if (!sol) throw InternalInconsistency("alliance model reported infeasible");
  VertexSet s = decode_solution(g, p, *sol);
  SolveResult res;
  res.optimum = (int)sol->objective;
  res.witness = is_offensive_alliance(g, s);
  res.strategy = "snd-ilp";
  res.explored = (uint64_t)sol->nodes;
  return res;
}

std::string dump_model(const IlpModel& m) {
  std::ostringstream out;
  auto name = [&](int v) {
    int i = v % m.k;
    const char* base = v < m.k ? "x" : v < 2 * m.k ? "w" : "y";
    return std::string(base) + std::to_string(i);
  };
  out << "min:";
  for (int i = 0; i < m.k; i++) out << " + x" << i;
  out << ";\n";
  for (const IlpRow& r : m.rows) {
    out << r.tag << ":";
    for (int v = 0; v < 3 * m.k; v++)
      if (r.coeffs[v]) {
        out << (r.coeffs[v] > 0 ? " + " : " - ");
        long long a = std::llabs(r.coeffs[v]);
        if (a != 1) out << a << " ";
        out << name(v);
      }
    out << " >= " << r.rhs << ";\n";
  }
  for (int v = 0; v < 3 * m.k; v++)
    out << m.lb[v] << " <= " << name(v) << " <= " << m.ub[v] << ";\n";
  return out.str();
}

SndBoundReport snd_bound_from_cover(const SignedGraph& g,
                                    const VertexSet& cover) {
  for (const Edge& e : g.edges())
    if (!cover.contains(e.u) && !cover.contains(e.v))
      throw InvalidCertificate("set does not cover every edge");
  int vc = cover.count();
  SndBoundReport rep{pow3(vc) + vc, snd_partition(g).k()};
  if (rep.measured > rep.bound)
    throw InternalInconsistency("measured snd exceeds the certificate bound");
  return rep;
}

SndBoundReport snd_bound_from_distance(const SignedGraph& g, const VertexSet& d,
                                       BalanceMode mode) {
  VertexSet keep = VertexSet::full(g.n());
  keep -= d;
  SignedGraph rest = g.induced(keep);
  auto c = classify_complete(rest);
  int k;
  if (mode == BalanceMode::Balanced) {
    if (c.kind == CompleteKind::Balanced)
      k = (int)c.parts.size();
    else if (c.also_balanced_k)
      k = *c.also_balanced_k;
    else
      throw InvalidCertificate("remainder is not a balanced complete graph");
  } else {
    if (c.kind == CompleteKind::AntiBalanced)
      k = (int)c.parts.size();
    else if (c.also_anti_balanced_k)
      k = *c.also_anti_balanced_k;
    else
      throw InvalidCertificate("remainder is not an anti-balanced complete graph");
  }
  int dist = d.count();
  SndBoundReport rep{pow3(dist) * k + dist, snd_partition(g).k()};
  if (rep.measured > rep.bound)
    throw InternalInconsistency("measured snd exceeds the certificate bound");
  return rep;
}

}  // namespace sak
