#include "oddcut/lp_cert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "oddcut/error.hpp"

namespace oddcut {

namespace {

template <typename Graph>
std::vector<int> offsets_of(const Graph& graph) {
  std::vector<int> out;
  int next = 0;
  for (const auto& e : graph.edges()) {
    out.push_back(next);
    next += e.multiplicity;
  }
  out.push_back(next);
  return out;
}

std::string describe(const Path& path) {
  std::string s;
  for (NodeId v : path.nodes) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "[" + s + "]";
}

void check_odd_path(const Dag& dag, NodeId s, NodeId t, const Path& path) {
  const auto& p = path.nodes;
  std::set<NodeId> seen(p.begin(), p.end());
  if (p.size() < 2 || p.front() != s || p.back() != t || seen.size() != p.size() ||
      !path.odd()) {
    fail(ErrorCode::NotOddPath, "not an odd simple s->t path: " + describe(path));
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= dag.node_count() || !dag.has_edge(p[i], p[i + 1])) {
      fail(ErrorCode::NotOddPath, "missing edge in path " + describe(path));
    }
  }
}

Rational path_weight(const Dag& dag, const Path& path, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (int var : path_variables(dag, path)) sum += x[var];
  return sum;
}

}  // namespace

std::vector<int> variable_offsets(const Dag& dag) { return offsets_of(dag); }
std::vector<int> variable_offsets(const UndirGraph& graph) { return offsets_of(graph); }

std::vector<Rational> variable_costs(const Dag& dag) {
  std::vector<Rational> out;
  for (const Edge& e : dag.edges()) {
    for (int c = 0; c < e.multiplicity; ++c) out.push_back(e.cost);
  }
  return out;
}

std::vector<int> path_variables(const Dag& dag, const Path& path) {
  const std::vector<int> offset = variable_offsets(dag);
  std::vector<int> out;
  const auto& p = path.nodes;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int found = -1;
    if (p[i] >= 0 && p[i] < dag.node_count()) {
      for (int e : dag.out_edges(p[i])) {
        if (dag.edge(e).head == p[i + 1] && (found == -1 || e < found)) found = e;
      }
    }
    if (found == -1) fail(ErrorCode::NotOddPath, "missing edge in path " + describe(path));
    out.push_back(offset[found]);
  }
  return out;
}

std::optional<Rational> shortest_odd_path_weight(const Dag& dag, NodeId s, NodeId t,
                                                 const std::vector<Rational>& x) {
  const std::vector<int> offset = variable_offsets(dag);
  const int n = dag.node_count();
  // best[v][p]: lightest s -> v path of parity p; walks in a DAG are paths.
  std::vector<std::optional<Rational>> best(2 * n);
  best[2 * s] = Rational(0);
  for (NodeId u : dag.topo_order()) {
    for (int parity = 0; parity < 2; ++parity) {
      const auto& from = best[2 * u + parity];
      if (!from) continue;
      for (int e : dag.out_edges(u)) {
        Rational w = x[offset[e]];
        for (int c = 1; c < dag.edge(e).multiplicity; ++c) w = std::min(w, x[offset[e] + c]);
        auto& to = best[2 * dag.edge(e).head + (1 - parity)];
        if (!to || *from + w < *to) to = *from + w;
      }
    }
  }
  return best[2 * t + 1];
}

std::optional<Rational> shortest_odd_path_weight(const UndirGraph& graph, NodeId s, NodeId t,
                                                 const std::vector<Rational>& x) {
  const std::vector<int> offset = variable_offsets(graph);
  std::map<std::pair<NodeId, NodeId>, Rational> hop;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const UndirEdge& edge = graph.edge(e);
    Rational w = x[offset[e]];
    for (int c = 1; c < edge.multiplicity; ++c) w = std::min(w, x[offset[e] + c]);
    for (auto key : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
      auto it = hop.find(key);
      if (it == hop.end() || w < it->second) hop[key] = w;
    }
  }
  std::optional<Rational> best;
  for (const Path& p : enumerate_paths(graph, s, t)) {
    if (!p.odd()) continue;
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) sum += hop[{p.nodes[i], p.nodes[i + 1]}];
    if (!best || sum < *best) best = sum;
  }
  return best;
}

bool verify_primal_feasible(const Dag& dag, NodeId s, NodeId t, const PrimalSolution& primal) {
  if (static_cast<int>(primal.x.size()) != variable_offsets(dag).back()) return false;
  for (const Rational& v : primal.x) {
    if (v < 0) return false;
  }
  const auto w = shortest_odd_path_weight(dag, s, t, primal.x);
  return !w || *w >= 1;
}

bool verify_primal_feasible(const UndirGraph& graph, NodeId s, NodeId t,
                            const PrimalSolution& primal) {
  if (static_cast<int>(primal.x.size()) != variable_offsets(graph).back()) return false;
  for (const Rational& v : primal.x) {
    if (v < 0) return false;
  }
  const auto w = shortest_odd_path_weight(graph, s, t, primal.x);
  return !w || *w >= 1;
}

bool verify_dual_feasible(const Dag& dag, NodeId s, NodeId t, const DualFlow& dual) {
  const std::vector<Rational> cost = variable_costs(dag);
  std::vector<Rational> load(cost.size(), Rational(0));
  for (const auto& [path, amount] : dual.flows) {
    check_odd_path(dag, s, t, path);
    if (amount <= 0) return false;
    for (int var : path_variables(dag, path)) load[var] += amount;
  }
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (load[i] > cost[i]) return false;
  }
  return true;
}

Rational primal_objective(const Dag& dag, const PrimalSolution& primal) {
  const std::vector<Rational> cost = variable_costs(dag);
  Rational sum = 0;
  for (std::size_t i = 0; i < cost.size() && i < primal.x.size(); ++i) {
    sum += cost[i] * primal.x[i];
  }
  return sum;
}

Rational dual_value(const DualFlow& dual) {
  Rational sum = 0;
  for (const auto& flow : dual.flows) sum += flow.second;
  return sum;
}

OptimalityReport check_optimality(const Dag& dag, NodeId s, NodeId t,
                                  const PrimalSolution& primal, const DualFlow& dual) {
  if (!verify_primal_feasible(dag, s, t, primal)) {
    fail(ErrorCode::InfeasibleCertificate, "primal certificate is infeasible");
  }
  if (!verify_dual_feasible(dag, s, t, dual)) {
    fail(ErrorCode::InfeasibleCertificate, "dual certificate is infeasible");
  }
  OptimalityReport r;
  r.primal_value = primal_objective(dag, primal);
  r.dual_value = dual_value(dual);
  r.gap = r.primal_value - r.dual_value;
  r.optimal = r.gap == 0;
  return r;
}

std::vector<std::vector<Rational>> tight_rows(const Dag& dag, const PrimalSolution& primal,
                                              const std::vector<Path>& tight_paths) {
  const int m = variable_offsets(dag).back();
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < m; ++i) {
    if (primal.x[i] != 0) continue;
    rows.emplace_back(m, Rational(0));
    rows.back()[i] = 1;
  }
  for (const Path& p : tight_paths) {
    rows.emplace_back(m, Rational(0));
    for (int var : path_variables(dag, p)) rows.back()[var] += 1;
  }
  return rows;
}

bool verify_extreme_point(const Dag& dag, NodeId s, NodeId t, const PrimalSolution& primal,
                          const std::vector<Path>& tight_paths) {
  const int m = variable_offsets(dag).back();
  if (static_cast<int>(primal.x.size()) != m) {
    fail(ErrorCode::InvalidArgument, "primal has " + std::to_string(primal.x.size()) +
                                         " coordinates, expected " + std::to_string(m));
  }
  for (const Path& p : tight_paths) {
    check_odd_path(dag, s, t, p);
    if (path_weight(dag, p, primal.x) != 1) {
      fail(ErrorCode::PathNotTight, "path " + describe(p) + " is not tight");
    }
  }
  return matrix_rank(tight_rows(dag, primal, tight_paths)) == m;
}

bool is_half_integral(const PrimalSolution& primal) {
  for (const Rational& v : primal.x) {
    const BigInt d = boost::multiprecision::denominator(v);
    if (d != 1 && d != 2) return false;
  }
  return true;
}

int matrix_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  // Scale each row to integers, then eliminate without fractions.
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : rows) {
    BigInt scale = 1;
    for (const Rational& v : row) {
      const BigInt d = boost::multiprecision::denominator(v);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<BigInt> r;
    for (const Rational& v : row) {
      r.push_back(boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v)));
    }
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<std::vector<Rational>> solve_square_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  for (const auto& row : a) {
    if (row.size() != n) return std::nullopt;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[i] / a[i][i];
  return y;
}

}  // namespace oddcut
