#include "oddcut/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oddcut/error.hpp"

namespace oddcut {

std::vector<int> EdgeToNode::lift(const std::vector<int>& nodes) const {
  std::set<int> out;
  for (int v : nodes) {
    if (v >= 0 && v < static_cast<int>(owner.size()) && owner[v] >= 0) out.insert(owner[v]);
  }
  return {out.begin(), out.end()};
}

EdgeToNode edgecut_to_nodecut(const Instance& instance) {
  if (!instance.directed() || instance.kind != CutKind::Edge) {
    fail(ErrorCode::InvalidArgument, "edge-to-node reduction needs a directed edge instance");
  }
  const Dag& dag = instance.dag();
  const int n = dag.node_count();
  EdgeToNode r;
  r.owner.assign(n, -1);
  std::vector<Edge> edges;
  for (int e = 0; e < dag.edge_count(); ++e) {
    const Edge& edge = dag.edge(e);
    if (std::binary_search(instance.protected_edges.begin(), instance.protected_edges.end(), e)) {
      edges.push_back(edge);
      continue;
    }
    for (int c = 0; c < edge.multiplicity; ++c) {
      const NodeId x = static_cast<NodeId>(r.owner.size());
      const NodeId y = x + 1;
      r.owner.push_back(e);
      r.owner.push_back(e);
      edges.push_back({edge.tail, x, edge.cost, 1});
      edges.push_back({x, y, edge.cost, 1});
      edges.push_back({y, edge.head, edge.cost, 1});
    }
  }
  NodeSet all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  r.instance = make_instance(Dag(static_cast<int>(r.owner.size()), std::move(edges)),
                             CutKind::Node, instance.terminals, all, {}, instance.budget);
  return r;
}

std::vector<int> NodeToEdge::lift(const std::vector<int>& edges) const {
  std::set<int> out;
  for (int e : edges) {
    if (e >= 0 && e < static_cast<int>(owner.size()) && owner[e] >= 0) out.insert(owner[e]);
  }
  return {out.begin(), out.end()};
}

NodeToEdge nodecut_to_edgecut(const Instance& instance) {
  if (!instance.directed() || instance.kind != CutKind::Node) {
    fail(ErrorCode::InvalidArgument, "node-to-edge reduction needs a directed node instance");
  }
  const Dag& dag = instance.dag();
  const int n = dag.node_count();
  NodeToEdge r;
  std::vector<Edge> edges;
  std::vector<int> guarded;
  for (NodeId v = 0; v < n; ++v) {
    edges.push_back({3 * v, 3 * v + 1, 1, 1});
    edges.push_back({3 * v + 1, 3 * v + 2, 1, 1});
    r.owner.push_back(v);
    r.owner.push_back(v);
    if (contains(instance.protected_nodes, v)) {
      guarded.push_back(2 * v);
      guarded.push_back(2 * v + 1);
    }
  }
  for (const Edge& e : dag.edges()) {
    guarded.push_back(static_cast<int>(edges.size()));
    edges.push_back({3 * e.tail + 2, 3 * e.head, e.cost, e.multiplicity});
    r.owner.push_back(-1);
  }
  NodeSet terminals;
  for (NodeId t : instance.terminals) terminals.push_back(3 * t);
  r.instance = make_instance(Dag(3 * n, std::move(edges)), CutKind::Edge, std::move(terminals),
                             {}, std::move(guarded), instance.budget);
  return r;
}

Instance gen_vc_gadget(const UndirGraph& graph) {
  const int n = graph.node_count();
  const NodeId s = n;
  const NodeId t = n + 1;
  std::set<std::pair<NodeId, NodeId>> oriented;
  for (const UndirEdge& e : graph.edges()) oriented.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<Edge> edges;
  for (const auto& [u, v] : oriented) edges.push_back({u, v, 1, 1});
  for (NodeId u = 0; u < n; ++u) edges.push_back({s, u, 1, 1});
  for (NodeId u = 0; u < n; ++u) edges.push_back({u, t, 1, 1});
  return make_instance(Dag(n + 2, std::move(edges)), CutKind::Node, {s, t});
}

Instance gen_mwc_gadget(const UndirGraph& graph, const NodeSet& terminals) {
  const NodeSet term = normalized(terminals);
  if (term.size() < 2) fail(ErrorCode::TooFewTerminals, "multiway cut needs two terminals");
  const int n = graph.node_count();
  const int heavy = graph.edge_count() + 1;
  const NodeId s = n;
  const NodeId t = n + 1;
  std::vector<UndirEdge> edges;
  for (const UndirEdge& e : graph.edges()) edges.push_back({e.u, e.v, e.cost, 1});
  for (std::size_t i = 0; i < term.size(); ++i) {
    const NodeId v = term[i];
    const NodeId x = n + 2 + 2 * static_cast<NodeId>(i);
    const NodeId xp = x + 1;
    edges.push_back({x, v, 1, heavy});
    edges.push_back({xp, v, 1, heavy});
    edges.push_back({x, xp, 1, heavy});
    edges.push_back({s, x, 1, heavy});
    edges.push_back({t, x, 1, heavy});
  }
  const int total = n + 2 + 2 * static_cast<int>(term.size());
  return make_instance(UndirGraph(total, std::move(edges)), CutKind::Edge, {s, t});
}

StarGap gen_star_gap(int k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "star gap needs k >= 2");
  std::vector<UndirEdge> edges;
  NodeSet leaves;
  for (NodeId i = 0; i < k; ++i) {
    edges.push_back({i, k, 1, 1});
    leaves.push_back(i);
  }
  StarGap g{gen_mwc_gadget(UndirGraph(k + 1, std::move(edges)), leaves), {}};
  const int vars = variable_offsets(g.instance.undirected()).back();
  g.witness.x.assign(vars, Rational(0));
  for (int i = 0; i < k; ++i) g.witness.x[i] = Rational(1, 2);
  return g;
}

namespace {

using LabelPath = std::vector<int>;

const std::vector<LabelPath>& wall_paths() {
  static const std::vector<LabelPath> paths = {
      {29, 1, 2, 11, 12, 19, 20, 25, 26, 30, 31, 32},
      {29, 11, 12, 3, 4, 13, 14, 21, 22, 27, 28, 32},
      {29, 19, 20, 13, 14, 5, 6, 15, 16, 23, 24, 32},
      {29, 25, 26, 21, 22, 15, 16, 7, 8, 17, 18, 32},
      {29, 30, 31, 27, 28, 23, 24, 17, 18, 9, 10, 32},
      {29, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 32},
      {29, 1, 2, 3, 4, 5, 6, 15, 16, 23, 24, 32},
      {29, 11, 12, 3, 4, 5, 6, 7, 8, 17, 18, 32},
  };
  return paths;
}

bool thick(int a, int b) {
  static const std::set<std::pair<int, int>> top = {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}};
  return top.count({a, b}) > 0;
}

}  // namespace

EscherWall gen_escher_wall() {
  std::set<std::pair<int, int>> label_edges;
  for (const LabelPath& p : wall_paths()) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) label_edges.insert({p[i], p[i + 1]});
  }

  EscherWall w;
  w.label.resize(32);
  for (int l = 1; l <= 32; ++l) w.label[l - 1] = l;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, NodeId> midpoint;
  // Variable (== entry) of the first hop of each label edge.
  std::map<std::pair<int, int>, int> first_hop;
  NodeId next = 32;
  for (const auto& [a, b] : label_edges) {
    first_hop[{a, b}] = static_cast<int>(edges.size());
    if (thick(a, b)) {
      edges.push_back({a - 1, b - 1, 1, 1});
    } else {
      midpoint[{a, b}] = next;
      w.label.push_back(0);
      edges.push_back({a - 1, next, 1, 1});
      edges.push_back({next, b - 1, 1, 1});
      ++next;
    }
  }
  w.s = 28;
  w.t = 31;
  w.instance = make_instance(Dag(next, std::move(edges)), CutKind::Edge, {w.s, w.t});

  std::vector<Path> paths;
  for (const LabelPath& p : wall_paths()) {
    Path path;
    for (std::size_t i = 0; i < p.size(); ++i) {
      path.nodes.push_back(p[i] - 1);
      if (i + 1 < p.size() && !thick(p[i], p[i + 1])) {
        path.nodes.push_back(midpoint.at({p[i], p[i + 1]}));
      }
    }
    paths.push_back(std::move(path));
  }
  for (int i = 0; i < 6; ++i) w.certificate.dual.flows.push_back({paths[i], Rational(1, 2)});
  w.certificate.tight_paths = paths;

  // Support A..H; the primal is the unique solution of the eight tight rows.
  const std::vector<std::pair<int, int>> support = {{1, 2},   {7, 8},   {9, 10},  {11, 12},
                                                    {13, 14}, {21, 22}, {23, 24}, {25, 26}};
  const Dag& dag = w.instance.dag();
  std::vector<std::vector<Rational>> a;
  for (const Path& p : paths) {
    const std::vector<int> vars = path_variables(dag, p);
    std::vector<Rational> row;
    for (const auto& key : support) {
      const int var = first_hop.at(key);
      row.push_back(static_cast<int>(std::count(vars.begin(), vars.end(), var)));
    }
    a.push_back(std::move(row));
  }
  const auto y = solve_square_system(a, std::vector<Rational>(paths.size(), Rational(1)));
  if (!y) fail(ErrorCode::InvalidArgument, "wall support system is singular");
  w.certificate.primal.x.assign(dag.edge_count(), Rational(0));
  for (std::size_t i = 0; i < support.size(); ++i) {
    w.certificate.primal.x[first_hop.at(support[i])] = (*y)[i];
  }
  return w;
}

}  // namespace oddcut
