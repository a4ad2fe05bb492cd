#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oddcut::testing {

Matrix adjacency(const Dag& dag) {
  Matrix m(dag.node_count(), std::vector<char>(dag.node_count(), 0));
  for (const Edge& e : dag.edges()) m[e.tail][e.head] = 1;
  return m;
}

Matrix adjacency(const UndirGraph& graph) {
  Matrix m(graph.node_count(), std::vector<char>(graph.node_count(), 0));
  for (const UndirEdge& e : graph.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

std::vector<std::vector<int>> all_paths(const Matrix& adj, int s, int t,
                                        const std::vector<char>& dead) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  std::vector<int> path{s};
  std::vector<char> used(n, 0);
  used[s] = 1;
  std::function<void(int)> go = [&](int u) {
    if (u == t) {
      out.push_back(path);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (!adj[u][w] || used[w] || (!dead.empty() && dead[w])) continue;
      used[w] = 1;
      path.push_back(w);
      go(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  if (dead.empty() || !dead[s]) go(s);
  return out;
}

std::set<int> path_parities(const Matrix& adj, int u, int v) {
  std::set<int> out;
  for (const auto& p : all_paths(adj, u, v)) out.insert(static_cast<int>(p.size() - 1) % 2);
  return out;
}

bool odd_path_exists(const Dag& dag, int s, int t) {
  return path_parities(adjacency(dag), s, t).count(1) > 0;
}

NodeSet closure(const Matrix& adj, const NodeSet& from, const std::vector<char>& dead) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int x : from) {
    if ((dead.empty() || !dead[x]) && !seen[x]) {
      seen[x] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (adj[u][w] && !seen[w] && (dead.empty() || !dead[w])) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  NodeSet out;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

namespace {

// Adjacency after deleting edge entries (all copies of each deleted entry).
Matrix surviving_edges(const Instance& instance, const std::vector<int>& deleted) {
  const int n = instance.node_count();
  Matrix m(n, std::vector<char>(n, 0));
  std::vector<char> gone(instance.edge_count(), 0);
  for (int e : deleted) gone[e] = 1;
  for (int e = 0; e < instance.edge_count(); ++e) {
    if (gone[e]) continue;
    if (instance.directed()) {
      const Edge& edge = instance.dag().edge(e);
      m[edge.tail][edge.head] = 1;
    } else {
      const UndirEdge& edge = instance.undirected().edge(e);
      m[edge.u][edge.v] = m[edge.v][edge.u] = 1;
    }
  }
  return m;
}

bool odd_between_terminals(const Matrix& adj, const NodeSet& terminals,
                           const std::vector<char>& dead) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> is_terminal(n, 0);
  for (int t : terminals) is_terminal[t] = 1;
  std::vector<char> used(n, 0);
  std::function<bool(int, int, int)> go = [&](int start, int u, int len) {
    if (len % 2 == 1 && is_terminal[u] && u != start) return true;
    for (int w = 0; w < n; ++w) {
      if (!adj[u][w] || used[w] || dead[w]) continue;
      used[w] = 1;
      const bool hit = go(start, w, len + 1);
      used[w] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (int t : terminals) {
    if (dead[t]) continue;
    used[t] = 1;
    const bool hit = go(t, t, 0);
    used[t] = 0;
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool odd_t_path_after(const Instance& instance, const std::vector<int>& elements) {
  const int n = instance.node_count();
  std::vector<char> dead(n, 0);
  Matrix adj;
  if (instance.kind == CutKind::Node) {
    for (int v : elements) dead[v] = 1;
    adj = surviving_edges(instance, {});
  } else {
    adj = surviving_edges(instance, elements);
  }
  return odd_between_terminals(adj, instance.terminals, dead);
}

std::vector<NodeSet> subsets(const NodeSet& base, int max_size) {
  std::vector<NodeSet> out;
  const std::uint64_t count = std::uint64_t{1} << base.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (__builtin_popcountll(bits) > max_size) continue;
    NodeSet s;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (bits >> i & 1U) s.push_back(base[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<int> min_cut_weight(const Instance& instance) {
  NodeSet free;
  if (instance.kind == CutKind::Node) {
    for (int v = 0; v < instance.node_count(); ++v) {
      if (!std::binary_search(instance.protected_nodes.begin(), instance.protected_nodes.end(), v)) {
        free.push_back(v);
      }
    }
  } else {
    for (int e = 0; e < instance.edge_count(); ++e) {
      if (!std::binary_search(instance.protected_edges.begin(), instance.protected_edges.end(), e)) {
        free.push_back(e);
      }
    }
  }
  std::optional<int> best;
  for (const NodeSet& s : subsets(free)) {
    int w = 0;
    for (int x : s) w += instance.kind == CutKind::Node ? 1 : instance.multiplicity(x);
    if (best && w >= *best) continue;
    if (!odd_t_path_after(instance, s)) best = w;
  }
  return best;
}

std::vector<NodeSet> important_separators(const Dag& dag, int v, const NodeSet& terminals, int k,
                                          const NodeSet& protected_nodes) {
  const Matrix adj = adjacency(dag);
  const int n = dag.node_count();
  NodeSet free;
  for (int u = 0; u < n; ++u) {
    const bool blocked = u == v || std::count(terminals.begin(), terminals.end(), u) ||
                         std::count(protected_nodes.begin(), protected_nodes.end(), u);
    if (!blocked) free.push_back(u);
  }
  auto reach = [&](const NodeSet& cut) {
    std::vector<char> dead(n, 0);
    for (int u : cut) dead[u] = 1;
    return closure(adj, {v}, dead);
  };
  auto separates = [&](const NodeSet& cut) {
    const NodeSet r = reach(cut);
    for (int t : terminals) {
      if (std::binary_search(r.begin(), r.end(), t)) return false;
    }
    return true;
  };
  std::vector<NodeSet> seps;
  for (const NodeSet& s : subsets(free, k)) {
    if (separates(s)) seps.push_back(s);
  }
  std::vector<NodeSet> out;
  for (const NodeSet& s : seps) {
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      NodeSet rest = s;
      rest.erase(rest.begin() + static_cast<long>(i));
      if (separates(rest)) minimal = false;
    }
    if (!minimal) continue;
    const NodeSet mine = reach(s);
    bool dominated = false;
    for (const NodeSet& other : seps) {
      if (other.size() > s.size()) continue;
      const NodeSet theirs = reach(other);
      if (theirs.size() > mine.size() &&
          std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int min_vertex_cover(const UndirGraph& graph) {
  NodeSet all;
  for (int v = 0; v < graph.node_count(); ++v) all.push_back(v);
  int best = graph.node_count();
  for (const NodeSet& s : subsets(all)) {
    if (static_cast<int>(s.size()) >= best) continue;
    bool covers = true;
    for (const UndirEdge& e : graph.edges()) {
      if (!std::binary_search(s.begin(), s.end(), e.u) &&
          !std::binary_search(s.begin(), s.end(), e.v)) {
        covers = false;
        break;
      }
    }
    if (covers) best = static_cast<int>(s.size());
  }
  return best;
}

int min_multiway_cut(const UndirGraph& graph, const NodeSet& terminals) {
  NodeSet ids;
  for (int e = 0; e < graph.edge_count(); ++e) ids.push_back(e);
  int best = graph.edge_count();
  for (const NodeSet& s : subsets(ids)) {
    if (static_cast<int>(s.size()) >= best) continue;
    Matrix adj(graph.node_count(), std::vector<char>(graph.node_count(), 0));
    for (int e = 0; e < graph.edge_count(); ++e) {
      if (std::binary_search(s.begin(), s.end(), e)) continue;
      adj[graph.edge(e).u][graph.edge(e).v] = adj[graph.edge(e).v][graph.edge(e).u] = 1;
    }
    bool ok = true;
    for (int t : terminals) {
      const NodeSet r = closure(adj, {t});
      for (int u : terminals) {
        if (u != t && std::binary_search(r.begin(), r.end(), u)) ok = false;
      }
    }
    if (ok) best = static_cast<int>(s.size());
  }
  return best;
}

int min_odd_edge_blocker(const Dag& dag, int s, int t) {
  NodeSet ids;
  for (int e = 0; e < dag.edge_count(); ++e) ids.push_back(e);
  for (int size = 0; size <= dag.edge_count(); ++size) {
    std::vector<int> pick;
    std::function<bool(int)> go = [&](int from) {
      if (static_cast<int>(pick.size()) == size) {
        Matrix adj(dag.node_count(), std::vector<char>(dag.node_count(), 0));
        for (int e = 0; e < dag.edge_count(); ++e) {
          if (!std::count(pick.begin(), pick.end(), e)) adj[dag.edge(e).tail][dag.edge(e).head] = 1;
        }
        return path_parities(adj, s, t).count(1) == 0;
      }
      for (int e = from; e < dag.edge_count(); ++e) {
        pick.push_back(e);
        if (go(e + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (go(0)) return size;
  }
  return -1;
}

int edge_connectivity(const Dag& dag, int s, int t) {
  NodeSet ids;
  for (int e = 0; e < dag.edge_count(); ++e) ids.push_back(e);
  int best = dag.edge_count();
  for (const NodeSet& cut : subsets(ids)) {
    if (static_cast<int>(cut.size()) >= best) continue;
    Matrix adj(dag.node_count(), std::vector<char>(dag.node_count(), 0));
    for (int e = 0; e < dag.edge_count(); ++e) {
      if (!std::binary_search(cut.begin(), cut.end(), e)) adj[dag.edge(e).tail][dag.edge(e).head] = 1;
    }
    const NodeSet r = closure(adj, {s});
    if (!std::binary_search(r.begin(), r.end(), t)) best = static_cast<int>(cut.size());
  }
  return best;
}

bool is_bipartite(const UndirGraph& graph, const NodeSet& deleted) {
  const int n = graph.node_count();
  const Matrix adj = adjacency(graph);
  std::vector<int> colour(n, -1);
  for (int v : deleted) colour[v] = 2;
  for (int root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!adj[u][w] || colour[w] == 2) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          stack.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> min_oct(const UndirGraph& graph, const NodeSet& protected_nodes) {
  NodeSet free;
  for (int v = 0; v < graph.node_count(); ++v) {
    if (!std::count(protected_nodes.begin(), protected_nodes.end(), v)) free.push_back(v);
  }
  std::optional<int> best;
  for (const NodeSet& s : subsets(free)) {
    if (best && static_cast<int>(s.size()) >= *best) continue;
    if (is_bipartite(graph, s)) best = static_cast<int>(s.size());
  }
  return best;
}

}  // namespace oddcut::testing

namespace oddcut::testing {

bool push_hypothesis(const Dag& dag, const NodeSet& terminals, const NodeSet& protected_nodes,
                     const NodeSet& cut, int v) {
  std::vector<char> dead(dag.node_count(), 0);
  for (int u : cut) dead[u] = 1;
  if (dead[v]) return false;
  const NodeSet r = closure(adjacency(dag), {v}, dead);
  for (int t : terminals) {
    if (std::binary_search(r.begin(), r.end(), t)) return false;
  }
  for (const NodeSet& s : important_separators(dag, v, terminals,
                                               static_cast<int>(cut.size()), protected_nodes)) {
    if (std::includes(cut.begin(), cut.end(), s.begin(), s.end())) return false;
  }
  return true;
}

}  // namespace oddcut::testing
