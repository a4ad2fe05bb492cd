#include "oddcut/oct.hpp"

#include <cstdint>
#include <queue>

#include "oddcut/flow.hpp"

namespace oddcut {

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Colours the live part of `adj`; empty result means an odd cycle.
std::vector<int> colour(const Adjacency& adj, const Mask& live) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> c(n, -1);
  for (int root = 0; root < n; ++root) {
    if (!live[root] || c[root] != -1) continue;
    c[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : adj[u]) {
        if (!live[w]) continue;
        if (c[w] == -1) {
          c[w] = 1 - c[u];
          queue.push(w);
        } else if (c[w] == c[u]) {
          return {};
        }
      }
    }
  }
  if (n == 0) c.push_back(0);
  return c;
}

bool bipartite(const Adjacency& adj, const Mask& live) { return !colour(adj, live).empty(); }

// Smallest node set of `live` \ S meeting every path between a keep-type and
// a flip-type node; endpoints are deletable themselves.
std::optional<std::vector<int>> split_cut(const Adjacency& adj, const Mask& rest,
                                          const std::vector<int>& keep,
                                          const std::vector<int>& flip, int budget) {
  const int n = static_cast<int>(adj.size());
  FlowNetwork<std::int64_t> net(2 * n + 2);
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  for (int u = 0; u < n; ++u) {
    if (!rest[u]) continue;
    net.add_arc(2 * u, 2 * u + 1, 1);
    for (int w : adj[u]) {
      if (rest[w]) net.add_arc(2 * u + 1, 2 * w, kInfiniteCapacity);
    }
  }
  for (int u : keep) net.add_arc(source, 2 * u, kInfiniteCapacity);
  for (int u : flip) net.add_arc(2 * u + 1, sink, kInfiniteCapacity);
  if (net.max_flow(source, sink, std::int64_t{budget}) > budget) return std::nullopt;
  const Mask near = net.residual_from(source);
  std::vector<int> cut;
  for (int u = 0; u < n; ++u) {
    if (rest[u] && near[2 * u] && !near[2 * u + 1]) cut.push_back(u);
  }
  return cut;
}

// One compression step: `s` is an OCT of the live graph with |s| = k + 1.
std::optional<std::vector<int>> compress(const Adjacency& adj, const Mask& live,
                                         const std::vector<int>& s, int k) {
  const int n = static_cast<int>(adj.size());
  Mask rest = live;
  for (int v : s) rest[v] = 0;
  const std::vector<int> c = colour(adj, rest);

  std::vector<int> side(n, -1);  // 0 = L, 1 = R, 2 = deleted
  const int m = static_cast<int>(s.size());
  std::vector<int> digits(m, 0);
  while (true) {
    int deleted = 0;
    for (int i = 0; i < m; ++i) {
      side[s[i]] = digits[i];
      if (digits[i] == 2) ++deleted;
    }
    bool ok = deleted <= k;
    for (int i = 0; i < m && ok; ++i) {
      if (digits[i] == 2) continue;
      for (int w : adj[s[i]]) {
        if (live[w] && side[w] == digits[i] && !rest[w]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<int> keep, flip;
      for (int u = 0; u < n; ++u) {
        if (!rest[u]) continue;
        bool to_keep = false, to_flip = false;
        for (int w : adj[u]) {
          if (rest[w] || !live[w] || side[w] == 2 || side[w] == -1) continue;
          // Neighbour on side L forces u to R (1), on side R forces u to L (0).
          const int wanted = 1 - side[w];
          (wanted == c[u] ? to_keep : to_flip) = true;
        }
        if (to_keep) keep.push_back(u);
        if (to_flip) flip.push_back(u);
      }
      if (auto cut = split_cut(adj, rest, keep, flip, k - deleted)) {
        for (int i = 0; i < m; ++i) {
          if (digits[i] == 2) cut->push_back(s[i]);
        }
        for (int v : s) side[v] = -1;
        return cut;
      }
    }
    int i = 0;
    while (i < m && digits[i] == 2) digits[i++] = 0;
    if (i == m) break;
    ++digits[i];
  }
  for (int v : s) side[v] = -1;
  return std::nullopt;
}

// Unprotected OCT of the `live` part with at most k nodes.
std::optional<std::vector<int>> oct_core(const Adjacency& adj, const Mask& live, int k) {
  const int n = static_cast<int>(adj.size());
  if (bipartite(adj, live)) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  Mask active(n, 0);
  Mask remaining(n, 0);
  std::vector<int> s;
  for (int v = 0; v < n; ++v) {
    if (!live[v]) continue;
    active[v] = 1;
    remaining[v] = 1;
    if (bipartite(adj, remaining)) continue;
    s.push_back(v);
    remaining[v] = 0;
    if (static_cast<int>(s.size()) <= k) continue;
    auto next = compress(adj, active, s, k);
    if (!next) return std::nullopt;
    s = std::move(*next);
    remaining = active;
    for (int u : s) remaining[u] = 0;
  }
  return s;
}

struct Expanded {
  Adjacency adj;
  std::vector<NodeId> original;
};

// Each protected node becomes k + 1 twins, one node at a time.
Expanded expand(const UndirGraph& graph, const Mask& removed, const Mask& guarded, int k) {
  const int n = graph.node_count();
  std::vector<std::vector<int>> copies(n);
  Expanded e;
  for (NodeId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    const int count = guarded[v] ? k + 1 : 1;
    for (int i = 0; i < count; ++i) {
      copies[v].push_back(static_cast<int>(e.original.size()));
      e.original.push_back(v);
    }
  }
  e.adj.assign(e.original.size(), {});
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : graph.neighbors(v)) {
      if (removed[w]) continue;
      for (int a : copies[v]) {
        for (int b : copies[w]) e.adj[a].push_back(b);
      }
    }
  }
  return e;
}

std::optional<NodeSet> decide(const UndirGraph& graph, const Mask& removed, const Mask& guarded,
                              int k) {
  if (k < 0) return std::nullopt;
  Expanded e = expand(graph, removed, guarded, k);
  const Mask live(e.original.size(), 1);
  auto found = oct_core(e.adj, live, k);
  if (!found) return std::nullopt;
  NodeSet out;
  for (int a : *found) {
    if (!guarded[e.original[a]]) out.push_back(e.original[a]);
  }
  return normalized(std::move(out));
}

}  // namespace

std::optional<NodeSet> oct_solve(const OctInstance& instance, bool canonical) {
  const UndirGraph& graph = instance.graph;
  const int n = graph.node_count();
  Mask removed(n, 0);
  Mask guarded = make_mask(n, instance.protected_nodes);

  std::optional<NodeSet> best;
  int size = 0;
  for (; size <= instance.budget; ++size) {
    best = decide(graph, removed, guarded, size);
    if (best) break;
  }
  if (!best || !canonical || best->empty()) return best;

  NodeSet chosen;
  for (NodeId u = 0; u < n && static_cast<int>(chosen.size()) < size; ++u) {
    if (guarded[u]) continue;
    removed[u] = 1;
    if (decide(graph, removed, guarded, size - static_cast<int>(chosen.size()) - 1)) {
      chosen.push_back(u);
    } else {
      removed[u] = 0;
      guarded[u] = 1;
    }
  }
  return chosen;
}

std::optional<NodeSet> solve_easy_instance(const Dag& dag, const NodeSet& protected_nodes,
                                           const NodeSet& terminals, int k, bool canonical) {
  const int n = dag.node_count();
  std::vector<UndirEdge> edges;
  for (const Edge& e : dag.edges()) edges.push_back({e.tail, e.head, 1, 1});
  for (NodeId t : terminals) edges.push_back({n, t, 1, 1});
  NodeSet guarded = protected_nodes;
  guarded.push_back(n);
  OctInstance oct{UndirGraph(n + 1, std::move(edges)), normalized(std::move(guarded)), k};
  return oct_solve(oct, canonical);
}

}  // namespace oddcut
