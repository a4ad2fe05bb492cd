#include "oddcut/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <string>

#include "oddcut/error.hpp"

namespace oddcut {

Mask make_mask(std::size_t size, std::span<const NodeId> members) {
  Mask mask(size, 0);
  for (NodeId v : members) {
    if (v >= 0 && static_cast<std::size_t>(v) < size) mask[v] = 1;
  }
  return mask;
}

NodeSet mask_to_set(const Mask& mask) {
  NodeSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

NodeSet normalized(NodeSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool contains(const NodeSet& set, NodeId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

namespace {

void check_node(NodeId v, int n) {
  if (v < 0 || v >= n) {
    fail(ErrorCode::BadNodeId,
         "node id " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

void sort_unique(std::vector<NodeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Dag::Dag(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) fail(ErrorCode::InvalidArgument, "negative node count");
  succ_.assign(node_count_, {});
  pred_.assign(node_count_, {});
  out_.assign(node_count_, {});
  in_.assign(node_count_, {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    check_node(e.tail, node_count_);
    check_node(e.head, node_count_);
    if (e.multiplicity < 1) fail(ErrorCode::InvalidArgument, "multiplicity must be positive");
    if (e.cost < 0) fail(ErrorCode::InvalidArgument, "negative edge cost");
    if (e.tail == e.head) {
      fail(ErrorCode::CycleDetected, "self-loop at node " + std::to_string(e.tail));
    }
    succ_[e.tail].push_back(e.head);
    pred_[e.head].push_back(e.tail);
    out_[e.tail].push_back(i);
    in_[e.head].push_back(i);
  }
  for (int v = 0; v < node_count_; ++v) {
    sort_unique(succ_[v]);
    sort_unique(pred_[v]);
  }

  std::vector<int> indegree(node_count_);
  for (int v = 0; v < node_count_; ++v) indegree[v] = static_cast<int>(pred_[v].size());
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (int v = 0; v < node_count_; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  topo_.reserve(node_count_);
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (NodeId w : succ_[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(topo_.size()) != node_count_) {
    fail(ErrorCode::CycleDetected, "edge set contains a directed cycle");
  }
}

bool Dag::has_edge(NodeId u, NodeId v) const {
  return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
}

Dag Dag::reversed() const {
  std::vector<Edge> flipped = edges_;
  for (Edge& e : flipped) std::swap(e.tail, e.head);
  return Dag(node_count_, std::move(flipped));
}

UndirGraph::UndirGraph(int node_count, std::vector<UndirEdge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) fail(ErrorCode::InvalidArgument, "negative node count");
  adj_.assign(node_count_, {});
  inc_.assign(node_count_, {});
  for (int i = 0; i < edge_count(); ++i) {
    const UndirEdge& e = edges_[i];
    check_node(e.u, node_count_);
    check_node(e.v, node_count_);
    if (e.multiplicity < 1) fail(ErrorCode::InvalidArgument, "multiplicity must be positive");
    if (e.cost < 0) fail(ErrorCode::InvalidArgument, "negative edge cost");
    if (e.u == e.v) fail(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    inc_[e.u].push_back(i);
    inc_[e.v].push_back(i);
  }
  for (auto& list : adj_) sort_unique(list);
}

bool UndirGraph::has_edge(NodeId u, NodeId v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

UndirGraph underlying(const Dag& dag) {
  std::vector<UndirEdge> edges;
  edges.reserve(dag.edges().size());
  for (const Edge& e : dag.edges()) edges.push_back({e.tail, e.head, e.cost, e.multiplicity});
  return UndirGraph(dag.node_count(), std::move(edges));
}

Dag double_cover(const Dag& dag) {
  std::vector<Edge> edges;
  edges.reserve(2 * dag.edges().size());
  for (const Edge& e : dag.edges()) {
    edges.push_back({left_copy(e.tail), right_copy(e.head), e.cost, e.multiplicity});
    edges.push_back({right_copy(e.tail), left_copy(e.head), e.cost, e.multiplicity});
  }
  return Dag(2 * dag.node_count(), std::move(edges));
}

std::vector<ParityFlags> parity_reach(const Dag& dag, std::span<const NodeId> sources,
                                      Removed removed) {
  std::vector<ParityFlags> reach(dag.node_count());
  for (NodeId s : sources) {
    check_node(s, dag.node_count());
    if (!removed.node(s)) reach[s].even = true;
  }
  // Walks in a DAG are paths, so a topological sweep is exact.
  for (NodeId u : dag.topo_order()) {
    const ParityFlags from = reach[u];
    if (!from.even && !from.odd) continue;
    for (int e : dag.out_edges(u)) {
      if (removed.edge(e)) continue;
      NodeId w = dag.edge(e).head;
      if (removed.node(w)) continue;
      if (from.even) reach[w].odd = true;
      if (from.odd) reach[w].even = true;
    }
  }
  return reach;
}

bool has_odd_path(const Dag& dag, NodeId s, NodeId t, Removed removed) {
  check_node(s, dag.node_count());
  check_node(t, dag.node_count());
  if (s == t) fail(ErrorCode::SameNode, "s and t must differ");
  const NodeId source[] = {s};
  return parity_reach(dag, source, removed)[t].odd;
}

namespace {

template <typename Graph, typename NeighborFn>
NodeSet bfs_closure(const Graph& graph, std::span<const NodeId> sources, Removed removed,
                    NeighborFn&& for_each_neighbor) {
  const int n = graph.node_count();
  Mask seen(n, 0);
  std::queue<NodeId> queue;
  for (NodeId s : sources) {
    check_node(s, n);
    if (removed.node(s) || seen[s]) continue;
    seen[s] = 1;
    queue.push(s);
  }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop();
    for_each_neighbor(u, [&](NodeId w) {
      if (!removed.node(w) && !seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    });
  }
  return mask_to_set(seen);
}

}  // namespace

NodeSet reachable_from(const Dag& dag, std::span<const NodeId> sources, Removed removed) {
  return bfs_closure(dag, sources, removed, [&](NodeId u, auto&& visit) {
    for (int e : dag.out_edges(u)) {
      if (!removed.edge(e)) visit(dag.edge(e).head);
    }
  });
}

NodeSet reachable_from(const UndirGraph& graph, std::span<const NodeId> sources,
                       Removed removed) {
  return bfs_closure(graph, sources, removed, [&](NodeId u, auto&& visit) {
    for (int e : graph.incident_edges(u)) {
      if (removed.edge(e)) continue;
      const UndirEdge& edge = graph.edge(e);
      visit(edge.u == u ? edge.v : edge.u);
    }
  });
}

namespace {

// Sorted, de-duplicated neighbour lists after dropping removed edges.
template <typename Graph>
std::vector<std::vector<NodeId>> live_adjacency(const Graph& graph, Removed removed) {
  std::vector<std::vector<NodeId>> adj(graph.node_count());
  for (int i = 0; i < graph.edge_count(); ++i) {
    if (removed.edge(i)) continue;
    if constexpr (std::is_same_v<Graph, Dag>) {
      const Edge& e = graph.edge(i);
      adj[e.tail].push_back(e.head);
    } else {
      const UndirEdge& e = graph.edge(i);
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  for (auto& list : adj) sort_unique(list);
  return adj;
}

class PathWalker {
 public:
  PathWalker(const std::vector<std::vector<NodeId>>& adj, Removed removed, std::size_t cap)
      : adj_(adj), removed_(removed), cap_(cap), on_path_(adj.size(), 0) {}

  template <typename Accept>
  void walk_from(NodeId start, Accept&& accept, std::vector<Path>& out) {
    if (removed_.node(start)) return;
    path_.assign(1, start);
    on_path_[start] = 1;
    extend(accept, out);
    on_path_[start] = 0;
  }

 private:
  template <typename Accept>
  void extend(Accept& accept, std::vector<Path>& out) {
    NodeId u = path_.back();
    for (NodeId w : adj_[u]) {
      if (on_path_[w] || removed_.node(w)) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      if (accept(path_)) {
        if (out.size() >= cap_) {
          fail(ErrorCode::ExplosionCap,
               "path enumeration exceeded cap of " + std::to_string(cap_));
        }
        out.push_back(Path{path_});
      }
      extend(accept, out);
      on_path_[w] = 0;
      path_.pop_back();
    }
  }

  const std::vector<std::vector<NodeId>>& adj_;
  Removed removed_;
  std::size_t cap_;
  Mask on_path_;
  std::vector<NodeId> path_;
};

bool parity_ok(std::size_t length, ParityFilter filter) {
  switch (filter) {
    case ParityFilter::Any: return true;
    case ParityFilter::OddOnly: return length % 2 == 1;
    case ParityFilter::EvenOnly: return length % 2 == 0;
  }
  return true;
}

template <typename Graph>
std::vector<Path> t_paths_impl(const Graph& graph, std::span<const NodeId> terminals,
                               ParityFilter filter, std::size_t cap, Removed removed,
                               bool undirected) {
  const Mask is_terminal = make_mask(graph.node_count(), terminals);
  for (NodeId t : terminals) check_node(t, graph.node_count());
  const auto adj = live_adjacency(graph, removed);
  PathWalker walker(adj, removed, cap);
  std::vector<Path> out;
  for (NodeId s : mask_to_set(is_terminal)) {
    walker.walk_from(
        s,
        [&](const std::vector<NodeId>& p) {
          if (!is_terminal[p.back()]) return false;
          if (undirected && p.front() > p.back()) return false;
          return parity_ok(p.size() - 1, filter);
        },
        out);
  }
  return out;
}

template <typename Graph>
std::vector<Path> st_paths_impl(const Graph& graph, NodeId s, NodeId t, std::size_t cap,
                                Removed removed) {
  check_node(s, graph.node_count());
  check_node(t, graph.node_count());
  if (s == t) fail(ErrorCode::SameNode, "s and t must differ");
  // Paths end at t, so t is never extended.
  auto adj = live_adjacency(graph, removed);
  adj[t].clear();
  PathWalker walker(adj, removed, cap);
  std::vector<Path> out;
  walker.walk_from(s, [&](const std::vector<NodeId>& p) { return p.back() == t; },
                          out);
  return out;
}

}  // namespace

std::vector<Path> enumerate_t_paths(const Dag& dag, std::span<const NodeId> terminals,
                                    ParityFilter filter, std::size_t cap, Removed removed) {
  return t_paths_impl(dag, terminals, filter, cap, removed, false);
}

std::vector<Path> enumerate_t_paths(const UndirGraph& graph, std::span<const NodeId> terminals,
                                    ParityFilter filter, std::size_t cap, Removed removed) {
  return t_paths_impl(graph, terminals, filter, cap, removed, true);
}

std::vector<Path> enumerate_paths(const Dag& dag, NodeId s, NodeId t, std::size_t cap,
                                  Removed removed) {
  return st_paths_impl(dag, s, t, cap, removed);
}

std::vector<Path> enumerate_paths(const UndirGraph& graph, NodeId s, NodeId t,
                                  std::size_t cap, Removed removed) {
  return st_paths_impl(graph, s, t, cap, removed);
}

bool has_odd_t_path(const UndirGraph& graph, std::span<const NodeId> terminals,
                    Removed removed) {
  const int n = graph.node_count();
  const Mask is_terminal = make_mask(n, terminals);
  const auto adj = live_adjacency(graph, removed);
  Mask on_path(n, 0);

  std::function<bool(NodeId, NodeId, std::size_t)> search = [&](NodeId start, NodeId u,
                                                                std::size_t length) {
    for (NodeId w : adj[u]) {
      if (on_path[w] || removed.node(w)) continue;
      if (is_terminal[w] && length % 2 == 0) return true;  // length + 1 is odd
      on_path[w] = 1;
      const bool found = search(start, w, length + 1);
      on_path[w] = 0;
      if (found) return true;
    }
    return false;
  };

  for (NodeId s : mask_to_set(is_terminal)) {
    if (removed.node(s)) continue;
    on_path[s] = 1;
    const bool found = search(s, s, 0);
    on_path[s] = 0;
    if (found) return true;
  }
  return false;
}

std::optional<std::vector<int>> two_coloring(const UndirGraph& graph, Removed removed) {
  const int n = graph.node_count();
  std::vector<int> color(n, -1);
  for (NodeId root = 0; root < n; ++root) {
    if (removed.node(root) || color[root] != -1) continue;
    color[root] = 0;
    std::queue<NodeId> queue;
    queue.push(root);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop();
      for (int e : graph.incident_edges(u)) {
        if (removed.edge(e)) continue;
        const UndirEdge& edge = graph.edge(e);
        NodeId w = edge.u == u ? edge.v : edge.u;
        if (removed.node(w)) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace oddcut
