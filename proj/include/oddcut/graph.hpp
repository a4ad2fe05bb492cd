#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oddcut/rational.hpp"

namespace oddcut {

using NodeId = int;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

/// Indicator vector indexed by node id (or edge index).
using Mask = std::vector<char>;

Mask make_mask(std::size_t size, std::span<const NodeId> members);
NodeSet mask_to_set(const Mask& mask);
NodeSet normalized(NodeSet set);
bool contains(const NodeSet& set, NodeId v);

/// One edge entry. Parallel edges are a single entry with multiplicity > 1.
struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Rational cost = 1;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed acyclic graph with a deterministic topological order
/// (Kahn's algorithm, smallest id first).
class Dag {
 public:
  Dag() = default;

  /// Throws BadNodeId on out-of-range endpoints and CycleDetected on cycles
  /// (self-loops included).
  Dag(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const NodeId> successors(NodeId v) const { return succ_[v]; }
  std::span<const NodeId> predecessors(NodeId v) const { return pred_[v]; }
  std::span<const int> out_edges(NodeId v) const { return out_[v]; }
  std::span<const int> in_edges(NodeId v) const { return in_[v]; }
  const std::vector<NodeId>& topo_order() const { return topo_; }

  bool has_edge(NodeId u, NodeId v) const;

  /// Same node set, every edge flipped.
  Dag reversed() const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> succ_, pred_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<NodeId> topo_;
};

struct UndirEdge {
  NodeId u = 0;
  NodeId v = 0;
  Rational cost = 1;
  int multiplicity = 1;

  friend bool operator==(const UndirEdge&, const UndirEdge&) = default;
};

class UndirGraph {
 public:
  UndirGraph() = default;

  /// Throws BadNodeId or SelfLoop.
  UndirGraph(int node_count, std::vector<UndirEdge> edges);

  int node_count() const { return node_count_; }
  const std::vector<UndirEdge>& edges() const { return edges_; }
  const UndirEdge& edge(int index) const { return edges_[index]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
  std::span<const int> incident_edges(NodeId v) const { return inc_[v]; }

  bool has_edge(NodeId u, NodeId v) const;

  friend bool operator==(const UndirGraph& a, const UndirGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<UndirEdge> edges_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::vector<int>> inc_;
};

/// Underlying undirected graph <G>.
UndirGraph underlying(const Dag& dag);

struct Path {
  std::vector<NodeId> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  bool odd() const { return length() % 2 == 1; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Double cover: v_L = 2v, v_R = 2v + 1.
inline NodeId left_copy(NodeId v) { return 2 * v; }
inline NodeId right_copy(NodeId v) { return 2 * v + 1; }

/// Bipartite double cover: each edge uv becomes u_L->v_R and u_R->v_L, with
/// cost and multiplicity copied to both images. Image edges of input edge i
/// are entries 2i (u_L->v_R) and 2i+1 (u_R->v_L).
Dag double_cover(const Dag& dag);

/// Removal filters shared by the reachability routines. Null means "none".
struct Removed {
  const Mask* nodes = nullptr;
  const Mask* edges = nullptr;

  bool node(NodeId v) const { return nodes != nullptr && (*nodes)[v]; }
  bool edge(int e) const { return edges != nullptr && (*edges)[e]; }
};

/// True iff an odd simple s->t path exists. Throws SameNode if s == t.
bool has_odd_path(const Dag& dag, NodeId s, NodeId t, Removed removed = {});

struct ParityFlags {
  bool even = false;
  bool odd = false;

  friend bool operator==(const ParityFlags&, const ParityFlags&) = default;
};

/// For every node, whether an even / odd path from some source reaches it.
/// A source reaches itself by the empty (even) path.
std::vector<ParityFlags> parity_reach(const Dag& dag,
                                      std::span<const NodeId> sources,
                                      Removed removed = {});

/// R_G(X): nodes reachable from X, including X itself (removed nodes excluded).
NodeSet reachable_from(const Dag& dag, std::span<const NodeId> sources,
                       Removed removed = {});
NodeSet reachable_from(const UndirGraph& graph, std::span<const NodeId> sources,
                       Removed removed = {});

enum class ParityFilter { Any, OddOnly, EvenOnly };

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// All simple paths whose two (distinct) end nodes lie in `terminals`, in
/// lexicographic order of node sequences. Undirected paths are reported once,
/// oriented so that the first node is smaller than the last.
/// Throws ExplosionCap when more than `cap` paths would be produced.
std::vector<Path> enumerate_t_paths(const Dag& dag, std::span<const NodeId> terminals,
                                    ParityFilter filter = ParityFilter::Any,
                                    std::size_t cap = kDefaultPathCap,
                                    Removed removed = {});
std::vector<Path> enumerate_t_paths(const UndirGraph& graph,
                                    std::span<const NodeId> terminals,
                                    ParityFilter filter = ParityFilter::Any,
                                    std::size_t cap = kDefaultPathCap,
                                    Removed removed = {});

/// All simple s->t paths in lexicographic order.
std::vector<Path> enumerate_paths(const Dag& dag, NodeId s, NodeId t,
                                  std::size_t cap = kDefaultPathCap,
                                  Removed removed = {});
std::vector<Path> enumerate_paths(const UndirGraph& graph, NodeId s, NodeId t,
                                  std::size_t cap = kDefaultPathCap,
                                  Removed removed = {});

/// Depth-first search for an odd simple path between two distinct terminals
/// of an undirected graph. Exponential in the worst case.
bool has_odd_t_path(const UndirGraph& graph, std::span<const NodeId> terminals,
                    Removed removed = {});

/// Two-colours `graph` minus removed nodes: colour 0/1 per node, -1 for removed
/// nodes, nullopt when an odd cycle remains.
std::optional<std::vector<int>> two_coloring(const UndirGraph& graph, Removed removed = {});

}  // namespace oddcut
