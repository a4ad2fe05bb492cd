#pragma once

#include <optional>
#include <vector>

#include "oddcut/graph.hpp"
#include "oddcut/rational.hpp"

namespace oddcut {

struct MinCut {
  Rational value;
  /// Edge entries crossing from the source side to the sink side.
  std::vector<int> cut_edges;
};

/// Exact max-flow / min-cut on `dag` with one capacity per edge entry.
MinCut max_flow_min_cut(const Dag& dag, NodeId source, NodeId sink,
                        const std::vector<Rational>& capacities);

/// Min s_L -> t_R cut of the double cover with cost x multiplicity on both
/// images of each edge, projected back. Entries in `protected_edges` are
/// uncuttable; nullopt when a protected odd s -> t path exists.
/// Throws SameNode.
std::optional<std::vector<int>> approx2_odd_blocker(const Dag& dag, NodeId s, NodeId t,
                                                    const std::vector<int>& protected_edges = {});

/// Node version through the node-to-edge reduction; returns node ids.
std::optional<NodeSet> approx2_node_blocker(const Dag& dag, NodeId s, NodeId t,
                                            const NodeSet& protected_nodes);

/// Σ cost x multiplicity over the given entries.
Rational edge_set_cost(const Dag& dag, const std::vector<int>& edges);

}  // namespace oddcut
