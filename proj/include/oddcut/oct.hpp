#pragma once

#include <optional>

#include "oddcut/graph.hpp"

namespace oddcut {

struct OctInstance {
  UndirGraph graph;
  NodeSet protected_nodes;
  int budget = 0;
};

/// Minimum odd cycle transversal avoiding V∞ with at most `budget` nodes, or
/// nullopt. With `canonical` the lexicographically smallest minimum set is
/// returned.
std::optional<NodeSet> oct_solve(const OctInstance& instance, bool canonical = true);

/// ⟨G⟩ plus a protected node adjacent to every terminal, solved as OCT.
/// Returned ids refer to `dag`.
std::optional<NodeSet> solve_easy_instance(const Dag& dag, const NodeSet& protected_nodes,
                                           const NodeSet& terminals, int k,
                                           bool canonical = true);

}  // namespace oddcut
