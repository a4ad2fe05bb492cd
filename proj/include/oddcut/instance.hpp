#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

enum class CutKind { Node, Edge };

struct Instance {
  std::variant<Dag, UndirGraph> graph;
  CutKind kind = CutKind::Node;
  NodeSet terminals;
  NodeSet protected_nodes;
  /// Sorted edge-entry indices.
  std::vector<int> protected_edges;
  std::optional<int> budget;

  bool directed() const { return std::holds_alternative<Dag>(graph); }
  const Dag& dag() const { return std::get<Dag>(graph); }
  const UndirGraph& undirected() const { return std::get<UndirGraph>(graph); }
  int node_count() const;
  int edge_count() const;
  int multiplicity(int edge) const;

  /// Elements that may be deleted: unprotected nodes or unprotected edge entries.
  std::vector<int> free_elements() const;

  /// Cost of deleting `elements`: one per node, multiplicity per edge entry.
  int weight(const std::vector<int>& elements) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Node-kind instances get T folded into V∞; sets are sorted.
Instance make_instance(std::variant<Dag, UndirGraph> graph, CutKind kind, NodeSet terminals,
                       NodeSet protected_nodes = {}, std::vector<int> protected_edges = {},
                       std::optional<int> budget = std::nullopt);

}  // namespace oddcut
