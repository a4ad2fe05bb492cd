#include "oddcut/instance.hpp"

#include <algorithm>
#include <string>

#include "oddcut/error.hpp"

namespace oddcut {

int Instance::node_count() const {
  return std::visit([](const auto& g) { return g.node_count(); }, graph);
}

int Instance::edge_count() const {
  return std::visit([](const auto& g) { return g.edge_count(); }, graph);
}

int Instance::multiplicity(int edge) const {
  return std::visit([edge](const auto& g) { return g.edge(edge).multiplicity; }, graph);
}

std::vector<int> Instance::free_elements() const {
  std::vector<int> out;
  if (kind == CutKind::Node) {
    for (NodeId v = 0; v < node_count(); ++v) {
      if (!contains(protected_nodes, v)) out.push_back(v);
    }
  } else {
    for (int e = 0; e < edge_count(); ++e) {
      if (!std::binary_search(protected_edges.begin(), protected_edges.end(), e)) {
        out.push_back(e);
      }
    }
  }
  return out;
}

int Instance::weight(const std::vector<int>& elements) const {
  if (kind == CutKind::Node) return static_cast<int>(elements.size());
  int total = 0;
  for (int e : elements) total += multiplicity(e);
  return total;
}

Instance make_instance(std::variant<Dag, UndirGraph> graph, CutKind kind, NodeSet terminals,
                       NodeSet protected_nodes, std::vector<int> protected_edges,
                       std::optional<int> budget) {
  Instance inst;
  inst.graph = std::move(graph);
  inst.kind = kind;
  const int n = inst.node_count();
  for (NodeId v : terminals) {
    if (v < 0 || v >= n) fail(ErrorCode::BadNodeId, "terminal " + std::to_string(v));
  }
  for (NodeId v : protected_nodes) {
    if (v < 0 || v >= n) fail(ErrorCode::BadNodeId, "protected node " + std::to_string(v));
  }
  for (int e : protected_edges) {
    if (e < 0 || e >= inst.edge_count()) {
      fail(ErrorCode::InvalidArgument, "protected edge index " + std::to_string(e));
    }
  }
  if (budget && *budget < 0) fail(ErrorCode::InvalidArgument, "negative budget");
  inst.terminals = normalized(std::move(terminals));
  if (kind == CutKind::Node) {
    protected_nodes.insert(protected_nodes.end(), inst.terminals.begin(), inst.terminals.end());
  }
  inst.protected_nodes = normalized(std::move(protected_nodes));
  std::sort(protected_edges.begin(), protected_edges.end());
  protected_edges.erase(std::unique(protected_edges.begin(), protected_edges.end()),
                        protected_edges.end());
  inst.protected_edges = std::move(protected_edges);
  inst.budget = budget;
  return inst;
}

}  // namespace oddcut
