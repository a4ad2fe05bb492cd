#include "oddcut/approx.hpp"

#include <algorithm>
#include <set>

#include "oddcut/error.hpp"
#include "oddcut/flow.hpp"
#include "oddcut/instance.hpp"
#include "oddcut/reductions.hpp"

namespace oddcut {

MinCut max_flow_min_cut(const Dag& dag, NodeId source, NodeId sink,
                        const std::vector<Rational>& capacities) {
  FlowNetwork<Rational> net(dag.node_count());
  std::vector<int> arcs;
  for (int e = 0; e < dag.edge_count(); ++e) {
    arcs.push_back(net.add_arc(dag.edge(e).tail, dag.edge(e).head, capacities[e]));
  }
  MinCut cut;
  cut.value = net.max_flow(source, sink);
  const Mask near = net.residual_from(source);
  for (int e = 0; e < dag.edge_count(); ++e) {
    if (near[dag.edge(e).tail] && !near[dag.edge(e).head]) cut.cut_edges.push_back(e);
  }
  return cut;
}

Rational edge_set_cost(const Dag& dag, const std::vector<int>& edges) {
  Rational sum = 0;
  for (int e : edges) sum += dag.edge(e).cost * dag.edge(e).multiplicity;
  return sum;
}

std::optional<std::vector<int>> approx2_odd_blocker(const Dag& dag, NodeId s, NodeId t,
                                                    const std::vector<int>& protected_edges) {
  if (s == t) fail(ErrorCode::SameNode, "s and t must differ");
  const Dag cover = double_cover(dag);
  const std::set<int> guarded(protected_edges.begin(), protected_edges.end());
  // Anything above the total finite cost acts as infinity.
  Rational infinite = 1;
  for (int e = 0; e < dag.edge_count(); ++e) {
    if (!guarded.count(e)) infinite += 2 * dag.edge(e).cost * dag.edge(e).multiplicity;
  }
  std::vector<Rational> capacity;
  for (int e = 0; e < dag.edge_count(); ++e) {
    const Rational c =
        guarded.count(e) ? infinite : dag.edge(e).cost * dag.edge(e).multiplicity;
    capacity.push_back(c);
    capacity.push_back(c);
  }
  const MinCut cut = max_flow_min_cut(cover, left_copy(s), right_copy(t), capacity);
  if (cut.value >= infinite) return std::nullopt;
  std::set<int> projected;
  for (int image : cut.cut_edges) projected.insert(image / 2);
  return std::vector<int>(projected.begin(), projected.end());
}

std::optional<NodeSet> approx2_node_blocker(const Dag& dag, NodeId s, NodeId t,
                                            const NodeSet& protected_nodes) {
  const Instance node = make_instance(dag, CutKind::Node, {s, t}, protected_nodes);
  const NodeToEdge reduced = nodecut_to_edgecut(node);
  auto edges = approx2_odd_blocker(reduced.instance.dag(), 3 * s, 3 * t,
                                   reduced.instance.protected_edges);
  if (!edges) return std::nullopt;
  return reduced.lift(*edges);
}

}  // namespace oddcut
