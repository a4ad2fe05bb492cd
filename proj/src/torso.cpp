#include "oddcut/torso.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "oddcut/error.hpp"

namespace oddcut {

namespace {

NodeSet outside_reach(const Dag& dag, const NodeSet& terminals, const NodeSet& cut) {
  const Mask removed = make_mask(dag.node_count(), cut);
  const Mask reached = make_mask(dag.node_count(), reachable_from(dag, terminals, {&removed}));
  NodeSet out;
  for (NodeId v = 0; v < dag.node_count(); ++v) {
    if (!removed[v] && !reached[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

NodeSet forward_shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut) {
  return outside_reach(dag, terminals, cut);
}

NodeSet reverse_shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut) {
  return outside_reach(dag.reversed(), terminals, cut);
}

NodeSet shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut) {
  NodeSet f = forward_shadow(dag, terminals, cut);
  NodeSet r = reverse_shadow(dag, terminals, cut);
  NodeSet out;
  std::set_union(f.begin(), f.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

bool is_thin(const Dag& dag, const NodeSet& terminals, const NodeSet& cut) {
  for (NodeId v : cut) {
    NodeSet rest;
    for (NodeId w : cut) {
      if (w != v) rest.push_back(w);
    }
    if (contains(reverse_shadow(dag, terminals, rest), v)) return false;
  }
  return true;
}

TorsoResult torso(const Dag& dag, const NodeSet& terminals, const NodeSet& protected_nodes,
                  const NodeSet& z) {
  const int n = dag.node_count();
  for (NodeId v : z) {
    if (v < 0 || v >= n) fail(ErrorCode::BadNodeId, "node " + std::to_string(v) + " in Z");
    if (contains(terminals, v)) {
      fail(ErrorCode::TerminalInZ, "terminal " + std::to_string(v) + " in Z");
    }
  }
  const Mask in_z = make_mask(n, z);

  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> direct;
  for (const Edge& e : dag.edges()) {
    if (in_z[e.tail] || in_z[e.head]) continue;
    edges.push_back(e);
    direct.insert({e.tail, e.head});
  }

  // Per source u: parity of u -> z paths whose interior lies in Z, then one
  // more hop out of Z decides odd (edge) or even (gadget) connections.
  std::set<std::pair<NodeId, NodeId>> odd_pairs, even_pairs;
  for (NodeId u = 0; u < n; ++u) {
    if (in_z[u]) continue;
    std::vector<ParityFlags> reach(n);
    for (int e : dag.out_edges(u)) {
      NodeId w = dag.edge(e).head;
      if (in_z[w]) reach[w].odd = true;
    }
    for (NodeId x : dag.topo_order()) {
      if (!in_z[x] || (!reach[x].even && !reach[x].odd)) continue;
      for (int e : dag.out_edges(x)) {
        NodeId w = dag.edge(e).head;
        if (in_z[w]) {
          if (reach[x].even) reach[w].odd = true;
          if (reach[x].odd) reach[w].even = true;
        } else {
          if (reach[x].even) odd_pairs.insert({u, w});
          if (reach[x].odd) even_pairs.insert({u, w});
        }
      }
    }
  }

  for (const auto& [u, v] : odd_pairs) {
    if (direct.insert({u, v}).second) edges.push_back({u, v, 1, 1});
  }
  TorsoResult result;
  NodeId next = n;
  for (const auto& [u, v] : even_pairs) {
    edges.push_back({u, next, 1, 1});
    edges.push_back({next, v, 1, 1});
    result.origin.push_back({u, v});
    ++next;
  }

  result.graph = Dag(next, std::move(edges));
  for (NodeId v : protected_nodes) {
    if (!in_z[v]) result.protected_nodes.push_back(v);
  }
  for (NodeId x = n; x < next; ++x) result.protected_nodes.push_back(x);
  result.protected_nodes = normalized(std::move(result.protected_nodes));
  result.removed = normalized(z);
  return result;
}

}  // namespace oddcut
