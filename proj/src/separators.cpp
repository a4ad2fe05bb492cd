#include "oddcut/separators.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "oddcut/error.hpp"
#include "oddcut/flow.hpp"
#include "oddcut/torso.hpp"

namespace oddcut {

namespace {

using Network = FlowNetwork<std::int64_t>;

// Node v splits into in = 2v and out = 2v + 1; 2n and 2n + 1 are the
// super source and sink.
struct SplitNetwork {
  Network net;
  int source;
  int sink;
};

SplitNetwork build_split(const Dag& dag, const NodeSet& from, const NodeSet& to,
                         const Mask& undeletable, const Mask& removed) {
  const int n = dag.node_count();
  SplitNetwork s{Network(2 * n + 2), 2 * n, 2 * n + 1};
  for (NodeId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    s.net.add_arc(2 * v, 2 * v + 1, undeletable[v] ? kInfiniteCapacity : 1);
  }
  for (const Edge& e : dag.edges()) {
    if (removed[e.tail] || removed[e.head]) continue;
    s.net.add_arc(2 * e.tail + 1, 2 * e.head, kInfiniteCapacity);
  }
  for (NodeId x : from) {
    if (!removed[x]) s.net.add_arc(s.source, 2 * x, kInfiniteCapacity);
  }
  for (NodeId y : to) {
    if (!removed[y]) s.net.add_arc(2 * y + 1, s.sink, kInfiniteCapacity);
  }
  return s;
}

Mask undeletable_mask(int n, const NodeSet& protected_nodes, const NodeSet& from,
                      const NodeSet& to) {
  Mask m = make_mask(n, protected_nodes);
  for (NodeId v : from) m[v] = 1;
  for (NodeId v : to) m[v] = 1;
  return m;
}

NodeSet reach_avoiding(const Dag& dag, const NodeSet& from, const NodeSet& cut) {
  const Mask removed = make_mask(dag.node_count(), cut);
  return reachable_from(dag, from, {&removed});
}

bool separates(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& cut) {
  const NodeSet reach = reach_avoiding(dag, from, cut);
  return std::none_of(to.begin(), to.end(), [&](NodeId y) { return contains(reach, y); });
}

bool is_minimal(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& cut) {
  for (NodeId v : cut) {
    NodeSet rest;
    for (NodeId w : cut) {
      if (w != v) rest.push_back(w);
    }
    if (separates(dag, from, to, rest)) return false;
  }
  return true;
}

bool strict_subset(const NodeSet& a, const NodeSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class ImportantEnumerator {
 public:
  ImportantEnumerator(const Dag& dag, NodeId v, const NodeSet& terminals,
                      const NodeSet& protected_nodes)
      : dag_(dag), v_(v), terminals_(terminals), protected_(protected_nodes) {}

  std::vector<NodeSet> run(int k) {
    Mask removed(dag_.node_count(), 0);
    branch({v_}, removed, {}, k);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    const NodeSet origin{v_};
    std::vector<NodeSet> minimal;
    for (const NodeSet& s : found_) {
      if (is_minimal(dag_, origin, terminals_, s)) minimal.push_back(s);
    }
    std::vector<NodeSet> reach;
    for (const NodeSet& s : minimal) reach.push_back(reach_avoiding(dag_, origin, s));
    std::vector<NodeSet> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < minimal.size() && !dominated; ++j) {
        dominated = j != i && minimal[j].size() <= minimal[i].size() &&
                    strict_subset(reach[i], reach[j]);
      }
      if (!dominated) out.push_back(minimal[i]);
    }
    return out;
  }

 private:
  void branch(const NodeSet& sources, Mask& removed, NodeSet chosen, int budget) {
    const int n = dag_.node_count();
    const Mask undeletable = undeletable_mask(n, protected_, sources, terminals_);
    SplitNetwork s = build_split(dag_, sources, terminals_, undeletable, removed);
    const std::int64_t flow = s.net.max_flow(s.source, s.sink, std::int64_t{budget});
    if (flow > budget) return;
    if (flow == 0) {
      found_.push_back(normalized(std::move(chosen)));
      return;
    }
    // Furthest minimum cut: split nodes whose out-copy still reaches the sink.
    const Mask to_sink = s.net.residual_to(s.sink);
    NodeSet furthest;
    for (NodeId w = 0; w < n; ++w) {
      if (!removed[w] && !to_sink[2 * w] && to_sink[2 * w + 1]) furthest.push_back(w);
    }
    Mask blocked = removed;
    for (NodeId w : furthest) blocked[w] = 1;
    const NodeSet pushed = reachable_from(dag_, sources, {&blocked});
    const NodeId u = furthest.front();

    removed[u] = 1;
    NodeSet with_u = chosen;
    with_u.push_back(u);
    branch(pushed, removed, std::move(with_u), budget - 1);
    removed[u] = 0;

    NodeSet grown = pushed;
    grown.push_back(u);
    branch(normalized(std::move(grown)), removed, std::move(chosen), budget);
  }

  const Dag& dag_;
  NodeId v_;
  const NodeSet& terminals_;
  const NodeSet& protected_;
  std::vector<NodeSet> found_;
};

}  // namespace

bool is_separator(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& cut,
                  const NodeSet& protected_nodes) {
  for (NodeId v : cut) {
    if (contains(protected_nodes, v)) {
      fail(ErrorCode::ProtectedViolation, "node " + std::to_string(v) + " is protected");
    }
  }
  return separates(dag, from, to, cut);
}

std::optional<NodeSet> min_separator(const Dag& dag, const NodeSet& from, const NodeSet& to,
                                     const NodeSet& protected_nodes) {
  const int n = dag.node_count();
  const Mask removed(n, 0);
  SplitNetwork s =
      build_split(dag, from, to, undeletable_mask(n, protected_nodes, from, to), removed);
  if (s.net.max_flow(s.source, s.sink) >= kInfiniteCapacity) return std::nullopt;
  const Mask near = s.net.residual_from(s.source);
  NodeSet cut;
  for (NodeId v = 0; v < n; ++v) {
    if (near[2 * v] && !near[2 * v + 1]) cut.push_back(v);
  }
  return cut;
}

bool dominates(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& better,
               const NodeSet& worse, const NodeSet& protected_nodes) {
  if (!is_separator(dag, from, to, better, protected_nodes) ||
      !is_separator(dag, from, to, worse, protected_nodes)) {
    fail(ErrorCode::NotASeparator, "dominates() needs two separators");
  }
  return better.size() <= worse.size() &&
         strict_subset(reach_avoiding(dag, from, worse), reach_avoiding(dag, from, better));
}

std::vector<NodeSet> enumerate_important_separators(const Dag& dag, NodeId v,
                                                    const NodeSet& terminals, int k,
                                                    const NodeSet& protected_nodes) {
  if (k < 0) return {};
  if (contains(terminals, v)) {
    fail(ErrorCode::InvalidArgument, "source " + std::to_string(v) + " is a terminal");
  }
  return ImportantEnumerator(dag, v, terminals, protected_nodes).run(k);
}

std::optional<PushResult> push_solution(const Dag& dag, const NodeSet& terminals,
                                        const NodeSet& protected_nodes, const NodeSet& cut,
                                        NodeId v) {
  if (!contains(reverse_shadow(dag, terminals, cut), v)) return std::nullopt;
  const int k = static_cast<int>(cut.size());
  const auto important = enumerate_important_separators(dag, v, terminals, k, protected_nodes);
  for (const NodeSet& s : important) {
    if (std::includes(cut.begin(), cut.end(), s.begin(), s.end())) return std::nullopt;
  }

  PushResult r;
  const Mask in_cut = make_mask(dag.node_count(), cut);
  const NodeSet origin{v};
  const NodeSet reach = reachable_from(dag, origin, {&in_cut});
  for (NodeId u : cut) {
    for (NodeId p : dag.predecessors(u)) {
      if (contains(reach, p)) {
        r.m0.push_back(u);
        break;
      }
    }
  }
  r.m1 = r.m0;
  for (NodeId u : r.m0) {
    NodeSet rest;
    for (NodeId w : r.m1) {
      if (w != u) rest.push_back(w);
    }
    if (separates(dag, origin, terminals, rest)) r.m1 = std::move(rest);
  }
  for (const NodeSet& s : important) {
    if (s.size() <= r.m1.size() &&
        strict_subset(reach_avoiding(dag, origin, r.m1), reach_avoiding(dag, origin, s))) {
      r.m2 = s;
      break;
    }
  }
  NodeSet kept;
  std::set_difference(cut.begin(), cut.end(), r.m1.begin(), r.m1.end(),
                      std::back_inserter(kept));
  kept.insert(kept.end(), r.m2.begin(), r.m2.end());
  r.pushed = normalized(std::move(kept));
  return r;
}

}  // namespace oddcut
