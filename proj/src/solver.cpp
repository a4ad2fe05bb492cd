#include "oddcut/solver.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

#include "oddcut/error.hpp"
#include "oddcut/io.hpp"
#include "oddcut/oct.hpp"
#include "oddcut/reductions.hpp"
#include "oddcut/torso.hpp"

namespace oddcut {

namespace {

void check_unprotected(const Instance& instance, const std::vector<int>& elements) {
  for (int x : elements) {
    const bool is_protected =
        instance.kind == CutKind::Node
            ? contains(instance.protected_nodes, x)
            : std::binary_search(instance.protected_edges.begin(),
                                 instance.protected_edges.end(), x);
    if (is_protected) {
      fail(ErrorCode::ProtectedViolation, "element " + std::to_string(x) + " is protected");
    }
  }
}

bool dag_has_odd_t_path(const Dag& dag, const NodeSet& terminals, Removed removed) {
  for (NodeId t : terminals) {
    if (removed.node(t)) continue;
    const NodeId source[] = {t};
    const auto reach = parity_reach(dag, source, removed);
    for (NodeId u : terminals) {
      if (u != t && reach[u].odd) return true;
    }
  }
  return false;
}

CutSolution make_solution(const Instance& instance, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  CutSolution s;
  s.kind = instance.kind;
  s.size = instance.weight(elements);
  s.elements = std::move(elements);
  s.instance_hash = instance_hash(instance);
  return s;
}

}  // namespace

bool verify_solution(const Instance& instance, const std::vector<int>& elements) {
  check_unprotected(instance, elements);
  const bool node_kind = instance.kind == CutKind::Node;
  const Mask mask =
      make_mask(node_kind ? instance.node_count() : instance.edge_count(), elements);
  Removed removed;
  (node_kind ? removed.nodes : removed.edges) = &mask;
  if (instance.directed()) return !dag_has_odd_t_path(instance.dag(), instance.terminals, removed);
  return !has_odd_t_path(instance.undirected(), instance.terminals, removed);
}

std::optional<CutSolution> solve_exact(const Instance& instance, int k,
                                       const CoverOptions& options) {
  if (!instance.directed()) fail(ErrorCode::NotADag, "exact solver needs a DAG");
  if (instance.kind != CutKind::Node) fail(ErrorCode::NotNodeKind, "exact solver needs node kind");
  if (k < 0) return std::nullopt;
  // Deleting every free node is the strongest cut; no solution is larger.
  const std::vector<int> free = instance.free_elements();
  if (!verify_solution(instance, free)) return std::nullopt;
  k = std::min(k, static_cast<int>(free.size()));
  const Dag& dag = instance.dag();
  const NodeSet& terminals = instance.terminals;
  const CoverFamily family =
      shadow_container(dag, terminals, instance.protected_nodes, k, options);
  for (const NodeSet& z : family.sets) {
    const TorsoResult t = torso(dag, terminals, instance.protected_nodes, z);
    NodeSet guarded;
    std::set_union(t.protected_nodes.begin(), t.protected_nodes.end(), z.begin(), z.end(),
                   std::back_inserter(guarded));
    auto found = solve_easy_instance(t.graph, guarded, terminals, k, false);
    if (!found || static_cast<int>(found->size()) > k) continue;
    if (verify_solution(instance, *found)) return make_solution(instance, *found);
  }
  return std::nullopt;
}

std::optional<CutSolution> brute_force_solve(const Instance& instance) {
  std::vector<int> usable;
  std::vector<int> weights;
  int total = 0;
  for (int x : instance.free_elements()) {
    const int w = instance.weight({x});
    if (instance.budget && w > *instance.budget) continue;
    usable.push_back(x);
    weights.push_back(w);
    total += w;
  }
  if (static_cast<int>(usable.size()) > kBruteForceLimit) {
    fail(ErrorCode::TooLarge, std::to_string(usable.size()) + " usable elements exceed " +
                                  std::to_string(kBruteForceLimit));
  }
  if (!verify_solution(instance, usable)) return std::nullopt;
  const int limit = instance.budget ? std::min(*instance.budget, total) : total;

  std::vector<int> chosen;
  std::function<bool(std::size_t, int)> search = [&](std::size_t from, int left) {
    if (left == 0) return verify_solution(instance, chosen);
    for (std::size_t i = from; i < usable.size(); ++i) {
      if (weights[i] > left) continue;
      chosen.push_back(usable[i]);
      if (search(i + 1, left - weights[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int w = 0; w <= limit; ++w) {
    chosen.clear();
    if (search(0, w)) return make_solution(instance, chosen);
  }
  return std::nullopt;
}

std::vector<int> minimalize(const Instance& instance, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  const std::vector<int> order = elements;
  for (int x : order) {
    std::vector<int> rest;
    for (int y : elements) {
      if (y != x) rest.push_back(y);
    }
    if (verify_solution(instance, rest)) elements = std::move(rest);
  }
  return elements;
}

CoverOptions default_cover_options(const Instance& instance, std::uint64_t seed) {
  CoverOptions options;
  options.seed = seed;
  const int free = instance.node_count() - static_cast<int>(instance.terminals.size());
  options.strategy = free <= options.exhaustive_cap ? Strategy::Exhaustive : Strategy::Randomized;
  return options;
}

std::optional<CutSolution> solve_minimum(const Instance& instance, Method method,
                                         const CoverOptions& options) {
  if (method == Method::Brute) return brute_force_solve(instance);
  if (!instance.directed()) fail(ErrorCode::NotADag, "exact solver needs a DAG");

  if (instance.kind == CutKind::Edge) {
    const EdgeToNode reduced = edgecut_to_nodecut(instance);
    CoverOptions inner = options;
    if (inner.strategy == Strategy::Exhaustive &&
        reduced.instance.node_count() - static_cast<int>(reduced.instance.terminals.size()) >
            inner.exhaustive_cap) {
      inner.strategy = Strategy::Randomized;
    }
    auto found = solve_minimum(reduced.instance, Method::Exact, inner);
    if (!found) return std::nullopt;
    return make_solution(instance,
                         reduced.lift(minimalize(reduced.instance, found->elements)));
  }

  // Deleting every free node is the strongest cut; if it fails, nothing works.
  const std::vector<int> free = instance.free_elements();
  if (!verify_solution(instance, free)) return std::nullopt;
  const int most = std::min(instance.budget.value_or(static_cast<int>(free.size())),
                            static_cast<int>(free.size()));
  for (int k = 0; k <= most; ++k) {
    if (auto found = solve_exact(instance, k, options)) return found;
  }
  return std::nullopt;
}

std::optional<NodeSet> canonical_optimum(const Instance& instance) {
  if (!instance.directed()) fail(ErrorCode::NotADag, "canonical optimum needs a DAG");
  if (instance.kind != CutKind::Node) fail(ErrorCode::NotNodeKind, "needs node kind");
  Instance open = instance;
  open.budget.reset();
  const auto best = brute_force_solve(open);
  if (!best) return std::nullopt;
  const int size = best->size;
  const std::vector<int> free = instance.free_elements();
  const Dag& dag = instance.dag();

  std::optional<NodeSet> winner;
  std::tuple<std::size_t, std::size_t> winner_key{0, 0};
  std::vector<int> chosen;
  std::function<void(std::size_t)> visit = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == size) {
      if (!verify_solution(instance, chosen)) return;
      NodeSet all = shadow(dag, instance.terminals, chosen);
      all.insert(all.end(), chosen.begin(), chosen.end());
      const std::tuple<std::size_t, std::size_t> key{
          normalized(all).size(), reverse_shadow(dag, instance.terminals, chosen).size()};
      if (!winner || key > winner_key) {
        winner = chosen;
        winner_key = key;
      }
      return;
    }
    for (std::size_t i = from; i < free.size(); ++i) {
      chosen.push_back(free[i]);
      visit(i + 1);
      chosen.pop_back();
    }
  };
  visit(0);
  return winner;
}

}  // namespace oddcut
