#include "oddcut/shadow_cover.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>
#include <string>

#include "oddcut/error.hpp"
#include "oddcut/separators.hpp"
#include "oddcut/torso.hpp"

namespace oddcut {

namespace {

NodeSet free_nodes(int n, const NodeSet& terminals) {
  NodeSet out;
  for (NodeId v = 0; v < n; ++v) {
    if (!contains(terminals, v)) out.push_back(v);
  }
  return out;
}

std::vector<NodeSet> powerset(const NodeSet& base, int cap) {
  if (static_cast<int>(base.size()) > cap) {
    fail(ErrorCode::ExhaustiveTooLarge, std::to_string(base.size()) +
                                            " free nodes exceed the exhaustive cap of " +
                                            std::to_string(cap));
  }
  std::vector<NodeSet> out;
  const std::uint32_t count = std::uint32_t{1} << base.size();
  out.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    NodeSet s;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (bits >> i & 1U) s.push_back(base[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void push_unique(std::vector<NodeSet>& family, std::set<NodeSet>& seen, NodeSet s) {
  if (seen.insert(s).second) family.push_back(std::move(s));
}

std::vector<NodeSet> sample_reverse(const Dag& dag, const NodeSet& terminals,
                                    const NodeSet& protected_nodes, int k,
                                    const CoverOptions& options, std::seed_seq& seq) {
  std::set<NodeSet> separators;
  for (NodeId v : free_nodes(dag.node_count(), terminals)) {
    for (NodeSet& x : enumerate_important_separators(dag, v, terminals, k, protected_nodes)) {
      separators.insert(std::move(x));
    }
  }
  std::vector<std::pair<double, NodeSet>> weighted;
  for (const NodeSet& x : separators) {
    weighted.emplace_back(std::pow(0.25, static_cast<double>(x.size())),
                          reverse_shadow(dag, terminals, x));
  }

  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<NodeSet> family;
  std::set<NodeSet> seen;
  push_unique(family, seen, {});
  const int reps = repetition_count(k, dag.node_count(), options.repetition_factor);
  for (int r = 0; r < reps; ++r) {
    NodeSet z;
    for (const auto& [p, shade] : weighted) {
      if (coin(rng) < p) z.insert(z.end(), shade.begin(), shade.end());
    }
    push_unique(family, seen, normalized(std::move(z)));
  }
  return family;
}

}  // namespace

int repetition_count(int k, int node_count, double factor) {
  if (k <= 0 || node_count < 2) return 1;
  const double r = factor * std::pow(4.0, k) * k * std::log(static_cast<double>(node_count));
  return std::max(1, static_cast<int>(std::ceil(r)));
}

CoverFamily reverse_shadow_container(const Dag& dag, const NodeSet& terminals,
                                     const NodeSet& protected_nodes, int k,
                                     const CoverOptions& options) {
  CoverFamily out{{}, options.strategy, options.seed};
  if (options.strategy == Strategy::Exhaustive) {
    out.sets = powerset(free_nodes(dag.node_count(), terminals), options.exhaustive_cap);
    return out;
  }
  std::seed_seq seq{options.seed};
  out.sets = sample_reverse(dag, terminals, protected_nodes, k, options, seq);
  return out;
}

CoverFamily shadow_container(const Dag& dag, const NodeSet& terminals,
                             const NodeSet& protected_nodes, int k, const CoverOptions& options) {
  if (options.strategy == Strategy::Exhaustive) {
    // Z1 = {} already yields every subset in the second round.
    return reverse_shadow_container(dag, terminals, protected_nodes, k, options);
  }
  CoverFamily out{{}, options.strategy, options.seed};
  std::set<NodeSet> seen;
  const Dag reversed = dag.reversed();
  std::seed_seq first{options.seed, std::uint64_t{0}};
  const auto outer = sample_reverse(dag, terminals, protected_nodes, k, options, first);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const NodeSet& z1 = outer[i];
    NodeSet guarded;
    std::set_union(protected_nodes.begin(), protected_nodes.end(), z1.begin(), z1.end(),
                   std::back_inserter(guarded));
    std::seed_seq second{options.seed, std::uint64_t{i + 1}};
    for (const NodeSet& z2 : sample_reverse(reversed, terminals, guarded, k, options, second)) {
      NodeSet z;
      std::set_union(z1.begin(), z1.end(), z2.begin(), z2.end(), std::back_inserter(z));
      push_unique(out.sets, seen, std::move(z));
    }
  }
  return out;
}

}  // namespace oddcut
