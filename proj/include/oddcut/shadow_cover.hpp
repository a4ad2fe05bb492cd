#pragma once

#include <cstdint>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

enum class Strategy { Randomized, Exhaustive };

struct CoverOptions {
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t seed = 0;
  /// Repetitions r = max(1, ceil(c * 4^k * k * ln n)).
  double repetition_factor = 4.0;
  int exhaustive_cap = 16;
};

struct CoverFamily {
  std::vector<NodeSet> sets;
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t seed = 0;
};

int repetition_count(int k, int node_count, double factor);

/// Candidate sets Z with Y ⊆ Z ⊆ V \ S for thin S whose reverse shadow Y is
/// covered by important separators inside S. Members avoid T.
CoverFamily reverse_shadow_container(const Dag& dag, const NodeSet& terminals,
                                     const NodeSet& protected_nodes, int k,
                                     const CoverOptions& options);

/// Two rounds of the reverse container, the second on the reversed graph.
/// Throws ExhaustiveTooLarge when |V \ T| exceeds the exhaustive cap.
CoverFamily shadow_container(const Dag& dag, const NodeSet& terminals,
                             const NodeSet& protected_nodes, int k, const CoverOptions& options);

}  // namespace oddcut
