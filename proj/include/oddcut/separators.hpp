#pragma once

#include <optional>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

/// True iff G \ M has no X -> Y path. Throws ProtectedViolation if M meets V∞.
bool is_separator(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& cut,
                  const NodeSet& protected_nodes);

/// Minimum X -> Y node separator avoiding V∞ ∪ X ∪ Y, or nullopt if none exists.
std::optional<NodeSet> min_separator(const Dag& dag, const NodeSet& from, const NodeSet& to,
                                     const NodeSet& protected_nodes);

/// |M'| <= |M| and R_{G\M}(X) is a proper subset of R_{G\M'}(X).
/// Throws NotASeparator if either set fails to separate.
bool dominates(const Dag& dag, const NodeSet& from, const NodeSet& to, const NodeSet& better,
               const NodeSet& worse, const NodeSet& protected_nodes = {});

/// All important v -> T separators of size at most k that avoid V∞, sorted.
std::vector<NodeSet> enumerate_important_separators(const Dag& dag, NodeId v,
                                                    const NodeSet& terminals, int k,
                                                    const NodeSet& protected_nodes);

struct PushResult {
  NodeSet m0;
  NodeSet m1;
  NodeSet m2;
  NodeSet pushed;
};

/// The exchange step behind shadow-maximal solutions: for a solution M and
/// v in r_G(M) such that M holds no important v -> T separator, builds
/// M' = (M \ M1) ∪ M2. Returns nullopt when the hypothesis does not hold.
std::optional<PushResult> push_solution(const Dag& dag, const NodeSet& terminals,
                                        const NodeSet& protected_nodes, const NodeSet& cut,
                                        NodeId v);

}  // namespace oddcut
