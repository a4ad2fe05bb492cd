#pragma once

#include <utility>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

/// f_G(M): nodes of G \ M not reachable from T in G \ M.
NodeSet forward_shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut);

/// r_G(M): nodes of G \ M that cannot reach T in G \ M.
NodeSet reverse_shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut);

/// s_G(M) = f_G(M) ∪ r_G(M).
NodeSet shadow(const Dag& dag, const NodeSet& terminals, const NodeSet& cut);

/// True iff no v in M lies in r_G(M \ {v}).
bool is_thin(const Dag& dag, const NodeSet& terminals, const NodeSet& cut);

struct TorsoResult {
  /// Node ids of the input are kept; nodes of Z stay as isolated placeholders.
  /// Gadget nodes x_uv are appended from id n onwards.
  Dag graph;
  NodeSet protected_nodes;
  /// origin[i] = (u, v) for gadget node n + i.
  std::vector<std::pair<NodeId, NodeId>> origin;
  NodeSet removed;
};

/// Parity-preserving torso. Throws TerminalInZ if Z meets T.
TorsoResult torso(const Dag& dag, const NodeSet& terminals, const NodeSet& protected_nodes,
                  const NodeSet& z);

}  // namespace oddcut
