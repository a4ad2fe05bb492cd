#pragma once

#include <vector>

#include "oddcut/instance.hpp"
#include "oddcut/lp_cert.hpp"

namespace oddcut {

struct EdgeToNode {
  Instance instance;
  /// Edge entry of the source instance for each new node x_e / y_e, -1 otherwise.
  std::vector<int> owner;

  /// Edge entries whose x_e or y_e was deleted.
  std::vector<int> lift(const std::vector<int>& nodes) const;
};

/// Each copy of an unprotected edge u->v becomes u -> x_e -> y_e -> v;
/// V∞ := V(G). Input must be a directed edge-kind instance.
EdgeToNode edgecut_to_nodecut(const Instance& instance);

struct NodeToEdge {
  Instance instance;
  /// Source node for each chain entry (v_in->v_mid, v_mid->v_out), -1 otherwise.
  std::vector<NodeId> owner;

  std::vector<int> lift(const std::vector<int>& edges) const;
};

/// v becomes v_in -> v_mid -> v_out (ids 3v, 3v+1, 3v+2); edge uv becomes
/// u_out -> v_in. T' = {t_in}. Input must be a directed node-kind instance.
NodeToEdge nodecut_to_edgecut(const Instance& instance);

/// Orient uv as u->v for u < v, add s = n and t = n + 1 with s->u and u->t.
Instance gen_vc_gadget(const UndirGraph& graph);

/// Undirected s-t blocker instance: s = n, t = n + 1, x_v = n + 2 + 2i and
/// x'_v = n + 3 + 2i for the i-th terminal; gadget edges have multiplicity m + 1.
/// Throws TooFewTerminals when |T| < 2.
Instance gen_mwc_gadget(const UndirGraph& graph, const NodeSet& terminals);

struct StarGap {
  Instance instance;
  /// 1/2 on the star edges (the first k variables), 0 elsewhere.
  PrimalSolution witness;
};

/// Star with k leaves (ids 0..k-1, centre k) pushed through gen_mwc_gadget.
StarGap gen_star_gap(int k);

struct EscherWall {
  Instance instance;
  CertificateBundle certificate;
  NodeId s = 0;
  NodeId t = 0;
  /// Label (1..32) per node id; 0 for subdivision nodes.
  std::vector<int> label;
};

/// The eight-path wall: label L becomes id L - 1, every edge except the five
/// top-row edges is subdivided, and the certificate carries 1/2 of flow on
/// P1..P6, the primal vertex and the tight paths P1..P8.
EscherWall gen_escher_wall();

}  // namespace oddcut
