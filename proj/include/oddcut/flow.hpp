#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "oddcut/graph.hpp"

namespace oddcut {

/// Residual network with shortest-augmenting-path max-flow (Edmonds-Karp).
/// Arcs are scanned in insertion order, so runs are deterministic.
template <typename Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count) : adj_(node_count) {}

  int node_count() const { return static_cast<int>(adj_.size()); }

  /// Returns the arc id; its reverse residual arc is `id ^ 1`.
  int add_arc(int from, int to, Cap capacity) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(to);
    cap_.push_back(capacity);
    head_.push_back(from);
    cap_.push_back(Cap(0));
    original_.push_back(capacity);
    original_.push_back(Cap(0));
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  /// Augments until no path remains or the flow exceeds `limit`.
  Cap max_flow(int source, int sink, std::optional<Cap> limit = std::nullopt) {
    Cap total(0);
    if (source == sink) return total;
    std::vector<int> parent_arc(adj_.size());
    while (!limit || total <= *limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      parent_arc[source] = -2;
      while (!queue.empty() && parent_arc[sink] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int a : adj_[u]) {
          const int w = head_[a];
          if (parent_arc[w] != -1 || cap_[a] <= Cap(0)) continue;
          parent_arc[w] = a;
          queue.push(w);
        }
      }
      if (parent_arc[sink] == -1) break;
      Cap bottleneck = cap_[parent_arc[sink]];
      for (int v = sink; v != source; v = head_[parent_arc[v] ^ 1]) {
        bottleneck = std::min(bottleneck, cap_[parent_arc[v]]);
      }
      for (int v = sink; v != source; v = head_[parent_arc[v] ^ 1]) {
        cap_[parent_arc[v]] -= bottleneck;
        cap_[parent_arc[v] ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network.
  Mask residual_from(int source) const {
    Mask seen(adj_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a : adj_[u]) {
        if (cap_[a] > Cap(0) && !seen[head_[a]]) {
          seen[head_[a]] = 1;
          stack.push_back(head_[a]);
        }
      }
    }
    return seen;
  }

  /// Nodes that can still reach `sink` in the residual network.
  Mask residual_to(int sink) const {
    Mask seen(adj_.size(), 0);
    std::vector<int> stack{sink};
    seen[sink] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      // a is an arc out of u; its partner a^1 runs into u.
      for (int a : adj_[u]) {
        const int into = a ^ 1;
        const int w = head_[a];
        if (cap_[into] > Cap(0) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  Cap flow_on(int arc) const { return original_[arc] - cap_[arc]; }
  int arc_tail(int arc) const { return head_[arc ^ 1]; }
  int arc_head(int arc) const { return head_[arc]; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> head_;
  std::vector<Cap> cap_;
  std::vector<Cap> original_;
};

/// Stand-in for an uncuttable arc in integer networks.
inline constexpr std::int64_t kInfiniteCapacity = std::int64_t{1} << 40;

}  // namespace oddcut
