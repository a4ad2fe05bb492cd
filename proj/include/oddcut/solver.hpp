#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddcut/instance.hpp"
#include "oddcut/shadow_cover.hpp"

namespace oddcut {

struct CutSolution {
  CutKind kind = CutKind::Node;
  /// Node ids or edge-entry indices, sorted.
  std::vector<int> elements;
  /// Nodes count one each; edge entries count their multiplicity.
  int size = 0;
  std::uint64_t instance_hash = 0;

  friend bool operator==(const CutSolution&, const CutSolution&) = default;
};

/// True iff deleting `elements` leaves no odd T-path.
/// Throws ProtectedViolation if an element is protected.
bool verify_solution(const Instance& instance, const std::vector<int>& elements);

/// Shadow-container search for a node cut of size at most k (directed, node kind).
/// Throws NotADag or NotNodeKind.
std::optional<CutSolution> solve_exact(const Instance& instance, int k,
                                       const CoverOptions& options = {});

inline constexpr int kBruteForceLimit = 20;

/// Smallest-weight solution within the instance budget (if any), ties broken
/// lexicographically. Elements heavier than the budget are never tried.
/// Throws TooLarge when more than 20 usable elements remain.
std::optional<CutSolution> brute_force_solve(const Instance& instance);

enum class Method { Exact, Brute };

/// Minimum solution via a budget sweep 0..budget (or 0..total free weight).
/// Edge-kind DAG instances go through the edge-to-node reduction for Exact.
std::optional<CutSolution> solve_minimum(const Instance& instance, Method method,
                                         const CoverOptions& options = {});

/// Drops elements one at a time (ascending) while the rest stays feasible.
std::vector<int> minimalize(const Instance& instance, std::vector<int> elements);

/// Optimal solution maximizing |r ∪ f ∪ M|, then |r|, then lexicographically
/// smallest (directed node-kind instances only; brute force).
std::optional<NodeSet> canonical_optimum(const Instance& instance);

/// Picks Exhaustive when |V \ T| fits the cap, else Randomized.
CoverOptions default_cover_options(const Instance& instance, std::uint64_t seed = 0);

}  // namespace oddcut
