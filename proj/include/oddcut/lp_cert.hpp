#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddcut/graph.hpp"
#include "oddcut/rational.hpp"

namespace oddcut {

// LP variables: edge entries in order, each expanded to `multiplicity`
// consecutive variables.

struct PrimalSolution {
  std::vector<Rational> x;

  friend bool operator==(const PrimalSolution&, const PrimalSolution&) = default;
};

struct DualFlow {
  std::vector<std::pair<Path, Rational>> flows;

  friend bool operator==(const DualFlow&, const DualFlow&) = default;
};

struct CertificateBundle {
  PrimalSolution primal;
  DualFlow dual;
  std::vector<Path> tight_paths;

  friend bool operator==(const CertificateBundle&, const CertificateBundle&) = default;
};

/// First variable of each edge entry, plus the total at the back.
std::vector<int> variable_offsets(const Dag& dag);
std::vector<int> variable_offsets(const UndirGraph& graph);

/// Cost per variable.
std::vector<Rational> variable_costs(const Dag& dag);

/// Variable used by each hop of `path` (first copy of the first matching entry).
/// Throws NotOddPath if a hop is not an edge.
std::vector<int> path_variables(const Dag& dag, const Path& path);

/// Minimum weight of an odd simple s -> t path, nullopt if none exists.
std::optional<Rational> shortest_odd_path_weight(const Dag& dag, NodeId s, NodeId t,
                                                 const std::vector<Rational>& x);
/// Undirected variant by path enumeration.
std::optional<Rational> shortest_odd_path_weight(const UndirGraph& graph, NodeId s, NodeId t,
                                                 const std::vector<Rational>& x);

bool verify_primal_feasible(const Dag& dag, NodeId s, NodeId t, const PrimalSolution& primal);
bool verify_primal_feasible(const UndirGraph& graph, NodeId s, NodeId t,
                            const PrimalSolution& primal);

/// Per-variable load at most its cost. Throws NotOddPath on a bad carried path.
bool verify_dual_feasible(const Dag& dag, NodeId s, NodeId t, const DualFlow& dual);

Rational primal_objective(const Dag& dag, const PrimalSolution& primal);
Rational dual_value(const DualFlow& dual);

struct OptimalityReport {
  bool optimal = false;
  Rational gap;
  Rational primal_value;
  Rational dual_value;
};

/// Throws InfeasibleCertificate when either side is infeasible.
OptimalityReport check_optimality(const Dag& dag, NodeId s, NodeId t,
                                  const PrimalSolution& primal, const DualFlow& dual);

/// Rank of the tight system (zero coordinates plus tight path rows) equals the
/// variable count. Throws PathNotTight or NotOddPath.
bool verify_extreme_point(const Dag& dag, NodeId s, NodeId t, const PrimalSolution& primal,
                          const std::vector<Path>& tight_paths);

/// The tight-system rows used by verify_extreme_point.
std::vector<std::vector<Rational>> tight_rows(const Dag& dag, const PrimalSolution& primal,
                                              const std::vector<Path>& tight_paths);

bool is_half_integral(const PrimalSolution& primal);

/// Fraction-free (Bareiss) elimination rank.
int matrix_rank(const std::vector<std::vector<Rational>>& rows);

/// Unique solution of A y = b for square nonsingular A, else nullopt.
std::optional<std::vector<Rational>> solve_square_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

}  // namespace oddcut
