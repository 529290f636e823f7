#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "svmkit/matrix.hpp"

namespace svmkit {

struct SolverConfig {
  double C = 1.0;             // box bound on every alpha
  double kkt_tol = 1e-3;      // optimality tolerance
  int max_passes = 100;       // consecutive sweeps without an update before giving up
  double alpha_cutoff = 1e-7; // below this an alpha counts as zero
  std::uint64_t seed = 0;     // randomized fallback in working-pair selection

  void validate() const;  // C>0, kkt_tol>0, 0<alpha_cutoff<kkt_tol, max_passes>=1
};

struct SolverSolution {
  std::vector<double> alphas;
  double bias = 0.0;
  double objective = 0.0;         // final dual objective
  int iterations = 0;             // sweeps performed
  bool converged = false;
  double max_kkt_violation = 0.0;
};

/// Dual objective: sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j G[i][j].
double dual_objective(std::span<const double> alphas, const Matrix& gram,
                      std::span<const int> labels);

/// Maximizes the dual objective subject to 0 <= alpha_i <= C and
/// sum_i alpha_i y_i = 0 by pairwise working-set decomposition: the pair's
/// two-variable subproblem is solved analytically and clipped to the box,
/// which preserves the equality constraint by construction.
///
/// Pair selection: first index is the worst KKT violator; the partner
/// maximizes |E_i - E_j| over non-bound indices, with a seeded random
/// sweep as fallback. Runs until the worst violation drops below
/// `kkt_tol`, or `max_passes` consecutive sweeps make no progress
/// (then `converged` is false and the best iterate is returned).
///
/// `trace`, when given, receives one line per sweep:
///   pass=<n> objective=<float> kkt=<float> n_sv=<int>
SolverSolution solve_dual(const Matrix& gram, const std::vector<int>& labels,
                          const SolverConfig& config, std::ostream* trace = nullptr);

/// Worst KKT violation of `solution` over all indices, recomputed from
/// scratch (no reliance on solver-internal caches):
///   alpha_i = 0    requires y_i f(x_i) >= 1
///   0 < alpha_i < C requires y_i f(x_i) = 1
///   alpha_i = C    requires y_i f(x_i) <= 1
double kkt_report(const SolverSolution& solution, const Matrix& gram,
                  const std::vector<int>& labels, const SolverConfig& config);

}  // namespace svmkit
