#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "svmkit/dataset.hpp"
#include "svmkit/kernel.hpp"
#include "svmkit/solver.hpp"

namespace svmkit {

struct TrainMeta {
  std::size_t train_size = 0;
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
};

/// A trained classifier. Holds only what evaluation needs: the support
/// vectors with their weights and labels, the bias, and the kernel.
/// Training points whose alpha fell below the cutoff are discarded.
struct Model {
  KernelSpec kernel;
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> sv_alphas;  // alpha_cutoff < alpha <= C
  std::vector<int> sv_labels;
  double bias = 0.0;
  double C = 0.0;
  std::size_t dim = 0;
  TrainMeta meta;

  std::size_t n_sv() const { return sv_alphas.size(); }
};

/// Trains a soft-margin SVM: builds the Gram matrix, solves the dual,
/// recovers the bias, extracts support vectors. Both classes must be
/// present and size must be >= 2. Solver non-convergence is reported in
/// `meta.converged`, not thrown.
Model train(const Dataset& data, const KernelSpec& kernel,
            const SolverConfig& config, std::ostream* trace = nullptr);

/// Bias recovery: average of y_i - sum_j alpha_j y_j G[j][i] over margin
/// support vectors (alpha strictly inside the box). With no margin SV the
/// midpoint rule applies: b = -(max_{y=-1} g + min_{y=+1} g) / 2 over
/// training points, g being the bias-free decision sum. Throws when the
/// solution has no support vectors at all.
double compute_bias(const SolverSolution& solution, const Matrix& gram,
                    const std::vector<int>& labels, const SolverConfig& config);

/// f(x) = sum_i alpha_i y_i K(s_i, x) + b.
double decision_value(const Model& model, std::span<const double> x);

/// sign of f(x); exact 0 resolves to +1.
int classify(const Model& model, std::span<const double> x);

/// w = sum_i alpha_i y_i s_i. Linear kernels only.
std::vector<double> weight_vector(const Model& model);

/// 2 / |w|. Linear kernels only; throws when |w| = 0.
double margin(const Model& model);

/// Versioned line-oriented text format; floats carry 17 significant
/// digits so that a load reproduces decision values bit-exactly.
void save_model(const Model& model, std::ostream& out);
Model load_model(std::istream& in);

}  // namespace svmkit
