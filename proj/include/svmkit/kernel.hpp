#pragma once

#include <span>
#include <string>
#include <vector>

#include "svmkit/matrix.hpp"

namespace svmkit {

enum class KernelKind { Linear, Polynomial, Rbf, Sigmoid };

/// Kernel selection plus hyperparameters. Fields not used by `kind` are
/// ignored; two specs with the same kind and the same relevant fields
/// evaluate identically everywhere.
struct KernelSpec {
  KernelKind kind = KernelKind::Linear;
  int degree = 3;       // Polynomial: K(x,y) = (x.y + 1)^degree
  double sigma = 10.0;  // Rbf: K(x,y) = exp(-|x-y|^2 / (2 sigma^2))
  double kappa = 1.0;   // Sigmoid: K(x,y) = tanh(kappa x.y - delta)
  double delta = 0.0;

  static KernelSpec linear();
  static KernelSpec polynomial(int degree);
  static KernelSpec rbf(double sigma);
  static KernelSpec sigmoid(double kappa, double delta);

  // Throws std::invalid_argument when a hyperparameter relevant to `kind`
  // is out of range (degree < 1, sigma <= 0, non-finite values).
  void validate() const;

  /// Single-token text form used by the CLI and the model file:
  /// `linear`, `poly:p=3`, `rbf:sigma=10`, `sigmoid:kappa=1,delta=0`.
  std::string token() const;
  static KernelSpec parse(const std::string& token);
};

/// K(x, y) for the given spec. Symmetric in x and y for every kind.
double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y);

/// G[i][j] = K(points[i], points[j]). The result is exactly symmetric
/// (each upper entry is computed once and mirrored) and independent of
/// any internal evaluation order. `max_points` guards against accidental
/// quadratic blow-ups on large inputs.
Matrix gram_matrix(const KernelSpec& spec,
                   const std::vector<std::vector<double>>& points,
                   std::size_t max_points = 10000);

/// max(0, -lambda_min) of a symmetric matrix: 0 means positive
/// semidefinite, larger values measure how badly PSD fails. Input must be
/// symmetric within tol scaled by the largest absolute entry.
double psd_violation(const Matrix& gram, double tol = 1e-8);

}  // namespace svmkit
