#include "svmkit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "svmkit/rng.hpp"

namespace svmkit {

namespace {

void validate_labels(std::span<const int> labels) {
  for (int y : labels) {
    if (y != +1 && y != -1) throw std::invalid_argument("labels must be +1 or -1");
  }
}

// Per-index KKT violation given the margin m = y_i f(x_i).
double index_violation(double alpha, double m, double C, double cutoff) {
  if (alpha <= cutoff) return std::max(0.0, 1.0 - m);
  if (alpha >= C * (1.0 - 1e-6)) return std::max(0.0, m - 1.0);
  return std::abs(m - 1.0);
}

// Working state of one solve: alphas, bias, and the error cache
// err[i] = f(x_i) - y_i kept incrementally up to date.
struct Smo {
  const Matrix& G;
  const std::vector<int>& y;
  const SolverConfig& cfg;
  std::size_t l;
  std::vector<double> alpha;
  std::vector<double> err;
  double b = 0.0;
  Rng rng;

  Smo(const Matrix& gram, const std::vector<int>& labels, const SolverConfig& config)
      : G(gram), y(labels), cfg(config), l(labels.size()), alpha(l, 0.0), err(l), rng(config.seed) {
    for (std::size_t i = 0; i < l; ++i) err[i] = -static_cast<double>(y[i]);
  }

  bool non_bound(std::size_t i) const {
    return alpha[i] > cfg.alpha_cutoff && alpha[i] < cfg.C * (1.0 - 1e-6);
  }

  double violation(std::size_t i) const {
    const double m = y[i] * (err[i] + y[i]);  // y_i f_i
    return index_violation(alpha[i], m, cfg.C, cfg.alpha_cutoff);
  }

  double max_violation() const {
    double v = 0.0;
    for (std::size_t i = 0; i < l; ++i) v = std::max(v, violation(i));
    return v;
  }

  // Analytic optimization of the (i, j) pair along the equality
  // constraint, clipped to the box. Returns false when no progress is
  // possible. Non-positive curvature (duplicated points, indefinite
  // kernels) is handled by moving to the better segment endpoint, and
  // only when that strictly improves the objective.
  bool take_step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const double ai = alpha[i], aj = alpha[j];
    const double yi = y[i], yj = y[j];
    const double s = yi * yj;
    const double C = cfg.C;

    double L, H;
    if (s < 0) {
      L = std::max(0.0, aj - ai);
      H = std::min(C, C + aj - ai);
    } else {
      L = std::max(0.0, ai + aj - C);
      H = std::min(C, ai + aj);
    }
    if (L >= H) return false;

    const double eta = G(i, i) + G(j, j) - 2.0 * G(i, j);
    const double Ei = err[i], Ej = err[j];
    // Objective change for a move of aj to aj+u (with ai compensating):
    //   dW(u) = yj (Ei - Ej) u - eta u^2 / 2
    const double g1 = yj * (Ei - Ej);

    double aj_new;
    if (eta > 0.0) {
      aj_new = std::clamp(aj + g1 / eta, L, H);
    } else {
      const double ul = L - aj, uh = H - aj;
      const double dl = g1 * ul - 0.5 * eta * ul * ul;
      const double dh = g1 * uh - 0.5 * eta * uh * uh;
      const double gain = std::max(dl, dh);
      if (!(gain > 1e-15 * (1.0 + std::abs(g1)))) return false;
      aj_new = dl >= dh ? L : H;
    }

    // Land exactly on the segment ends when numerically there.
    const double snap = 1e-10 * std::max(1.0, C);
    if (aj_new - L < snap) aj_new = L;
    else if (H - aj_new < snap) aj_new = H;

    if (std::abs(aj_new - aj) < 1e-12 * (aj_new + aj + 1e-12)) return false;

    double ai_new = std::clamp(ai + s * (aj - aj_new), 0.0, C);
    const double dai = ai_new - ai, daj = aj_new - aj;

    // Bias making the freshly moved multiplier's example sit on its margin.
    const double b1 = b - Ei - yi * dai * G(i, i) - yj * daj * G(i, j);
    const double b2 = b - Ej - yi * dai * G(i, j) - yj * daj * G(j, j);
    const bool in_i = ai_new > cfg.alpha_cutoff && ai_new < C * (1.0 - 1e-6);
    const bool in_j = aj_new > cfg.alpha_cutoff && aj_new < C * (1.0 - 1e-6);
    const double b_new = in_i ? b1 : (in_j ? b2 : 0.5 * (b1 + b2));

    for (std::size_t k = 0; k < l; ++k)
      err[k] += yi * dai * G(i, k) + yj * daj * G(j, k) + (b_new - b);

    alpha[i] = ai_new;
    alpha[j] = aj_new;
    b = b_new;
    return true;
  }

  // Tries partners for the violator i: largest |E_i - E_j| over non-bound
  // indices first, then a random-start sweep over everything.
  bool optimize_from(std::size_t i) {
    double best_gap = -1.0;
    std::size_t best_j = l;
    for (std::size_t j = 0; j < l; ++j) {
      if (j == i || !non_bound(j)) continue;
      const double gap = std::abs(err[i] - err[j]);
      if (gap > best_gap) {
        best_gap = gap;
        best_j = j;
      }
    }
    if (best_j < l && take_step(i, best_j)) return true;

    const std::size_t start = rng.below(l);
    for (std::size_t k = 0; k < l; ++k) {
      const std::size_t j = (start + k) % l;
      if (j != i && non_bound(j) && j != best_j && take_step(i, j)) return true;
    }
    for (std::size_t k = 0; k < l; ++k) {
      const std::size_t j = (start + k) % l;
      if (j != i && !non_bound(j) && take_step(i, j)) return true;
    }
    return false;
  }

  // One sweep: repeatedly take the worst violator and improve it, at most
  // l pair optimizations. Violators that cannot make progress are set
  // aside until the next sweep.
  std::size_t sweep() {
    std::vector<char> blocked(l, 0);
    std::size_t changed = 0;
    for (std::size_t step = 0; step < l; ++step) {
      double worst = 0.0;
      std::size_t who = l;
      for (std::size_t i = 0; i < l; ++i) {
        if (blocked[i]) continue;
        const double v = violation(i);
        if (v > worst) {
          worst = v;
          who = i;
        }
      }
      if (who == l || worst <= cfg.kkt_tol) break;
      if (optimize_from(who))
        ++changed;
      else
        blocked[who] = 1;
    }
    return changed;
  }
};

}  // namespace

void SolverConfig::validate() const {
  if (!(C > 0.0) || !std::isfinite(C)) throw std::invalid_argument("C must be positive and finite");
  if (!(kkt_tol > 0.0)) throw std::invalid_argument("kkt_tol must be positive");
  if (!(alpha_cutoff > 0.0) || alpha_cutoff >= kkt_tol)
    throw std::invalid_argument("alpha_cutoff must satisfy 0 < alpha_cutoff < kkt_tol");
  if (max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
}

double dual_objective(std::span<const double> alphas, const Matrix& gram,
                      std::span<const int> labels) {
  const std::size_t l = labels.size();
  if (alphas.size() != l || gram.rows() != l || gram.cols() != l)
    throw std::invalid_argument("dual_objective: size mismatch");
  validate_labels(labels);

  double linear = 0.0;
  for (double a : alphas) linear += a;
  double quad = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    if (alphas[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < l; ++j)
      row += alphas[j] * labels[j] * gram(i, j);
    quad += alphas[i] * labels[i] * row;
  }
  return linear - 0.5 * quad;
}

SolverSolution solve_dual(const Matrix& gram, const std::vector<int>& labels,
                          const SolverConfig& config, std::ostream* trace) {
  config.validate();
  const std::size_t l = labels.size();
  if (gram.rows() != l || gram.cols() != l)
    throw std::invalid_argument("solve_dual: gram/label size mismatch");
  if (l < 2) throw std::invalid_argument("solve_dual: need at least two samples");
  validate_labels(labels);
  bool pos = false, neg = false;
  for (int y : labels) (y > 0 ? pos : neg) = true;
  if (!pos || !neg) throw std::invalid_argument("solve_dual: both classes must be present");
  for (double v : gram.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("solve_dual: non-finite Gram entry");
  }

  Smo smo(gram, labels, config);

  const int hard_cap = std::max(1000, 50 * config.max_passes);
  int passes = 0;
  int stall = 0;
  while (true) {
    const std::size_t changed = smo.sweep();
    ++passes;
    stall = changed == 0 ? stall + 1 : 0;

    if (trace) {
      char line[160];
      std::size_t n_sv = 0;
      for (double a : smo.alpha)
        if (a > config.alpha_cutoff) ++n_sv;
      std::snprintf(line, sizeof(line), "pass=%d objective=%.17g kkt=%.17g n_sv=%zu\n", passes,
                    dual_objective(smo.alpha, gram, labels), smo.max_violation(), n_sv);
      *trace << line;
    }

    if (smo.max_violation() <= config.kkt_tol) break;
    if (stall >= config.max_passes) break;
    if (passes >= hard_cap) break;
  }

  SolverSolution sol;
  sol.alphas = std::move(smo.alpha);
  sol.bias = smo.b;
  sol.iterations = passes;
  sol.objective = dual_objective(sol.alphas, gram, labels);
  sol.max_kkt_violation = kkt_report(sol, gram, labels, config);
  sol.converged = sol.max_kkt_violation <= config.kkt_tol;
  return sol;
}

double kkt_report(const SolverSolution& solution, const Matrix& gram,
                  const std::vector<int>& labels, const SolverConfig& config) {
  const std::size_t l = labels.size();
  if (solution.alphas.size() != l || gram.rows() != l || gram.cols() != l)
    throw std::invalid_argument("kkt_report: size mismatch");
  validate_labels(labels);

  double worst = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    double g = 0.0;
    for (std::size_t j = 0; j < l; ++j)
      g += solution.alphas[j] * labels[j] * gram(j, i);
    const double m = labels[i] * (g + solution.bias);
    worst = std::max(worst, index_violation(solution.alphas[i], m, config.C, config.alpha_cutoff));
  }
  return worst;
}

}  // namespace svmkit
