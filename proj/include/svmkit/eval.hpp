#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "svmkit/data.hpp"
#include "svmkit/svm.hpp"

namespace svmkit {

struct EvalReport {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  double train_error = 0.0;
  double test_error = 0.0;
  std::size_t n_sv = 0;
  KernelSpec kernel;
  double C = 0.0;
  std::uint64_t seed = 0;
  int repeat = 0;
  bool converged = false;
};

/// Error rates of one model on its training and test partitions.
EvalReport evaluate(const Model& model, const Dataset& train, const Dataset& test);

struct SweepSpec {
  std::vector<std::size_t> sizes = {100, 200, 300, 400, 500};  // strictly increasing
  int repeats = 10;
  std::uint64_t base_seed = 0;
  KernelSpec kernel;
  double C = 1.0;
  std::size_t max_test = 0;  // 0 = evaluate on the whole complement
};

/// Training-size sweep: for each size and repeat r, split with seed
/// base_seed + r*65537 + size, train, evaluate. Reports come back in
/// (size, repeat) order. A split with a single-class training side is
/// reseeded up to 10 times before giving up. `max_test` truncates the
/// test partition (which the split already shuffled) to bound runtime
/// on large corpora.
std::vector<EvalReport> sweep(const Dataset& data, const SweepSpec& spec,
                              const SolverConfig& config);

/// Tab-separated rows `size repeat seed train_err test_err n_sv converged`,
/// then one `# agg size min mean max` line per size (test error).
void write_sweep_tsv(const std::vector<EvalReport>& reports, std::ostream& out);

}  // namespace svmkit
