#include "svmkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "svmkit/srm.hpp"

namespace svmkit {

EvalReport evaluate(const Model& model, const Dataset& train, const Dataset& test) {
  if (test.empty()) throw std::invalid_argument("evaluate: empty test set");
  if (train.dim() != model.dim || test.dim() != model.dim)
    throw std::invalid_argument("evaluate: dimension mismatch");

  EvalReport r;
  r.train_size = train.size();
  r.test_size = test.size();
  r.train_error = empirical_risk(model, train);
  r.test_error = empirical_risk(model, test);
  r.n_sv = model.n_sv();
  r.kernel = model.kernel;
  r.C = model.C;
  r.converged = model.meta.converged;
  return r;
}

std::vector<EvalReport> sweep(const Dataset& data, const SweepSpec& spec,
                              const SolverConfig& config) {
  if (spec.sizes.empty()) throw std::invalid_argument("sweep: no sizes given");
  for (std::size_t i = 0; i + 1 < spec.sizes.size(); ++i) {
    if (spec.sizes[i] >= spec.sizes[i + 1])
      throw std::invalid_argument("sweep: sizes must be strictly increasing");
  }
  if (spec.repeats < 1) throw std::invalid_argument("sweep: repeats must be >= 1");
  if (spec.sizes.back() >= data.size())
    throw std::invalid_argument("sweep: largest size must be below the dataset size");

  SolverConfig cfg = config;
  cfg.C = spec.C;

  std::vector<EvalReport> reports;
  for (std::size_t size : spec.sizes) {
    for (int r = 0; r < spec.repeats; ++r) {
      const std::uint64_t seed =
          spec.base_seed + static_cast<std::uint64_t>(r) * 65537u + size;

      Dataset train_part, test_part;
      for (std::uint64_t attempt = 0;; ++attempt) {
        try {
          std::tie(train_part, test_part) = split(data, {size, seed + attempt});
          break;
        } catch (const std::invalid_argument&) {
          if (attempt == 10) throw;
        }
      }

      // The complement comes back shuffled, so a prefix is a random subsample.
      if (spec.max_test > 0 && test_part.size() > spec.max_test) {
        Dataset trimmed(test_part.dim());
        for (std::size_t k = 0; k < spec.max_test; ++k) trimmed.add(test_part[k]);
        test_part = std::move(trimmed);
      }

      const Model model = train(train_part, spec.kernel, cfg);
      EvalReport rep = evaluate(model, train_part, test_part);
      rep.seed = seed;
      rep.repeat = r;
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

void write_sweep_tsv(const std::vector<EvalReport>& reports, std::ostream& out) {
  char buf[256];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), "%zu\t%d\t%llu\t%.17g\t%.17g\t%zu\t%d\n", r.train_size,
                  r.repeat, static_cast<unsigned long long>(r.seed), r.train_error, r.test_error,
                  r.n_sv, r.converged ? 1 : 0);
    out << buf;
  }
  // Aggregates over the test error, in first-seen size order.
  std::vector<std::size_t> sizes;
  for (const auto& r : reports)
    if (std::find(sizes.begin(), sizes.end(), r.train_size) == sizes.end())
      sizes.push_back(r.train_size);
  for (std::size_t size : sizes) {
    double lo = 1.0, hi = 0.0, sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : reports) {
      if (r.train_size != size) continue;
      lo = std::min(lo, r.test_error);
      hi = std::max(hi, r.test_error);
      sum += r.test_error;
      ++n;
    }
    std::snprintf(buf, sizeof(buf), "# agg %zu %.17g %.17g %.17g\n", size, lo,
                  sum / static_cast<double>(n), hi);
    out << buf;
  }
}

}  // namespace svmkit
