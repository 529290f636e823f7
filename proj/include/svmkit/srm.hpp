#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "svmkit/svm.hpp"

namespace svmkit {

/// Inputs of the capacity term of the risk bound.
struct BoundInput {
  double h = 1.0;     // VC dimension estimate
  std::size_t l = 1;  // training-set size
  double eta = 0.05;  // the bound holds with probability 1 - eta

  void validate() const;
};

/// Misclassification fraction of `model` on `data`. Equal to
/// (1/2l) sum |y_i - f(x_i)| with f returning labels, since each
/// summand is 0 or 2.
double empirical_risk(const Model& model, const Dataset& data);

/// sqrt((h (ln(2l/h) + 1) - ln(eta/4)) / l), natural logs throughout.
/// Throws std::domain_error when the radicand is negative (h far larger
/// than l).
double vc_confidence(const BoundInput& input);

/// r_emp + vc_confidence(input); the quantity SRM minimizes.
double risk_bound(double r_emp, const BoundInput& input);

/// Capacity estimate for hyperplanes in the polynomial feature space:
/// binom(dim + p, p) for degree p (Linear counts as p = 1, giving the
/// familiar dim + 1). Strictly increasing in p, as nested families
/// require. Rbf and Sigmoid have no such estimate and are rejected.
double estimate_vc_dim(const KernelSpec& kernel, std::size_t dim);

struct SrmEntry {
  int degree = 0;
  Model model;
  double empirical_risk = 0.0;
  double vc_dim = 0.0;
  double vc_confidence = 0.0;  // +inf when the radicand is negative
  double bound = 0.0;
  bool vacuous = false;  // h > l: the bound exceeds 1 and carries no information
  bool converged = false;
};

struct SrmReport {
  std::vector<SrmEntry> entries;  // ordered by degree
  int selected_degree = 0;
};

class SrmError : public std::runtime_error {
public:
  SrmError(const std::string& what, SrmReport partial_report)
      : std::runtime_error(what), partial(std::move(partial_report)) {}
  SrmReport partial;
};

/// Two-stage selection over nested polynomial families: train one
/// polynomial-kernel machine per degree, then pick the converged entry
/// with the smallest risk bound (ties toward the smaller degree).
/// Throws SrmError carrying the partial report when no degree converges.
SrmReport srm_select(const Dataset& data, const std::vector<int>& degrees,
                     const SolverConfig& config, double eta = 0.05);

/// Tab-separated rows `p r_emp h vc_conf bound converged n_sv`,
/// terminated by `selected <p>`.
void write_srm_tsv(const SrmReport& report, std::ostream& out);

}  // namespace svmkit
