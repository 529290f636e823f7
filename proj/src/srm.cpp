#include "svmkit/srm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace svmkit {

void BoundInput::validate() const {
  if (!(h >= 1.0) || !std::isfinite(h)) throw std::invalid_argument("bound input: h must be >= 1");
  if (l < 1) throw std::invalid_argument("bound input: l must be >= 1");
  if (!(eta > 0.0) || !(eta < 1.0)) throw std::invalid_argument("bound input: eta must lie in (0,1)");
}

double empirical_risk(const Model& model, const Dataset& data) {
  if (data.empty()) throw std::invalid_argument("empirical_risk: empty dataset");
  if (data.dim() != model.dim) throw std::invalid_argument("empirical_risk: dimension mismatch");
  std::size_t wrong = 0;
  for (const auto& s : data)
    if (classify(model, s.x) != s.y) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

double vc_confidence(const BoundInput& input) {
  input.validate();
  const double l = static_cast<double>(input.l);
  const double radicand =
      (input.h * (std::log(2.0 * l / input.h) + 1.0) - std::log(input.eta / 4.0)) / l;
  if (radicand < 0.0)
    throw std::domain_error("vc_confidence: negative radicand (h too large for l)");
  return std::sqrt(radicand);
}

double risk_bound(double r_emp, const BoundInput& input) {
  if (!(r_emp >= 0.0) || !(r_emp <= 1.0))
    throw std::invalid_argument("risk_bound: r_emp must lie in [0,1]");
  return r_emp + vc_confidence(input);
}

double estimate_vc_dim(const KernelSpec& kernel, std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("estimate_vc_dim: dim must be >= 1");
  int p;
  switch (kernel.kind) {
    case KernelKind::Linear:
      p = 1;
      break;
    case KernelKind::Polynomial:
      kernel.validate();
      p = kernel.degree;
      break;
    default:
      throw std::invalid_argument("estimate_vc_dim: defined for linear and polynomial kernels only");
  }
  // binom(dim + p, p) = dimension of the degree-<=p monomial space, which
  // is the hyperplane capacity (feature dimension - 1) + 1.
  double r = 1.0;
  for (int k = 1; k <= p; ++k)
    r *= static_cast<double>(dim + static_cast<std::size_t>(k)) / static_cast<double>(k);
  return std::round(r);
}

SrmReport srm_select(const Dataset& data, const std::vector<int>& degrees,
                     const SolverConfig& config, double eta) {
  if (degrees.empty()) throw std::invalid_argument("srm_select: no degrees given");
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i] >= degrees[i + 1])
      throw std::invalid_argument("srm_select: degrees must be strictly increasing");
  }
  if (!data.has_both_classes()) throw std::invalid_argument("srm_select: both classes must be present");

  SrmReport report;
  for (int p : degrees) {
    SrmEntry e;
    e.degree = p;
    e.model = train(data, KernelSpec::polynomial(p), config);
    e.converged = e.model.meta.converged;
    e.empirical_risk = empirical_risk(e.model, data);
    e.vc_dim = estimate_vc_dim(e.model.kernel, data.dim());
    const BoundInput in{e.vc_dim, data.size(), eta};
    try {
      e.vc_confidence = vc_confidence(in);
      e.bound = risk_bound(e.empirical_risk, in);
    } catch (const std::domain_error&) {
      // Capacity so far beyond the sample size that the bound is not even
      // defined; keep the entry but rule it out of selection.
      e.vc_confidence = std::numeric_limits<double>::infinity();
      e.bound = std::numeric_limits<double>::infinity();
    }
    e.vacuous = e.vc_dim > static_cast<double>(data.size());
    report.entries.push_back(std::move(e));
  }

  const SrmEntry* best = nullptr;
  for (const auto& e : report.entries) {
    if (!e.converged) continue;
    if (best == nullptr || e.bound < best->bound) best = &e;
  }
  if (best == nullptr)
    throw SrmError("srm_select: no degree converged", std::move(report));
  report.selected_degree = best->degree;
  return report;
}

void write_srm_tsv(const SrmReport& report, std::ostream& out) {
  char buf[256];
  for (const auto& e : report.entries) {
    std::snprintf(buf, sizeof(buf), "%d\t%.17g\t%.17g\t%.17g\t%.17g\t%d\t%zu\n", e.degree,
                  e.empirical_risk, e.vc_dim, e.vc_confidence, e.bound, e.converged ? 1 : 0,
                  e.model.n_sv());
    out << buf;
  }
  out << "selected " << report.selected_degree << "\n";
}

}  // namespace svmkit
