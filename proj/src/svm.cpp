#include "svmkit/svm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace svmkit {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_strict_double(const std::string& tok, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw std::invalid_argument(std::string("model file: bad ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

Model train(const Dataset& data, const KernelSpec& kernel, const SolverConfig& config,
            std::ostream* trace) {
  kernel.validate();
  config.validate();
  if (data.size() < 2) throw std::invalid_argument("train: need at least two samples");
  if (!data.has_both_classes()) throw std::invalid_argument("train: both classes must be present");

  const auto points = data.points();
  const auto labels = data.labels();
  const Matrix gram = gram_matrix(kernel, points);
  const SolverSolution sol = solve_dual(gram, labels, config, trace);
  const double bias = compute_bias(sol, gram, labels, config);

  Model model;
  model.kernel = kernel;
  model.bias = bias;
  model.C = config.C;
  model.dim = data.dim();
  model.meta = {data.size(), sol.iterations, sol.converged, sol.objective};
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (sol.alphas[i] > config.alpha_cutoff) {
      model.support_vectors.push_back(points[i]);
      model.sv_alphas.push_back(std::min(sol.alphas[i], config.C));
      model.sv_labels.push_back(labels[i]);
    }
  }
  if (model.n_sv() == 0) throw std::runtime_error("train: solution has no support vectors");
  return model;
}

double compute_bias(const SolverSolution& solution, const Matrix& gram,
                    const std::vector<int>& labels, const SolverConfig& config) {
  const std::size_t l = labels.size();
  if (solution.alphas.size() != l || gram.rows() != l)
    throw std::invalid_argument("compute_bias: size mismatch");

  // Bias-free decision sums g_i = sum_j alpha_j y_j G[j][i].
  std::vector<double> g(l, 0.0);
  for (std::size_t j = 0; j < l; ++j) {
    const double w = solution.alphas[j] * labels[j];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < l; ++i) g[i] += w * gram(j, i);
  }

  double sum = 0.0;
  std::size_t margin_svs = 0;
  bool any_sv = false;
  for (std::size_t i = 0; i < l; ++i) {
    const double a = solution.alphas[i];
    if (a <= config.alpha_cutoff) continue;
    any_sv = true;
    if (a < config.C * (1.0 - 1e-6)) {
      sum += labels[i] - g[i];
      ++margin_svs;
    }
  }
  if (margin_svs > 0) return sum / static_cast<double>(margin_svs);
  if (!any_sv) throw std::runtime_error("compute_bias: no support vectors");

  // Every alpha sits on a box bound: place the threshold midway between
  // the closest bias-free scores of the two classes.
  double neg_max = -std::numeric_limits<double>::infinity();
  double pos_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < l; ++i) {
    if (labels[i] < 0)
      neg_max = std::max(neg_max, g[i]);
    else
      pos_min = std::min(pos_min, g[i]);
  }
  return -(neg_max + pos_min) / 2.0;
}

double decision_value(const Model& model, std::span<const double> x) {
  if (x.size() != model.dim) throw std::invalid_argument("decision_value: dimension mismatch");
  double f = 0.0;
  for (std::size_t i = 0; i < model.n_sv(); ++i)
    f += model.sv_alphas[i] * model.sv_labels[i] *
         kernel_eval(model.kernel, model.support_vectors[i], x);
  return f + model.bias;
}

int classify(const Model& model, std::span<const double> x) {
  return decision_value(model, x) >= 0.0 ? +1 : -1;
}

std::vector<double> weight_vector(const Model& model) {
  if (model.kernel.kind != KernelKind::Linear)
    throw std::invalid_argument("weight_vector: defined for linear kernels only");
  std::vector<double> w(model.dim, 0.0);
  for (std::size_t i = 0; i < model.n_sv(); ++i) {
    const double c = model.sv_alphas[i] * model.sv_labels[i];
    for (std::size_t d = 0; d < model.dim; ++d) w[d] += c * model.support_vectors[i][d];
  }
  return w;
}

double margin(const Model& model) {
  const auto w = weight_vector(model);
  double norm_sq = 0.0;
  for (double v : w) norm_sq += v * v;
  const double norm = std::sqrt(norm_sq);
  if (norm == 0.0) throw std::runtime_error("margin: weight vector is zero");
  return 2.0 / norm;
}

void save_model(const Model& model, std::ostream& out) {
  out << "svmmodel v1\n";
  out << "kernel " << model.kernel.token() << "\n";
  out << "C " << fmt17(model.C) << "\n";
  out << "bias " << fmt17(model.bias) << "\n";
  out << "dim " << model.dim << "\n";
  out << "nsv " << model.n_sv() << "\n";
  for (std::size_t i = 0; i < model.n_sv(); ++i) {
    out << "sv " << fmt17(model.sv_alphas[i]) << " " << model.sv_labels[i];
    for (double v : model.support_vectors[i]) out << " " << fmt17(v);
    out << "\n";
  }
}

Model load_model(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw std::invalid_argument(std::string("model file: missing ") + what);
    return line;
  };
  auto field = [&](const std::string& l, const std::string& key) {
    if (l.rfind(key + " ", 0) != 0)
      throw std::invalid_argument("model file: expected '" + key + "', got '" + l + "'");
    return l.substr(key.size() + 1);
  };

  if (next_line("header") != "svmmodel v1")
    throw std::invalid_argument("model file: unrecognized header '" + line + "'");

  Model model;
  model.kernel = KernelSpec::parse(field(next_line("kernel"), "kernel"));
  model.C = parse_strict_double(field(next_line("C"), "C"), "C");
  model.bias = parse_strict_double(field(next_line("bias"), "bias"), "bias");
  model.dim = static_cast<std::size_t>(std::stoul(field(next_line("dim"), "dim")));
  const auto nsv = static_cast<std::size_t>(std::stoul(field(next_line("nsv"), "nsv")));
  if (model.dim == 0) throw std::invalid_argument("model file: dim must be positive");
  if (nsv == 0) throw std::invalid_argument("model file: nsv must be positive");

  for (std::size_t i = 0; i < nsv; ++i) {
    std::istringstream row(next_line("sv row"));
    std::string tag, tok;
    row >> tag;
    if (tag != "sv") throw std::invalid_argument("model file: expected sv row, got '" + line + "'");
    row >> tok;
    const double alpha = parse_strict_double(tok, "alpha");
    int label = 0;
    row >> label;
    if (label != +1 && label != -1) throw std::invalid_argument("model file: sv label must be +1 or -1");
    std::vector<double> x;
    x.reserve(model.dim);
    while (row >> tok) x.push_back(parse_strict_double(tok, "sv coordinate"));
    if (x.size() != model.dim) throw std::invalid_argument("model file: sv row dimension mismatch");
    model.sv_alphas.push_back(alpha);
    model.sv_labels.push_back(label);
    model.support_vectors.push_back(std::move(x));
  }
  model.meta.train_size = 0;  // unknown for loaded models
  model.meta.converged = true;
  return model;
}

}  // namespace svmkit
