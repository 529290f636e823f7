#include "svmkit/kernel.hpp"

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace svmkit {

namespace {

void check_finite(std::span<const double> v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + " has a non-finite component");
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double sq_dist(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double int_pow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad numeric value '" + s + "' in kernel token");
  return v;
}

}  // namespace

KernelSpec KernelSpec::linear() { return KernelSpec{KernelKind::Linear, 1, 10.0, 1.0, 0.0}; }

KernelSpec KernelSpec::polynomial(int degree) {
  KernelSpec s{KernelKind::Polynomial, degree, 10.0, 1.0, 0.0};
  s.validate();
  return s;
}

KernelSpec KernelSpec::rbf(double sigma) {
  KernelSpec s{KernelKind::Rbf, 3, sigma, 1.0, 0.0};
  s.validate();
  return s;
}

KernelSpec KernelSpec::sigmoid(double kappa, double delta) {
  KernelSpec s{KernelKind::Sigmoid, 3, 10.0, kappa, delta};
  s.validate();
  return s;
}

void KernelSpec::validate() const {
  switch (kind) {
    case KernelKind::Linear:
      break;
    case KernelKind::Polynomial:
      if (degree < 1) throw std::invalid_argument("polynomial degree must be >= 1");
      break;
    case KernelKind::Rbf:
      if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("rbf sigma must be positive and finite");
      break;
    case KernelKind::Sigmoid:
      if (!std::isfinite(kappa) || !std::isfinite(delta))
        throw std::invalid_argument("sigmoid kappa/delta must be finite");
      break;
  }
}

std::string KernelSpec::token() const {
  switch (kind) {
    case KernelKind::Linear:
      return "linear";
    case KernelKind::Polynomial:
      return "poly:p=" + std::to_string(degree);
    case KernelKind::Rbf:
      return "rbf:sigma=" + format_double(sigma);
    case KernelKind::Sigmoid:
      return "sigmoid:kappa=" + format_double(kappa) + ",delta=" + format_double(delta);
  }
  throw std::logic_error("unreachable kernel kind");
}

KernelSpec KernelSpec::parse(const std::string& token) {
  auto expect_key = [&](const std::string& part, const std::string& key) {
    if (part.rfind(key + "=", 0) != 0)
      throw std::invalid_argument("bad kernel token '" + token + "': expected " + key + "=...");
    return part.substr(key.size() + 1);
  };

  if (token == "linear") return linear();

  const auto colon = token.find(':');
  const std::string head = token.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : token.substr(colon + 1);

  if (head == "poly") {
    const std::string val = expect_key(rest, "p");
    int p = 0;
    auto res = std::from_chars(val.data(), val.data() + val.size(), p);
    if (res.ec != std::errc() || res.ptr != val.data() + val.size())
      throw std::invalid_argument("bad kernel token '" + token + "': p must be an integer");
    return polynomial(p);
  }
  if (head == "rbf") {
    return rbf(parse_double(expect_key(rest, "sigma")));
  }
  if (head == "sigmoid") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad kernel token '" + token + "': expected kappa=...,delta=...");
    const double k = parse_double(expect_key(rest.substr(0, comma), "kappa"));
    const double d = parse_double(expect_key(rest.substr(comma + 1), "delta"));
    return sigmoid(k, d);
  }
  throw std::invalid_argument("unknown kernel '" + token + "'");
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("kernel_eval: inputs must share a dimension >= 1");
  check_finite(x, "kernel_eval: x");
  check_finite(y, "kernel_eval: y");
  spec.validate();

  switch (spec.kind) {
    case KernelKind::Linear:
      return dot(x, y);
    case KernelKind::Polynomial:
      return int_pow(dot(x, y) + 1.0, spec.degree);
    case KernelKind::Rbf:
      return std::exp(-sq_dist(x, y) / (2.0 * spec.sigma * spec.sigma));
    case KernelKind::Sigmoid:
      return std::tanh(spec.kappa * dot(x, y) - spec.delta);
  }
  throw std::logic_error("unreachable kernel kind");
}

Matrix gram_matrix(const KernelSpec& spec,
                   const std::vector<std::vector<double>>& points,
                   std::size_t max_points) {
  if (points.empty()) throw std::invalid_argument("gram_matrix: empty point list");
  if (points.size() > max_points)
    throw std::invalid_argument("gram_matrix: " + std::to_string(points.size()) +
                                " points exceed the cap of " + std::to_string(max_points));
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("gram_matrix: points of mixed dimension");
  }

  const std::size_t l = points.size();
  Matrix g(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = kernel_eval(spec, points[i], points[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::asymmetry() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

double psd_violation(const Matrix& gram, double tol) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw std::invalid_argument("psd_violation: matrix must be square and non-empty");
  const double scale = std::max(1.0, gram.max_abs());
  if (gram.asymmetry() > tol * scale)
    throw std::invalid_argument("psd_violation: matrix is not symmetric within tolerance");

  const auto n = static_cast<Eigen::Index>(gram.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gram(i, j);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("psd_violation: eigensolver failed");
  const double lambda_min = solver.eigenvalues().minCoeff();
  return std::max(0.0, -lambda_min);
}

}  // namespace svmkit
