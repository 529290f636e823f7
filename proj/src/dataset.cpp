#include "svmkit/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace svmkit {

void Dataset::add(Sample s) {
  if (s.y != +1 && s.y != -1) throw std::invalid_argument("label must be +1 or -1");
  if (s.x.empty()) throw std::invalid_argument("sample has no features");
  for (double v : s.x) {
    if (!std::isfinite(v)) throw std::invalid_argument("sample has a non-finite feature");
  }
  if (samples_.empty() && dim_ == 0) dim_ = s.x.size();
  if (s.x.size() != dim_) throw std::invalid_argument("sample dimension mismatch");
  samples_.push_back(std::move(s));
}

std::size_t Dataset::count(int label) const {
  std::size_t n = 0;
  for (const auto& s : samples_)
    if (s.y == label) ++n;
  return n;
}

std::vector<std::vector<double>> Dataset::points() const {
  std::vector<std::vector<double>> p;
  p.reserve(samples_.size());
  for (const auto& s : samples_) p.push_back(s.x);
  return p;
}

std::vector<int> Dataset::labels() const {
  std::vector<int> y;
  y.reserve(samples_.size());
  for (const auto& s : samples_) y.push_back(s.y);
  return y;
}

}  // namespace svmkit
