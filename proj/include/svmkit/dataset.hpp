#pragma once

#include <cstddef>
#include <vector>

namespace svmkit {

/// One labeled observation: features in R^n, label in {-1, +1}.
struct Sample {
  std::vector<double> x;
  int y = +1;
};

/// A set of samples sharing one feature dimension. May hold a single
/// class (evaluation allows it; training rejects it).
class Dataset {
public:
  Dataset() = default;
  explicit Dataset(std::size_t dim) : dim_(dim) {}

  // Validates dimension, label and finiteness; throws std::invalid_argument.
  void add(Sample s);

  std::size_t size() const { return samples_.size(); }
  std::size_t dim() const { return dim_; }
  bool empty() const { return samples_.empty(); }

  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  std::size_t count(int label) const;
  bool has_both_classes() const { return count(+1) > 0 && count(-1) > 0; }

  std::vector<std::vector<double>> points() const;
  std::vector<int> labels() const;

private:
  std::vector<Sample> samples_;
  std::size_t dim_ = 0;
};

}  // namespace svmkit
