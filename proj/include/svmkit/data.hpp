#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "svmkit/dataset.hpp"

namespace svmkit {

/// Ingestion failure with the 1-based source line when known.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

enum class IngestFormat { WisconsinBreastCancer, Mushroom, GenericCsv };
enum class MissingPolicy { SubstituteOutOfRange, Drop };

struct IngestSpec {
  IngestFormat format = IngestFormat::GenericCsv;
  MissingPolicy missing_policy = MissingPolicy::SubstituteOutOfRange;
  double substitute_value = 0.0;  // must lie outside the format's attribute range
};

/// Wisconsin breast cancer records: `id,a1,...,a9,class` with attributes
/// in [1,10] or `?` and class 2 (benign -> +1) or 4 (malignant -> -1).
/// The id column is discarded. The canonical file yields 699 samples of
/// dimension 9.
Dataset load_wisconsin(std::istream& in, const IngestSpec& spec = {IngestFormat::WisconsinBreastCancer, MissingPolicy::SubstituteOutOfRange, 0.0});

/// Mushroom records: `class,a1,...,a22` with class e (edible -> +1) or
/// p (poisonous -> -1) and single-character nominal attributes mapped to
/// their ASCII codes; `?` counts as missing. The canonical file yields
/// 8124 samples of dimension 22.
Dataset load_mushroom(std::istream& in, const IngestSpec& spec = {IngestFormat::Mushroom, MissingPolicy::SubstituteOutOfRange, 0.0});

/// `label,feat1,...,featd` with label parsing to exactly +-1.
/// `header_row` skips the first line.
Dataset load_csv(std::istream& in, bool header_row = false);

/// Inverse of load_csv (no header).
void write_csv(const Dataset& data, std::ostream& out);

struct SplitSpec {
  std::size_t train_size = 0;
  std::uint64_t seed = 0;
};

/// Seeded Fisher-Yates partition: exactly train_size samples drawn
/// without replacement, the complement (in shuffled order) as test.
/// Throws when train_size >= size or when the training side comes out
/// single-class (reseed in that case).
std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec);

/// Two round clusters in 2D with a positive gap between them:
/// +1 uniform in the radius-1.5 disc at (2,2), -1 at (-2,-2).
/// n must be even and >= 2; classes are exactly balanced.
Dataset synth_separable(std::size_t n, std::uint64_t seed);

/// Overlapping Gaussian-like blobs (truncated at radius 2) centered at
/// (1,1) and (-1,-1): mildly mixed near the midline, so a linear
/// machine keeps a small positive training error while curved kernels
/// can fit almost everything.
Dataset synth_nonseparable(std::size_t n, std::uint64_t seed);

/// Concentric pattern: +1 uniform in the unit disc, -1 uniform in the
/// annulus [1.5, 2.5]. Radially separable, linearly hopeless. With
/// `label_noise`, a seeded 5% of labels are flipped.
Dataset synth_hard(std::size_t n, std::uint64_t seed, bool label_noise = false);

}  // namespace svmkit
