#include "svmkit/data.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "svmkit/rng.hpp"

namespace svmkit {

namespace {

std::vector<std::string> split_fields(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& tok, std::size_t line_no, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw DataError(std::string("bad ") + what + " '" + tok + "'", line_no);
  return v;
}

double polar_disc_x(Rng& rng, double radius, double& y_out) {
  const double r = radius * std::sqrt(rng.uniform());
  const double t = 2.0 * 3.14159265358979323846 * rng.uniform();
  y_out = r * std::sin(t);
  return r * std::cos(t);
}

void require_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("generator size must be even and >= 2");
}

}  // namespace

Dataset load_wisconsin(std::istream& in, const IngestSpec& spec) {
  if (spec.substitute_value >= 1.0 && spec.substitute_value <= 10.0)
    throw std::invalid_argument("substitute value must lie outside the attribute range [1,10]");

  Dataset data(9);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_fields(line);
    if (f.size() != 11) throw DataError("expected 11 fields, got " + std::to_string(f.size()), line_no);

    Sample s;
    bool drop = false;
    for (std::size_t k = 1; k <= 9; ++k) {
      if (f[k] == "?") {
        if (spec.missing_policy == MissingPolicy::Drop) {
          drop = true;
          break;
        }
        s.x.push_back(spec.substitute_value);
        continue;
      }
      const double v = parse_number(f[k], line_no, "attribute");
      if (v != std::floor(v) || v < 1.0 || v > 10.0)
        throw DataError("attribute '" + f[k] + "' outside [1,10]", line_no);
      s.x.push_back(v);
    }
    if (drop) continue;
    if (f[10] == "2")
      s.y = +1;
    else if (f[10] == "4")
      s.y = -1;
    else
      throw DataError("unknown class code '" + f[10] + "'", line_no);
    data.add(std::move(s));
  }
  return data;
}

Dataset load_mushroom(std::istream& in, const IngestSpec& spec) {
  if (spec.substitute_value >= 97.0 && spec.substitute_value <= 122.0)
    throw std::invalid_argument("substitute value must lie outside the letter-code range [97,122]");

  Dataset data(22);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_fields(line);
    if (f.size() != 23) throw DataError("expected 23 fields, got " + std::to_string(f.size()), line_no);

    Sample s;
    if (f[0] == "e")
      s.y = +1;
    else if (f[0] == "p")
      s.y = -1;
    else
      throw DataError("unknown class '" + f[0] + "'", line_no);

    bool drop = false;
    for (std::size_t k = 1; k <= 22; ++k) {
      if (f[k].size() != 1) throw DataError("attribute '" + f[k] + "' is not a single character", line_no);
      const char c = f[k][0];
      if (c == '?') {
        if (spec.missing_policy == MissingPolicy::Drop) {
          drop = true;
          break;
        }
        s.x.push_back(spec.substitute_value);
      } else if (c >= 'a' && c <= 'z') {
        s.x.push_back(static_cast<double>(c));
      } else {
        throw DataError("attribute '" + f[k] + "' is not a lowercase letter", line_no);
      }
    }
    if (drop) continue;
    data.add(std::move(s));
  }
  return data;
}

Dataset load_csv(std::istream& in, bool header_row) {
  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (header_row && line_no == 1) continue;
    if (line.empty() || line == "\r") continue;
    const auto f = split_fields(line);
    if (f.size() < 2) throw DataError("expected label plus at least one feature", line_no);

    Sample s;
    const double y = parse_number(f[0], line_no, "label");
    if (y == 1.0)
      s.y = +1;
    else if (y == -1.0)
      s.y = -1;
    else
      throw DataError("label '" + f[0] + "' is not +-1", line_no);
    for (std::size_t k = 1; k < f.size(); ++k)
      s.x.push_back(parse_number(f[k], line_no, "feature"));
    try {
      data.add(std::move(s));
    } catch (const std::invalid_argument& ex) {
      throw DataError(ex.what(), line_no);
    }
  }
  return data;
}

void write_csv(const Dataset& data, std::ostream& out) {
  char buf[64];
  for (const auto& s : data) {
    out << (s.y > 0 ? "+1" : "-1");
    for (double v : s.x) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << "," << buf;
    }
    out << "\n";
  }
}

std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec) {
  if (spec.train_size == 0 || spec.train_size >= data.size())
    throw std::invalid_argument("split: train_size must lie in [1, size)");

  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(spec.seed);
  for (std::size_t i = data.size() - 1; i > 0; --i)
    std::swap(idx[i], idx[rng.below(i + 1)]);

  Dataset train(data.dim()), test(data.dim());
  for (std::size_t k = 0; k < idx.size(); ++k)
    (k < spec.train_size ? train : test).add(data[idx[k]]);
  if (!train.has_both_classes())
    throw std::invalid_argument("split: training side came out single-class; use another seed");
  return {std::move(train), std::move(test)};
}

Dataset synth_separable(std::size_t n, std::uint64_t seed) {
  require_even(n);
  Dataset data(2);
  Rng rng(seed);
  for (std::size_t k = 0; k < n / 2; ++k) {
    double y;
    const double x = polar_disc_x(rng, 1.5, y);
    data.add({{2.0 + x, 2.0 + y}, +1});
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    double y;
    const double x = polar_disc_x(rng, 1.5, y);
    data.add({{-2.0 + x, -2.0 + y}, -1});
  }
  return data;
}

Dataset synth_nonseparable(std::size_t n, std::uint64_t seed) {
  require_even(n);
  Dataset data(2);
  Rng rng(seed);
  const double spread = 2.0 / 3.0;
  auto blob_point = [&]() {
    while (true) {
      const auto g = rng.normal_pair();
      const double dx = spread * g[0], dy = spread * g[1];
      if (dx * dx + dy * dy <= 4.0) return std::array<double, 2>{dx, dy};
    }
  };
  for (std::size_t k = 0; k < n / 2; ++k) {
    const auto p = blob_point();
    data.add({{1.0 + p[0], 1.0 + p[1]}, +1});
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const auto p = blob_point();
    data.add({{-1.0 + p[0], -1.0 + p[1]}, -1});
  }
  return data;
}

Dataset synth_hard(std::size_t n, std::uint64_t seed, bool label_noise) {
  require_even(n);
  Dataset data(2);
  Rng rng(seed);
  std::vector<Sample> samples;
  for (std::size_t k = 0; k < n / 2; ++k) {
    double y;
    const double x = polar_disc_x(rng, 1.0, y);
    samples.push_back({{x, y}, +1});
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double r = std::sqrt(rng.uniform() * (2.5 * 2.5 - 1.5 * 1.5) + 1.5 * 1.5);
    const double t = 2.0 * 3.14159265358979323846 * rng.uniform();
    samples.push_back({{r * std::cos(t), r * std::sin(t)}, -1});
  }
  if (label_noise) {
    // Flip an exact, seeded 5% of the labels.
    const auto flips = static_cast<std::size_t>(std::llround(0.05 * static_cast<double>(n)));
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(idx[i], idx[rng.below(i + 1)]);
    for (std::size_t k = 0; k < flips; ++k) samples[idx[k]].y = -samples[idx[k]].y;
  }
  for (auto& s : samples) data.add(std::move(s));
  return data;
}

}  // namespace svmkit
