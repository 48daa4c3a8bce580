#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace netcoord {

// Streaming mean/variance accumulator (Welford). merge() makes aggregation
// order-independent, so trials can be accumulated in any order.
class RunningStats {
public:
  void add(double x) {
    ++n_;
    double delta = x - mean_;
    mean_ += delta / double(n_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) { *this = o; return; }
    double delta = o.mean_ - mean_;
    long long n = n_ + o.n_;
    m2_ += o.m2_ + delta * delta * double(n_) * double(o.n_) / double(n);
    mean_ += delta * double(o.n_) / double(n);
    n_ = n;
  }

  long long count() const { return n_; }
  double mean() const { return mean_; }
  double sample_variance() const { return n_ > 1 ? m2_ / double(n_ - 1) : 0.0; }
  double sample_std() const { return std::sqrt(sample_variance()); }
  double std_error() const { return n_ > 0 ? sample_std() / std::sqrt(double(n_)) : 0.0; }

private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct MonteCarloStats {
  long long trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

inline MonteCarloStats finalize_stats(const RunningStats& acc, std::uint64_t seed) {
  return MonteCarloStats{acc.count(), acc.mean(), acc.std_error(), seed};
}

// Pearson chi-square statistic of observed counts against a discrete law.
// A cell with zero probability but nonzero observations yields +infinity.
inline double chi_square_statistic(const std::vector<long long>& counts,
                                   const std::vector<double>& probs) {
  if (counts.size() != probs.size())
    throw std::invalid_argument("chi_square_statistic: size mismatch");
  long long total = 0;
  for (long long c : counts) total += c;
  double stat = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    double expected = probs[k] * double(total);
    if (expected <= 0.0) {
      if (counts[k] > 0) return std::numeric_limits<double>::infinity();
      continue;
    }
    double d = double(counts[k]) - expected;
    stat += d * d / expected;
  }
  return stat;
}

// One-sample Kolmogorov-Smirnov statistic against the uniform law on [0,1).
inline double ks_statistic_uniform(std::vector<double> sample) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic_uniform: empty sample");
  std::sort(sample.begin(), sample.end());
  double n = double(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    d = std::max(d, (double(i) + 1.0) / n - sample[i]);
    d = std::max(d, sample[i] - double(i) / n);
  }
  return d;
}

}  // namespace netcoord
