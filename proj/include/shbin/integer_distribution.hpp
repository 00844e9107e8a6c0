#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shbin {

/// Finitely supported law on the integers: P(X = offset + k) = mass[k].
class IntegerDistribution {
 public:
  IntegerDistribution() : offset_(0), pmf_{1.0} {}

  /// Leading and trailing zero masses are dropped so the stored support is tight.
  IntegerDistribution(long offset, std::vector<double> pmf) : offset_(offset), pmf_(std::move(pmf)) {
    if (pmf_.empty()) {
      throw std::invalid_argument("distribution needs at least one mass");
    }
    for (const double w : pmf_) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("distribution masses must be finite and non-negative");
      }
    }
    tighten();
  }

  static IntegerDistribution point_mass(long at) { return IntegerDistribution(at, {1.0}); }

  long offset() const noexcept { return offset_; }
  /// Largest support point.
  long last() const noexcept { return offset_ + static_cast<long>(pmf_.size()) - 1; }
  std::size_t size() const noexcept { return pmf_.size(); }
  std::span<const double> masses() const noexcept { return pmf_; }

  /// P(X = k); zero outside the stored support.
  double operator()(long k) const noexcept {
    if (k < offset_ || k > last()) {
      return 0.0;
    }
    return pmf_[static_cast<std::size_t>(k - offset_)];
  }

  double total_mass() const noexcept {
    double total = 0.0;
    for (const double w : pmf_) total += w;
    return total;
  }

  double mean() const noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) acc += static_cast<double>(k) * pmf_[k];
    return static_cast<double>(offset_) + acc / total_mass();
  }

  /// E(X - EX)^order, relative to the normalised mass.
  double central_moment(int order) const noexcept {
    const double mu = mean() - static_cast<double>(offset_);
    double acc = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      acc += std::pow(static_cast<double>(k) - mu, order) * pmf_[k];
    }
    return acc / total_mass();
  }

  double variance() const noexcept { return central_moment(2); }

  /// P(X > k)
  double upper_tail(long k) const noexcept {
    double acc = 0.0;
    for (long j = std::max(k + 1, offset_); j <= last(); ++j) acc += (*this)(j);
    return acc;
  }

  bool is_point_mass() const noexcept { return pmf_.size() == 1; }

  friend bool operator==(const IntegerDistribution&, const IntegerDistribution&) = default;

 private:
  void tighten() {
    std::size_t lo = 0;
    while (lo < pmf_.size() && pmf_[lo] == 0.0) ++lo;
    if (lo == pmf_.size()) {
      throw std::invalid_argument("distribution has no mass");
    }
    std::size_t hi = pmf_.size();
    while (pmf_[hi - 1] == 0.0) --hi;
    if (lo > 0 || hi < pmf_.size()) {
      pmf_ = std::vector<double>(pmf_.begin() + static_cast<std::ptrdiff_t>(lo),
                                 pmf_.begin() + static_cast<std::ptrdiff_t>(hi));
      offset_ += static_cast<long>(lo);
    }
  }

  long offset_;
  std::vector<double> pmf_;
};

}  // namespace shbin
