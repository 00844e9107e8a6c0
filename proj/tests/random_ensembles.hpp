#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/integer_distribution.hpp"

namespace shbin::testing {

/// Probability vectors drawn from a handful of regimes: spread over (0, 1),
/// rare events, near-certain events, two clusters, and occasional exact 0/1.
class EnsembleGenerator {
 public:
  explicit EnsembleGenerator(std::uint64_t seed) : rng_(seed) {}

  std::vector<double> probs(std::size_t m) {
    std::uniform_int_distribution<int> regime_pick(0, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int regime = regime_pick(rng_);
    const double a = unit(rng_);
    const double b = unit(rng_);
    std::vector<double> out(m);
    for (auto& p : out) {
      switch (regime) {
        case 0: p = unit(rng_); break;
        case 1: p = 0.1 * unit(rng_); break;
        case 2: p = 1.0 - 0.1 * unit(rng_); break;
        case 3: p = unit(rng_) < 0.5 ? a : b; break;
        default: {
          const double u = unit(rng_);
          p = u < 0.05 ? 0.0 : (u < 0.1 ? 1.0 : unit(rng_));
        }
      }
    }
    return out;
  }

  BernoulliEnsemble ensemble(std::size_t m) { return make_ensemble(probs(m)); }

  BernoulliEnsemble ensemble(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> size(lo, hi);
    return ensemble(size(rng_));
  }

  /// A random PMF on a random window of the integers.
  IntegerDistribution pmf() {
    std::uniform_int_distribution<long> offset(-5, 5);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(len(rng_));
    for (auto& x : w) x = unit(rng_) < 0.2 ? 0.0 : unit(rng_);
    w.front() = 0.05 + unit(rng_);
    double total = 0.0;
    for (const double x : w) total += x;
    for (auto& x : w) x /= total;
    return IntegerDistribution(offset(rng_), std::move(w));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Half the summands at 1/2, the rest at 1/3.
inline BernoulliEnsemble half_half_ensemble(std::size_t m) {
  std::vector<double> p(m, 1.0 / 3.0);
  for (std::size_t i = 0; i < m / 2; ++i) p[i] = 0.5;
  return make_ensemble(std::move(p));
}

}  // namespace shbin::testing
