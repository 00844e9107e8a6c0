#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "shbin/ensemble.hpp"
#include "shbin/error.hpp"
#include "shbin/integer_distribution.hpp"

namespace shbin {

/// Default truncation point for Poisson tails.
inline constexpr double kPoissonMassFloor = 1e-14;

namespace detail {

struct IntegerSplit {
  long whole;
  double frac;
};

// floor/fractional split that treats values within 1e-9 * scale of an
// integer as that integer, so rounding noise in the moment solution cannot
// turn n* = 4 into floor 3 with fractional part 0.999... The scale is the
// magnitude of the terms x was computed from (|x| itself unless x is a
// difference).
inline IntegerSplit split_integer(double x, double scale) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, scale)) {
    return {static_cast<long>(nearest), 0.0};
  }
  const double whole = std::floor(x);
  return {static_cast<long>(whole), x - whole};
}

inline IntegerSplit split_integer(double x) { return split_integer(x, std::abs(x)); }

inline double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
inline double std_normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

}  // namespace detail

/// Law of W by folding in one Bernoulli at a time.
inline IntegerDistribution exact_pmf(const BernoulliEnsemble& e) {
  std::vector<double> pmf(e.size() + 1, 0.0);
  pmf[0] = 1.0;
  std::size_t top = 0;
  for (const double p : e.probs()) {
    const double q = 1.0 - p;
    ++top;
    pmf[top] = pmf[top - 1] * p;
    for (std::size_t k = top - 1; k > 0; --k) {
      pmf[k] = pmf[k] * q + pmf[k - 1] * p;
    }
    pmf[0] *= q;
  }
  return IntegerDistribution(0, std::move(pmf));
}

/// Sums the probability of all 2^m outcome vectors. Test oracle only.
inline IntegerDistribution brute_force_pmf(const BernoulliEnsemble& e) {
  constexpr std::size_t kMaxSummands = 20;
  const std::size_t m = e.size();
  if (m > kMaxSummands) {
    throw invalid_input("brute force enumeration is limited to m <= 20, got m = " + std::to_string(m));
  }
  std::vector<double> pmf(m + 1, 0.0);
  const std::uint32_t outcomes = std::uint32_t{1} << m;
  for (std::uint32_t mask = 0; mask < outcomes; ++mask) {
    double prob = 1.0;
    std::size_t successes = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        prob *= e[i];
        ++successes;
      } else {
        prob *= 1.0 - e[i];
      }
    }
    pmf[successes] += prob;
  }
  return IntegerDistribution(0, std::move(pmf));
}

/// Bi(n, p) * delta_offset, evaluated by the ratio recurrence outwards from the mode.
inline IntegerDistribution binomial_pmf(long n, double p, long offset = 0) {
  if (n < 0) {
    throw invalid_input("binomial needs n >= 0");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw invalid_input("binomial success probability outside [0, 1]: " + std::to_string(p));
  }
  if (n == 0 || p == 0.0) {
    return IntegerDistribution::point_mass(offset);
  }
  if (p == 1.0) {
    return IntegerDistribution::point_mass(offset + n);
  }
  const double q = 1.0 - p;
  const double nd = static_cast<double>(n);
  const long mode = std::min(n, static_cast<long>(std::floor((nd + 1.0) * p)));
  const double md = static_cast<double>(mode);
  const double log_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) - std::lgamma(nd - md + 1.0) +
                          md * std::log(p) + (nd - md) * std::log1p(-p);

  std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
  pmf[static_cast<std::size_t>(mode)] = std::exp(log_mode);
  const double odds = p / q;
  for (long k = mode; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    pmf[i + 1] = pmf[i] * static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
  }
  for (long k = mode; k > 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    pmf[i - 1] = pmf[i] * static_cast<double>(k) / static_cast<double>(n - k + 1) / odds;
  }
  double total = 0.0;
  for (const double w : pmf) total += w;
  for (double& w : pmf) w /= total;
  return IntegerDistribution(offset, std::move(pmf));
}

/// Real-valued three-moment solution (n*, p*, s*) together with its integer rounding.
struct ShiftedBinomialFit {
  double n_star = 0.0;
  double p_star = 0.0;
  double s_star = 0.0;
  long n = 0;
  long s = 0;
  double p = 0.0;
  double frac_n = 0.0;  // {n*}
  double frac_s = 0.0;  // {s*}
};

/// Matches mean, variance and third central moment of W with Bi(n, p) * delta_s.
///
/// p* = (l2 - l3) / (l1 - l2), n* = (l1 - l2) / (p* q*), s* = l1 - n* p*.
/// Then n = floor(n*), s = floor(s*) and p = (n* p* + {s*}) / n, which keeps
/// the mean exact: n p + s = l1.
///
/// l2 - l3 is evaluated as (sigma2 - mu3) / 2 from the directly accumulated
/// sigma2 and mu3, and q* as (sigma2 + mu3) / (2 sigma2); both keep full
/// precision even when every p_i is close to 1.
inline ShiftedBinomialFit fit_shifted_binomial(const MomentSummary& ms) {
  if (!(ms.sigma2 > 0.0)) {
    throw degenerate_ensemble("shifted binomial fit needs positive variance");
  }
  const double skew_num = 0.5 * (ms.sigma2 - ms.mu3);  // l2 - l3 = sum p_i^2 q_i
  const double skew_den = 0.5 * (ms.sigma2 + ms.mu3);  // sum p_i q_i^2
  if (!(skew_num > 0.0)) {
    throw degenerate_ensemble("shifted binomial fit needs lambda2 > lambda3");
  }
  if (!(skew_den > 0.0)) {
    throw degenerate_ensemble("shifted binomial fit needs p* < 1");
  }
  ShiftedBinomialFit fit;
  fit.p_star = skew_num / ms.sigma2;
  const double q_star = skew_den / ms.sigma2;
  fit.n_star = ms.sigma2 / (fit.p_star * q_star);
  fit.s_star = ms.lambda1 - ms.sigma2 / q_star;  // n* p* = sigma2 / q*

  const auto n_split = detail::split_integer(fit.n_star);
  const auto s_split = detail::split_integer(fit.s_star, ms.lambda1);
  fit.n = n_split.whole;
  fit.frac_n = n_split.frac;
  fit.s = s_split.whole;
  fit.frac_s = s_split.frac;
  if (fit.n < 1) {
    throw fit_out_of_range("rounded number of trials n = floor(" + std::to_string(fit.n_star) + ") < 1");
  }
  // Equal to (n* p* + {s*}) / n since n* p* = l1 - s*.
  fit.p = (ms.lambda1 - static_cast<double>(fit.s)) / static_cast<double>(fit.n);
  if (!(fit.p > 0.0 && fit.p < 1.0)) {
    throw fit_out_of_range("rounded success probability p = " + std::to_string(fit.p) + " is not in (0, 1)");
  }
  return fit;
}

inline IntegerDistribution shifted_binomial_pmf(const ShiftedBinomialFit& fit) {
  return binomial_pmf(fit.n, fit.p, fit.s);
}

/// Poisson(lambda), cut where the remaining upper tail is provably below mass_floor.
/// The kept masses are not renormalised.
inline IntegerDistribution poisson_pmf(double lambda, double mass_floor = kPoissonMassFloor) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw invalid_input("Poisson rate must be finite and non-negative");
  }
  if (!(mass_floor > 0.0 && mass_floor <= 1e-10)) {
    throw invalid_input("Poisson mass floor must lie in (0, 1e-10]");
  }
  if (lambda == 0.0) {
    return IntegerDistribution::point_mass(0);
  }
  const long mode = static_cast<long>(std::floor(lambda));
  const double md = static_cast<double>(mode);
  const double at_mode = std::exp(-lambda + md * std::log(lambda) - std::lgamma(md + 1.0));

  std::vector<double> upper{at_mode};
  for (long k = mode;; ++k) {
    // For k + 1 > lambda the ratios lambda / (j + 1) decrease, so the tail past k
    // is dominated by a geometric series with ratio r.
    const double r = lambda / static_cast<double>(k + 1);
    if (r < 1.0 && upper.back() * r / (1.0 - r) < mass_floor) {
      break;
    }
    upper.push_back(upper.back() * r);
  }
  std::vector<double> pmf(static_cast<std::size_t>(mode) + upper.size(), 0.0);
  std::copy(upper.begin(), upper.end(), pmf.begin() + mode);
  for (long k = mode; k > 0; --k) {
    const auto i = static_cast<std::size_t>(k);
    pmf[i - 1] = pmf[i] * static_cast<double>(k) / lambda;
  }
  return IntegerDistribution(0, std::move(pmf));
}

/// Translated Poisson: shift floor(l1 - sigma2), rate sigma2 + {l1 - sigma2}; the mean is exact.
inline IntegerDistribution shifted_poisson_pmf(const MomentSummary& ms, double mass_floor = kPoissonMassFloor) {
  if (!(ms.sigma2 > 0.0)) {
    throw degenerate_ensemble("shifted Poisson needs positive variance");
  }
  const auto split = detail::split_integer(ms.lambda1 - ms.sigma2);
  const auto base = poisson_pmf(ms.sigma2 + split.frac, mass_floor);
  return IntegerDistribution(base.offset() + split.whole,
                             std::vector<double>(base.masses().begin(), base.masses().end()));
}

/// Bi(m, l1 / m): trials fixed to the number of summands, mean matched.
inline IntegerDistribution one_param_binomial_pmf(const BernoulliEnsemble& e) {
  const double m = static_cast<double>(e.size());
  const double p = std::min(1.0, moments(e).lambda1 / m);
  return binomial_pmf(static_cast<long>(e.size()), p);
}

/// Bi(n, l1 / n) with n = floor(l1^2 / l2): mean and (approximately) variance matched.
inline IntegerDistribution two_param_binomial_pmf(const MomentSummary& ms) {
  if (!(ms.lambda2 > 0.0)) {
    throw degenerate_ensemble("two-parameter binomial needs lambda2 > 0");
  }
  const long n = detail::split_integer(ms.lambda1 * ms.lambda1 / ms.lambda2).whole;
  const double p = ms.lambda1 / static_cast<double>(n);
  if (p > 1.0) {
    throw fit_out_of_range("two-parameter binomial p = l1 / n = " + std::to_string(p) + " exceeds 1");
  }
  return binomial_pmf(n, p);
}

/// Continuity-corrected normal on the integers lo..hi. Cell k receives
/// Phi((k + 1/2 - mean) / sd) - Phi((k - 1/2 - mean) / sd); the two extreme
/// cells absorb the rest of each tail.
inline IntegerDistribution discretized_normal_pmf(double mean, double variance, long lo, long hi) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw degenerate_ensemble("normal approximation needs positive variance");
  }
  if (lo > hi) {
    throw invalid_input("normal support is empty");
  }
  if (lo == hi) {
    return IntegerDistribution::point_mass(lo);
  }
  const double sd = std::sqrt(variance);
  auto z = [&](double edge) { return (edge - mean) / sd; };
  std::vector<double> pmf(static_cast<std::size_t>(hi - lo) + 1);
  for (long k = lo; k <= hi; ++k) {
    const double a = z(static_cast<double>(k) - 0.5);
    const double b = z(static_cast<double>(k) + 0.5);
    double w = 0.0;
    if (k == lo) {
      w = detail::std_normal_cdf(b);
    } else if (k == hi) {
      w = detail::std_normal_sf(a);
    } else if (a >= 0.0) {
      w = detail::std_normal_sf(a) - detail::std_normal_sf(b);
    } else {
      w = detail::std_normal_cdf(b) - detail::std_normal_cdf(a);
    }
    pmf[static_cast<std::size_t>(k - lo)] = std::max(0.0, w);
  }
  return IntegerDistribution(lo, std::move(pmf));
}

/// x log p + (n - x) log(1 - p), with n allowed to be fractional. The
/// binomial coefficient is omitted, so this is a likelihood up to a constant.
inline double fractional_binomial_loglik(long x, double n, double p) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw invalid_input("likelihood needs n > 0");
  }
  if (x < 0 || static_cast<double>(x) > std::ceil(n)) {
    throw invalid_input("likelihood needs 0 <= x <= ceil(n)");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw invalid_input("likelihood needs p in [0, 1]");
  }
  const double xd = static_cast<double>(x);
  if (p == 0.0) {
    if (x != 0) throw std::domain_error("likelihood with p = 0 requires x = 0");
    return 0.0;
  }
  if (p == 1.0) {
    if (xd != n) throw std::domain_error("likelihood with p = 1 requires x = n");
    return 0.0;
  }
  return xd * std::log(p) + (n - xd) * std::log1p(-p);
}

}  // namespace shbin
