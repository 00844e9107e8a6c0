#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/error.hpp"
#include "shbin/integer_distribution.hpp"

namespace shbin {

/// Error bounds for the shifted binomial approximation and every constituent
/// that goes into them. A report for a zero-variance ensemble has
/// applicable == false and every bound set to +inf.
struct BoundReport {
  bool applicable = true;
  double K = 0.0;
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;
  double A4 = 0.0;
  double eta = 0.0;
  double eta_caps = 0.0;  // e^{-s2/4} + e^{-s2/4+1}, the ordering-free value of eta
  double tv_bound = 0.0;
  double loc_bound = 0.0;
  double tv_corollary = 0.0;
  double loc_corollary = 0.0;
  std::vector<std::string> notes;
};

struct CorollaryBounds {
  double tv = 0.0;
  double loc = 0.0;
};

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline BoundReport not_applicable(std::string why) {
  BoundReport r;
  r.applicable = false;
  r.K = r.A1 = r.A2 = r.A3 = r.A4 = r.eta = r.eta_caps = kInf;
  r.tv_bound = r.loc_bound = r.tv_corollary = r.loc_corollary = kInf;
  r.notes.push_back(std::move(why));
  return r;
}

// sigma2 (l3 - l4) - (l2 - l3)^2, evaluated as sigma2 * sum_i a_i (p_i - p*)^2
// with a_i = p_i q_i and p* = sum a_i p_i / sigma2. Both are equal to
// 1/2 sum_{i,j} a_i a_j (p_i - p_j)^2; this form cannot go negative.
inline double spread_numerator(const BernoulliEnsemble& e, double sigma2) {
  double weighted = 0.0;
  for (const double p : e.probs()) weighted += p * (1.0 - p) * p;
  const double centre = weighted / sigma2;
  double acc = 0.0;
  for (const double p : e.probs()) {
    const double d = p - centre;
    acc += p * (1.0 - p) * d * d;
  }
  return sigma2 * acc;
}

}  // namespace detail

/// Simplified bounds: (17 + 2 l1/n)/s2 + 2e^{1-s2/4} and
/// (222 + 12 l1/n)/(s2 sqrt v) + 2e^{1-s2/4}.
inline CorollaryBounds corollary_bounds(const MomentSummary& ms, const ShiftedBinomialFit& fit) {
  if (!(ms.sigma2 > 0.0) || !(ms.v > 0.0) || fit.n < 1) {
    return {detail::kInf, detail::kInf};
  }
  const double ratio = ms.lambda1 / static_cast<double>(fit.n);
  const double tail = 2.0 * std::exp(1.0 - ms.sigma2 / 4.0);
  return {(17.0 + 2.0 * ratio) / ms.sigma2 + tail,
          (222.0 + 12.0 * ratio) / (ms.sigma2 * std::sqrt(ms.v)) + tail};
}

/// Total variation and local bounds for L(W) against Bi(n, p) * delta_s.
///
/// tv  <= K (4 A1 + 2 A2) + eta
/// loc <= K (8 A3 + 4 A4) + eta
///
/// eta needs max_{i <= s} p_i and max_{i > n+s} p_i, which depend on how the
/// summands are indexed. They are evaluated with the probabilities sorted
/// ascending; each product is capped by its exponential tail estimate either way.
inline BoundReport theorem_bounds(const BernoulliEnsemble& e, const MomentSummary& ms,
                                  const ShiftedBinomialFit& fit) {
  if (!(ms.sigma2 > 0.0)) {
    return detail::not_applicable("sigma2 = 0: bounds not applicable");
  }
  if (fit.n < 1) {
    return detail::not_applicable("fit has n < 1: bounds not applicable");
  }
  BoundReport r;
  const double s2 = ms.sigma2;
  const double n = static_cast<double>(fit.n);
  const double p = fit.p;
  const double q = 1.0 - p;

  r.K = (1.0 - std::pow(p, n + 1.0) - std::pow(q, n + 1.0)) / s2;

  const double spread = detail::spread_numerator(e, s2);
  const double rounding = ms.lambda1 * (fit.frac_n + fit.frac_s) + n * fit.frac_s;
  r.A1 = spread / (s2 * std::max(1.0, ms.v / 2.0 - 1.0));
  r.A2 = rounding / n;
  r.A3 = spread / (s2 * std::pow(std::max(1.0, ms.v / 3.0 - 2.0), 1.5));
  r.A4 = rounding / (n * std::sqrt(std::max(1.0, ms.v - 1.0)));

  std::vector<double> sorted(e.probs().begin(), e.probs().end());
  std::sort(sorted.begin(), sorted.end());
  const long m = static_cast<long>(sorted.size());
  const long s = fit.s;
  const long upper_start = fit.n + fit.s;  // indices i > n + s, 1-based

  double lower = 0.0;
  if (s >= 1) {
    lower = static_cast<double>(s) * sorted[static_cast<std::size_t>(std::min(s, m) - 1)];
  }
  double upper = 0.0;
  if (upper_start < m) {
    // ascending order: the max over i > n+s is the overall largest probability
    upper = static_cast<double>(m - upper_start) * sorted.back();
  }
  const double lower_cap = std::exp(-s2 / 4.0);
  const double upper_cap = std::exp(-s2 / 4.0 + 1.0);
  r.eta = std::min(lower, lower_cap) + std::min(upper, upper_cap);
  r.eta_caps = lower_cap + upper_cap;

  r.tv_bound = r.K * (4.0 * r.A1 + 2.0 * r.A2) + r.eta;
  r.loc_bound = r.K * (8.0 * r.A3 + 4.0 * r.A4) + r.eta;

  const auto cor = corollary_bounds(ms, fit);
  r.tv_corollary = cor.tv;
  r.loc_corollary = cor.loc;

  r.notes.push_back("eta uses ascending order of p_i; ordering-free value " + std::to_string(r.eta_caps));
  return r;
}

/// Computes moments and the fit, and reports "not applicable" instead of
/// throwing when the ensemble is degenerate or the fit is out of range.
inline BoundReport evaluate_bounds(const BernoulliEnsemble& e) {
  const auto ms = moments(e);
  if (!(ms.sigma2 > 0.0)) {
    return detail::not_applicable("sigma2 = 0: bounds not applicable");
  }
  try {
    return theorem_bounds(e, ms, fit_shifted_binomial(ms));
  } catch (const std::domain_error& err) {
    return detail::not_applicable(err.what());
  }
}

/// Bound for Bi(m, l1/m):
/// (1 - p^{m+1} - q^{m+1}) / ((m+1) p q) * sum_i (p_i - p)^2.
inline double ehm_bound(const BernoulliEnsemble& e) {
  const double m = static_cast<double>(e.size());
  const double p = moments(e).lambda1 / m;
  if (!(p > 0.0 && p < 1.0)) {
    throw degenerate_ensemble("one-parameter binomial bound needs 0 < l1 < m");
  }
  const double q = 1.0 - p;
  double dispersion = 0.0;
  for (const double pi : e.probs()) dispersion += (pi - p) * (pi - p);
  return (1.0 - std::pow(p, m + 1.0) - std::pow(q, m + 1.0)) / ((m + 1.0) * p * q) * dispersion;
}

/// Bound for Bi(n, l1/n), n = floor(l1^2/l2):
///   4/(1-p) min(1, sqrt(e)/sigma) (l3/l1 - l2^2/l1^2)
///   + l2 {l1^2/l2} / (l1 (1-p) n) + P(W > n)
/// with P(W > n) read off the exact law.
inline double two_param_bound(const BernoulliEnsemble& /*e*/, const MomentSummary& ms,
                              const IntegerDistribution& exact) {
  if (!(ms.lambda2 > 0.0) || !(ms.sigma2 > 0.0)) {
    throw degenerate_ensemble("two-parameter binomial bound needs positive variance");
  }
  const auto split = detail::split_integer(ms.lambda1 * ms.lambda1 / ms.lambda2);
  const double n = static_cast<double>(split.whole);
  const double p = ms.lambda1 / n;
  if (!(p < 1.0)) {
    throw fit_out_of_range("two-parameter binomial p = " + std::to_string(p) + " is not below 1");
  }
  const double q = 1.0 - p;
  const double sigma = std::sqrt(ms.sigma2);
  // l3/l1 - (l2/l1)^2 clamped at zero against rounding; it is a variance.
  const double dispersion =
      std::max(0.0, ms.lambda3 / ms.lambda1 - (ms.lambda2 / ms.lambda1) * (ms.lambda2 / ms.lambda1));
  const double first = 4.0 / q * std::min(1.0, std::sqrt(std::numbers::e) / sigma) * dispersion;
  const double second = ms.lambda2 * split.frac / (ms.lambda1 * q * n);
  return first + second + exact.upper_tail(split.whole);
}

}  // namespace shbin
