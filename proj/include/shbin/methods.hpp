#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/error.hpp"
#include "shbin/integer_distribution.hpp"

namespace shbin {

enum class Method { poisson, shifted_poisson, binomial1, binomial2, normal, shifted_binomial };

inline constexpr std::array<Method, 6> kAllMethods{Method::poisson,   Method::shifted_poisson,
                                                   Method::binomial1, Method::binomial2,
                                                   Method::normal,    Method::shifted_binomial};

/// Command-line spelling, e.g. "shifted-binomial".
inline std::string_view method_name(Method method) {
  switch (method) {
    case Method::poisson: return "poisson";
    case Method::shifted_poisson: return "shifted-poisson";
    case Method::binomial1: return "binomial1";
    case Method::binomial2: return "binomial2";
    case Method::normal: return "normal";
    case Method::shifted_binomial: return "shifted-binomial";
  }
  return "?";
}

/// CSV column spelling, e.g. "shifted_binomial".
inline std::string method_column(Method method) {
  std::string name(method_name(method));
  for (char& c : name) {
    if (c == '-') c = '_';
  }
  return name;
}

inline std::string method_list() {
  std::string out;
  for (const Method m : kAllMethods) {
    if (!out.empty()) out += ", ";
    out += method_name(m);
  }
  return out;
}

inline Method parse_method(std::string_view name) {
  for (const Method m : kAllMethods) {
    if (name == method_name(m)) return m;
  }
  throw invalid_input("unknown method '" + std::string(name) + "'; valid methods: " + method_list());
}

/// An approximating law together with the parameters it was fitted with.
struct Approximation {
  Method method;
  IntegerDistribution pmf;
  std::vector<std::pair<std::string, double>> params;
};

inline Approximation approximate(const BernoulliEnsemble& e, const MomentSummary& ms, Method method) {
  switch (method) {
    case Method::poisson:
      return {method, poisson_pmf(ms.lambda1), {{"lambda", ms.lambda1}}};
    case Method::shifted_poisson: {
      auto pmf = shifted_poisson_pmf(ms);
      const auto split = detail::split_integer(ms.lambda1 - ms.sigma2);
      return {method,
              std::move(pmf),
              {{"s", static_cast<double>(split.whole)}, {"lambda", ms.sigma2 + split.frac}}};
    }
    case Method::binomial1: {
      const double m = static_cast<double>(e.size());
      return {method, one_param_binomial_pmf(e), {{"n", m}, {"p", ms.lambda1 / m}}};
    }
    case Method::binomial2: {
      auto pmf = two_param_binomial_pmf(ms);
      const double n = static_cast<double>(detail::split_integer(ms.lambda1 * ms.lambda1 / ms.lambda2).whole);
      return {method, std::move(pmf), {{"n", n}, {"p", ms.lambda1 / n}}};
    }
    case Method::normal:
      // support of W is 0..m
      return {method,
              discretized_normal_pmf(ms.lambda1, ms.sigma2, 0, static_cast<long>(e.size())),
              {{"mean", ms.lambda1}, {"variance", ms.sigma2}}};
    case Method::shifted_binomial: {
      const auto fit = fit_shifted_binomial(ms);
      return {method,
              shifted_binomial_pmf(fit),
              {{"n", static_cast<double>(fit.n)},
               {"p", fit.p},
               {"s", static_cast<double>(fit.s)},
               {"n*", fit.n_star},
               {"p*", fit.p_star},
               {"s*", fit.s_star}}};
    }
  }
  throw invalid_input("unknown method");
}

inline Approximation approximate(const BernoulliEnsemble& e, Method method) {
  return approximate(e, moments(e), method);
}

}  // namespace shbin
