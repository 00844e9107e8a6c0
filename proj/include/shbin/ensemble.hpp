#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "shbin/error.hpp"

namespace shbin {

/// Success probabilities p_1..p_m of independent Bernoulli summands.
///
/// The law of W = X_1 + ... + X_m is fully determined by the multiset of
/// probabilities, but the stored order is kept because the tail term of the
/// error bound indexes into it.
class BernoulliEnsemble {
 public:
  explicit BernoulliEnsemble(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
      throw invalid_input("ensemble must contain at least one probability");
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const double p = probs_[i];
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw invalid_probability(i, p);
      }
    }
  }

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const BernoulliEnsemble&, const BernoulliEnsemble&) = default;

 private:
  std::vector<double> probs_;
};

inline BernoulliEnsemble make_ensemble(std::vector<double> probs) {
  return BernoulliEnsemble(std::move(probs));
}

struct MomentSummary {
  double lambda1 = 0.0;  // sum p_i
  double lambda2 = 0.0;  // sum p_i^2
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double sigma2 = 0.0;  // Var W
  double v = 0.0;       // sum min(p_i, q_i)
  double v_star = 0.0;  // max min(p_i, q_i)
  double mu3 = 0.0;     // E(W - EW)^3
};

// Plain summation in stored order; m stays in the low thousands in practice.
// sigma2 and mu3 are accumulated from p*q directly, which agrees with the
// power-sum forms up to rounding but does not lose digits to cancellation.
inline MomentSummary moments(const BernoulliEnsemble& e) {
  MomentSummary ms;
  for (const double p : e.probs()) {
    const double q = 1.0 - p;
    const double p2 = p * p;
    ms.lambda1 += p;
    ms.lambda2 += p2;
    ms.lambda3 += p2 * p;
    ms.lambda4 += p2 * p2;
    ms.sigma2 += p * q;
    ms.mu3 += p * q * (q - p);
    const double small = std::min(p, q);
    ms.v += small;
    ms.v_star = std::max(ms.v_star, small);
  }
  return ms;
}

enum class GeneratorKind { uniform_spread };

inline GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "uniform-spread") {
    return GeneratorKind::uniform_spread;
  }
  throw invalid_input("unknown ensemble generator '" + std::string(name) + "'");
}

/// Deterministic ensembles. uniform-spread gives p_i = i * max_prob / (m + 1), i = 1..m.
inline BernoulliEnsemble ensemble_from_spec(GeneratorKind kind, std::size_t m, double max_prob) {
  if (m < 1) {
    throw invalid_input("generator needs m >= 1");
  }
  if (!(max_prob > 0.0 && max_prob <= 1.0)) {
    throw invalid_input("generator max probability must lie in (0, 1], got " +
                        std::to_string(max_prob));
  }
  std::vector<double> probs(m);
  switch (kind) {
    case GeneratorKind::uniform_spread:
      for (std::size_t i = 0; i < m; ++i) {
        probs[i] = static_cast<double>(i + 1) * max_prob / static_cast<double>(m + 1);
      }
      break;
  }
  return BernoulliEnsemble(std::move(probs));
}

inline BernoulliEnsemble ensemble_from_spec(std::string_view kind, std::size_t m, double max_prob) {
  return ensemble_from_spec(parse_generator_kind(kind), m, max_prob);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
  }
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace detail

/// One decimal probability per line. Blank lines and '#' comments are skipped.
inline std::vector<double> read_probabilities(std::istream& in, const std::string& source) {
  std::vector<double> probs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = detail::trim(text);
    if (text.empty()) {
      continue;
    }
    double value = 0.0;
    if (!detail::parse_double(text, value)) {
      throw parse_error(source, line_no, "not a number: '" + std::string(text) + "'");
    }
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      throw parse_error(source, line_no, "probability outside [0, 1]: '" + std::string(text) + "'");
    }
    probs.push_back(value);
  }
  if (probs.empty()) {
    throw invalid_input(source + ": no probabilities found");
  }
  return probs;
}

/// Comma separated list, e.g. "0.2,0.4,0.6".
inline std::vector<double> parse_probability_list(std::string_view text) {
  std::vector<double> probs;
  std::size_t field = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto token = detail::trim(text.substr(0, comma));
    double value = 0.0;
    if (!detail::parse_double(token, value)) {
      throw invalid_input("probability list entry " + std::to_string(field) + " is not a number: '" +
                          std::string(token) + "'");
    }
    probs.push_back(value);
    ++field;
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return probs;
}

}  // namespace shbin
