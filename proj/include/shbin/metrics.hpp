#pragma once

#include <algorithm>
#include <cmath>

#include "shbin/integer_distribution.hpp"

namespace shbin {

/// d_TV = 1/2 sum_k |a(k) - b(k)| over the union of both supports.
inline double tv_distance(const IntegerDistribution& a, const IntegerDistribution& b) {
  const long lo = std::min(a.offset(), b.offset());
  const long hi = std::max(a.last(), b.last());
  double acc = 0.0;
  for (long k = lo; k <= hi; ++k) {
    acc += std::abs(a(k) - b(k));
  }
  return 0.5 * acc;
}

/// d_loc = sup_k |a(k) - b(k)|.
inline double loc_distance(const IntegerDistribution& a, const IntegerDistribution& b) {
  const long lo = std::min(a.offset(), b.offset());
  const long hi = std::max(a.last(), b.last());
  double best = 0.0;
  for (long k = lo; k <= hi; ++k) {
    best = std::max(best, std::abs(a(k) - b(k)));
  }
  return best;
}

}  // namespace shbin
