#pragma once

#include <array>
#include <cstddef>
#include <future>
#include <ostream>
#include <vector>

#include "shbin/bounds.hpp"
#include "shbin/distributions.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/io.hpp"
#include "shbin/methods.hpp"
#include "shbin/metrics.hpp"

namespace shbin {

/// Evenly spaced maximum probabilities, endpoints included.
struct SweepGrid {
  double start = 0.05;
  double stop = 1.0;
  std::size_t points = 20;

  std::vector<double> values() const {
    if (points == 0) throw invalid_input("sweep grid needs at least one point");
    if (!(start > 0.0 && stop <= 1.0 && start <= stop)) {
      throw invalid_input("sweep grid must lie within (0, 1] with start <= stop");
    }
    if (points == 1) return {start};
    std::vector<double> out(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
      const double t = static_cast<double>(k);
      out[k] = (start * (last - t) + stop * t) / last;
    }
    return out;
  }
};

/// Exact TV of each approximation against W for one uniform-spread ensemble.
struct SweepRow {
  double max_prob = 0.0;
  std::array<double, kAllMethods.size()> tv{};  // indexed like kAllMethods
  double tv_bound = 0.0;
  double loc_bound = 0.0;

  double column(Method method) const { return tv[static_cast<std::size_t>(method)]; }
};

inline SweepRow sweep_row(std::size_t m, double max_prob) {
  const auto e = ensemble_from_spec(GeneratorKind::uniform_spread, m, max_prob);
  const auto ms = moments(e);
  const auto exact = exact_pmf(e);
  SweepRow row;
  row.max_prob = max_prob;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    row.tv[i] = tv_distance(exact, approximate(e, ms, kAllMethods[i]).pmf);
  }
  const auto report = evaluate_bounds(e);
  row.tv_bound = report.tv_bound;
  row.loc_bound = report.loc_bound;
  return row;
}

/// Rows are computed concurrently and returned in grid order.
inline std::vector<SweepRow> run_sweep(std::size_t m, const SweepGrid& grid = {}) {
  if (m < 2) throw invalid_input("sweep needs m >= 2");
  const auto values = grid.values();
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(values.size());
  for (const double M : values) {
    pending.push_back(std::async(std::launch::async, [m, M] { return sweep_row(m, M); }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "M";
  for (const Method method : kAllMethods) out << ',' << method_column(method);
  out << ",tv_bound,loc_bound\n";
  for (const auto& row : rows) {
    out << format_decimal(row.max_prob);
    for (const double v : row.tv) out << ',' << format_decimal(v);
    out << ',' << format_decimal(row.tv_bound) << ',' << format_decimal(row.loc_bound) << '\n';
  }
}

}  // namespace shbin
