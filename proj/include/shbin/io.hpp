#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "shbin/bounds.hpp"
#include "shbin/ensemble.hpp"
#include "shbin/error.hpp"
#include "shbin/integer_distribution.hpp"

namespace shbin {

/// Decimal output width for every CSV value.
inline constexpr int kCsvDigits = 12;
/// Enough digits for a lossless double round trip.
inline constexpr int kExactDigits = 17;

inline std::string format_decimal(double x, int digits = kCsvDigits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// Rows "k,mass" under the header "k,mass".
inline void write_pmf_csv(std::ostream& out, const IntegerDistribution& d, int digits = kCsvDigits) {
  out << "k,mass\n";
  for (long k = d.offset(); k <= d.last(); ++k) {
    out << k << ',' << format_decimal(d(k), digits) << '\n';
  }
}

/// Reads what write_pmf_csv emits. Support points must increase; gaps are zero mass.
inline IntegerDistribution read_pmf_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  long first = 0;
  long prev = 0;
  std::vector<double> masses;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!seen_header) {
      if (text != "k,mass") throw parse_error(source, line_no, "expected header 'k,mass'");
      seen_header = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw parse_error(source, line_no, "expected 'k,mass'");
    const auto key = detail::trim(text.substr(0, comma));
    long k = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw parse_error(source, line_no, "bad support point '" + std::string(key) + "'");
    }
    double mass = 0.0;
    if (!detail::parse_double(detail::trim(text.substr(comma + 1)), mass) || !(mass >= 0.0)) {
      throw parse_error(source, line_no, "bad mass");
    }
    if (masses.empty()) {
      first = k;
    } else if (k <= prev) {
      throw parse_error(source, line_no, "support points must increase");
    } else {
      masses.resize(masses.size() + static_cast<std::size_t>(k - prev - 1), 0.0);
    }
    masses.push_back(mass);
    prev = k;
  }
  if (masses.empty()) throw parse_error(source, line_no, "no rows");
  return IntegerDistribution(first, std::move(masses));
}

inline std::string format_bound(double x, bool applicable) {
  return applicable ? format_decimal(x) : std::string("n/a");
}

inline constexpr std::string_view kBoundCsvHeader =
    "K,A1,A2,A3,A4,eta,eta_caps,tv_bound,loc_bound,tv_corollary,loc_corollary,ehm_bound,two_param_bound";

/// Bound report plus the one- and two-parameter binomial bounds, as one CSV row.
/// Pass NaN for a prior bound that does not apply.
inline void write_bound_csv_row(std::ostream& out, const BoundReport& r, double ehm, double two_param) {
  const double values[] = {r.K,   r.A1,       r.A2,        r.A3,           r.A4,          r.eta, r.eta_caps,
                           r.tv_bound, r.loc_bound, r.tv_corollary, r.loc_corollary};
  bool first = true;
  for (const double v : values) {
    if (!first) out << ',';
    out << format_bound(v, r.applicable);
    first = false;
  }
  out << ',' << (std::isnan(ehm) ? "n/a" : format_decimal(ehm));
  out << ',' << (std::isnan(two_param) ? "n/a" : format_decimal(two_param)) << '\n';
}

inline void write_bound_table(std::ostream& out, const BoundReport& r, double ehm, double two_param) {
  auto row = [&](std::string_view label, const std::string& value) {
    out << label;
    for (std::size_t i = label.size(); i < 18; ++i) out << ' ';
    out << value << '\n';
  };
  row("K", format_bound(r.K, r.applicable));
  row("A1", format_bound(r.A1, r.applicable));
  row("A2", format_bound(r.A2, r.applicable));
  row("A3", format_bound(r.A3, r.applicable));
  row("A4", format_bound(r.A4, r.applicable));
  row("eta", format_bound(r.eta, r.applicable));
  row("eta (caps only)", format_bound(r.eta_caps, r.applicable));
  row("tv bound", format_bound(r.tv_bound, r.applicable));
  row("loc bound", format_bound(r.loc_bound, r.applicable));
  row("tv corollary", format_bound(r.tv_corollary, r.applicable));
  row("loc corollary", format_bound(r.loc_corollary, r.applicable));
  row("ehm bound", std::isnan(ehm) ? "n/a" : format_decimal(ehm));
  row("two-param bound", std::isnan(two_param) ? "n/a" : format_decimal(two_param));
  for (const auto& note : r.notes) out << "# " << note << '\n';
}

}  // namespace shbin
