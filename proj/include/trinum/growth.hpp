#pragma once

/**
 * @file growth.hpp
 * @brief Discrete growth of an idealized multicellular organism.
 *
 * d(t) cells divide at step t; each division adds one descendant, so the
 * total count is the running sum N(t) = N0 + d(1) + ... + d(t). Linearly
 * growing d gives triangular totals, constant d gives linear totals, and a
 * linearly falling d saturates.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trinum/error.hpp"
#include "trinum/natural.hpp"
#include "trinum/residue.hpp"

namespace trinum {

class DividingDynamics {
 public:
  enum class Kind { LinearGrowth, Constant, LinearDecline };

  /// d(t) = t.
  static DividingDynamics linear_growth() { return DividingDynamics(Kind::LinearGrowth, 0, 0); }

  /// d(t) = level.
  static DividingDynamics constant(std::uint64_t level) {
    if (level < 1) throw DomainError("constant dynamics needs level >= 1");
    return DividingDynamics(Kind::Constant, level, 0);
  }

  /// d(t) = max(start - slope * t, 0).
  static DividingDynamics linear_decline(std::uint64_t start, std::uint64_t slope) {
    if (start < 1 || slope < 1) throw DomainError("decline dynamics needs start >= 1 and slope >= 1");
    return DividingDynamics(Kind::LinearDecline, start, slope);
  }

  /// Parses `linear`, `constant:c` or `decline:D,a`.
  static DividingDynamics parse(const std::string& spec) {
    auto number = [&](const std::string& field) -> std::uint64_t {
      if (field.empty() || field.size() > 19 || field.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("malformed dynamics spec '" + spec + "'");
      }
      return std::stoull(field);
    };
    if (spec == "linear") return linear_growth();
    if (spec.rfind("constant:", 0) == 0) return constant(number(spec.substr(9)));
    if (spec.rfind("decline:", 0) == 0) {
      const std::string rest = spec.substr(8);
      const auto comma = rest.find(',');
      if (comma == std::string::npos) throw ParseError("malformed dynamics spec '" + spec + "'");
      return linear_decline(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
    }
    throw ParseError("unknown dynamics '" + spec + "' (expected linear, constant:c or decline:D,a)");
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t level() const noexcept { return p1_; }
  std::uint64_t start() const noexcept { return p1_; }
  std::uint64_t slope() const noexcept { return p2_; }

  Natural dividing_at(std::uint64_t t) const {
    switch (kind_) {
      case Kind::LinearGrowth: return Natural(t);
      case Kind::Constant: return Natural(p1_);
      case Kind::LinearDecline: {
        const BigInt drop = BigInt(p2_) * t;
        return drop >= p1_ ? Natural() : Natural(BigInt(p1_) - drop);
      }
    }
    return Natural();
  }

  /// Round-trips through parse().
  std::string str() const {
    switch (kind_) {
      case Kind::LinearGrowth: return "linear";
      case Kind::Constant: return "constant:" + std::to_string(p1_);
      case Kind::LinearDecline: return "decline:" + std::to_string(p1_) + "," + std::to_string(p2_);
    }
    return "linear";
  }

 private:
  DividingDynamics(Kind kind, std::uint64_t p1, std::uint64_t p2) : kind_(kind), p1_(p1), p2_(p2) {}

  Kind kind_;
  std::uint64_t p1_;
  std::uint64_t p2_;
};

struct GrowthTrace {
  DividingDynamics dynamics;
  Natural initial_total;
  /// d(1) ... d(T).
  std::vector<Natural> dividing;
  /// N(1) ... N(T).
  std::vector<Natural> total;

  std::uint64_t horizon() const noexcept { return total.size(); }
  /// N(t) for 1 <= t <= T.
  const Natural& total_at(std::uint64_t t) const { return total.at(t - 1); }
};

inline GrowthTrace simulate(const DividingDynamics& dynamics, std::uint64_t horizon, const Natural& initial_total = {}) {
  if (horizon < 1) throw DomainError("horizon must be at least 1");
  GrowthTrace trace{dynamics, initial_total, {}, {}};
  trace.dividing.reserve(horizon);
  trace.total.reserve(horizon);
  Natural running = initial_total;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    Natural d = dynamics.dividing_at(t);
    running += d;
    trace.dividing.push_back(std::move(d));
    trace.total.push_back(running);
  }
  return trace;
}

/// Inclusive range of time steps.
struct FitWindow {
  std::uint64_t first;
  std::uint64_t last;

  std::uint64_t size() const noexcept { return last >= first ? last - first + 1 : 0; }
};

/// Upper half of the trace, [floor(T/2) + 1, T].
inline FitWindow default_fit_window(const GrowthTrace& trace) {
  const std::uint64_t T = trace.horizon();
  return FitWindow{T / 2 + 1, T};
}

/// log N(t) ~= offset + exponent * log t, natural logarithms.
struct PowerLawFit {
  double exponent;
  double offset;
  FitWindow window;
  /// Root-mean-square residual in log-log space.
  double residual;
};

inline PowerLawFit fit_power_law(const GrowthTrace& trace, FitWindow window) {
  if (window.size() == 0) throw DomainError("empty fit window");
  if (window.first < 1 || window.last > trace.horizon()) {
    throw DomainError("fit window [" + std::to_string(window.first) + ", " + std::to_string(window.last) +
                      "] is outside [1, " + std::to_string(trace.horizon()) + "]");
  }
  if (window.size() < 2) throw DomainError("fit window needs at least two time steps");

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(window.size());
  ys.reserve(window.size());
  for (std::uint64_t t = window.first; t <= window.last; ++t) {
    const Natural& n = trace.total_at(t);
    if (n.is_zero()) throw DomainError("total is zero at t=" + std::to_string(t) + "; log undefined");
    xs.push_back(std::log(static_cast<double>(t)));
    ys.push_back(std::log(n.convert_to<double>()));
  }

  const double count = static_cast<double>(xs.size());
  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double sse = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + slope * xs[i]);
    sse += e * e;
  }
  return PowerLawFit{slope, intercept, window, std::sqrt(sse / count)};
}

inline PowerLawFit fit_power_law(const GrowthTrace& trace) { return fit_power_law(trace, default_fit_window(trace)); }

/// Units digits (base L) of N(1) ... N(T).
inline EmpiricalFrequencies digit_histogram(const GrowthTrace& trace, BaseSpec base) {
  EmpiricalFrequencies out{base, trace.horizon(), std::vector<std::uint64_t>(base.value(), 0)};
  for (const auto& n : trace.total) ++out.counts[n.mod(base.value())];
  return out;
}

}  // namespace trinum
