#pragma once

/**
 * @file residue.hpp
 * @brief Units-digit distributions of triangular numbers in base L.
 *
 * n -> S_n mod L repeats with period 2L, so the window n in [0, 2L) carries
 * the complete, exact distribution. Frequencies are kept as rationals.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trinum/error.hpp"
#include "trinum/natural.hpp"

namespace trinum {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, always with an explicit denominator.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

struct ResidueProfile {
  BaseSpec base;
  /// Minimal period of n -> S_n mod L; always divides 2L.
  unsigned period;
  /// Sorted digits d with frequency[d] > 0.
  std::vector<unsigned> reachable;
  /// Indexed by digit, one entry for each of 0..L-1.
  std::vector<Rational> frequency;
};

struct GapClassification {
  BaseSpec base;
  bool gappy;
  std::vector<unsigned> missing_digits;
};

struct EmpiricalFrequencies {
  BaseSpec base;
  std::uint64_t sample_size;
  /// Indexed by digit.
  std::vector<std::uint64_t> counts;

  Rational proportion(unsigned digit) const { return Rational(counts.at(digit), sample_size); }
};

inline constexpr std::uint64_t kDefaultSampleSize = 100000;

namespace detail {

inline std::vector<unsigned> window_residues(BaseSpec base) {
  std::vector<unsigned> w(base.window());
  for (unsigned n = 0; n < w.size(); ++n) w[n] = tri_mod(std::uint64_t{n}, base);
  return w;
}

inline std::vector<std::uint64_t> window_counts(BaseSpec base) {
  std::vector<std::uint64_t> counts(base.value(), 0);
  for (unsigned r : window_residues(base)) ++counts[r];
  return counts;
}

}  // namespace detail

inline ResidueProfile residue_profile(BaseSpec base) {
  const auto w = detail::window_residues(base);
  const unsigned len = static_cast<unsigned>(w.size());

  unsigned period = len;
  for (unsigned p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (unsigned n = 0; n + p < len && periodic; ++n) periodic = w[n] == w[n + p];
    if (periodic) {
      period = p;
      break;
    }
  }

  ResidueProfile profile{base, period, {}, std::vector<Rational>(base.value())};
  const auto counts = detail::window_counts(base);
  for (unsigned d = 0; d < base.value(); ++d) {
    profile.frequency[d] = Rational(counts[d], len);
    if (counts[d] > 0) profile.reachable.push_back(d);
  }
  return profile;
}

inline GapClassification classify(BaseSpec base) {
  const auto profile = residue_profile(base);
  GapClassification out{base, false, {}};
  for (unsigned d = 0; d < base.value(); ++d) {
    if (profile.frequency[d] == 0) out.missing_digits.push_back(d);
  }
  out.gappy = !out.missing_digits.empty();
  return out;
}

/// Units-digit counts of S_1 ... S_N. Whole windows are counted in bulk, the tail one by one.
inline EmpiricalFrequencies empirical_frequencies(BaseSpec base, std::uint64_t sample_size = kDefaultSampleSize) {
  if (sample_size == 0) throw DomainError("sample size must be at least 1");
  const std::uint64_t window = base.window();
  EmpiricalFrequencies out{base, sample_size, detail::window_counts(base)};
  const std::uint64_t full = sample_size / window;
  for (auto& c : out.counts) c *= full;
  for (std::uint64_t n = 1; n <= sample_size % window; ++n) ++out.counts[tri_mod(n, base)];
  return out;
}

/// Gap classification for every base in 2..=max_base, ascending.
inline std::vector<std::pair<unsigned, bool>> power_of_two_sweep(unsigned max_base) {
  if (max_base < BaseSpec::kMin || max_base > BaseSpec::kMax) {
    throw InvalidBase("sweep bound must be in [2, 256], got " + std::to_string(max_base));
  }
  std::vector<std::pair<unsigned, bool>> out;
  for (unsigned b = BaseSpec::kMin; b <= max_base; ++b) out.emplace_back(b, classify(BaseSpec(b)).gappy);
  return out;
}

}  // namespace trinum
