#pragma once

/**
 * @file prover.hpp
 * @brief Case-by-case congruence proofs for units digits of triangular numbers.
 *
 * Write n = Lk + i. Since S_{n+2L} - S_n = 2Ln + L(2L+1) is a multiple of L,
 * the residue of S_{Lk+i} depends only on i and the parity of k, and the
 * representatives k = 0 and k = 1 settle every case. A digit j is reachable
 * exactly when some (i, parity) case produces it.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trinum/error.hpp"
#include "trinum/natural.hpp"

namespace trinum {

enum class KParity { Any, Even, Odd };

inline std::string_view to_string(KParity p) {
  switch (p) {
    case KParity::Any: return "any";
    case KParity::Even: return "even";
    case KParity::Odd: return "odd";
  }
  return "any";
}

/// S_{Lk+i} == j (mod L) for every k of the given parity.
struct CongruenceCase {
  BaseSpec base;
  unsigned input_digit;
  KParity parity;
  unsigned output_digit;

  friend bool operator==(const CongruenceCase&, const CongruenceCase&) = default;
};

struct ProofTranscript {
  BaseSpec base;
  /// Ordered by input digit, even before odd.
  std::vector<CongruenceCase> cases;
  std::vector<unsigned> derived_reachable;
  std::vector<unsigned> derived_missing;
};

inline ProofTranscript enumerate_cases(BaseSpec base) {
  const unsigned L = base.value();
  ProofTranscript t{base, {}, {}, {}};
  std::vector<bool> seen(L, false);
  for (unsigned i = 0; i < L; ++i) {
    const unsigned j_even = tri_mod(std::uint64_t{i}, base);
    const unsigned j_odd = tri_mod(std::uint64_t{L} + i, base);
    if (j_even == j_odd) {
      t.cases.push_back({base, i, KParity::Any, j_even});
    } else {
      t.cases.push_back({base, i, KParity::Even, j_even});
      t.cases.push_back({base, i, KParity::Odd, j_odd});
    }
    seen[j_even] = true;
    seen[j_odd] = true;
  }
  for (unsigned d = 0; d < L; ++d) (seen[d] ? t.derived_reachable : t.derived_missing).push_back(d);
  return t;
}

/// Checks the case directly for every k of its parity in [0, k_limit].
inline bool verify_case(const CongruenceCase& c, std::uint64_t k_limit) {
  if (k_limit < 1) throw DomainError("k_limit must be at least 1");
  const std::uint64_t L = c.base.value();
  if (c.input_digit >= L || c.output_digit >= L) return false;
  const std::uint64_t start = c.parity == KParity::Odd ? 1 : 0;
  const std::uint64_t step = c.parity == KParity::Any ? 1 : 2;
  for (std::uint64_t k = start; k <= k_limit; k += step) {
    if (tri_mod(L * k + c.input_digit, c.base) != c.output_digit) return false;
  }
  return true;
}

enum class Notation {
  /// `S_{4k+0} == 2 (mod 4) [k odd]`; the stable machine-facing format.
  Ascii,
  /// `S_{4k+0} ≡ 2 (mod 4) at odd k`; conventional congruence notation.
  Unicode,
};

namespace detail {

inline std::string format_digit_set(const std::vector<unsigned>& digits) {
  std::string out = "{";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + "}";
}

}  // namespace detail

inline std::string render_case(const CongruenceCase& c, Notation notation = Notation::Ascii) {
  std::ostringstream os;
  const unsigned L = c.base.value();
  os << "S_{" << L << "k+" << c.input_digit << "} " << (notation == Notation::Ascii ? "==" : "≡") << ' '
     << c.output_digit << " (mod " << L << ")";
  if (notation == Notation::Ascii) {
    switch (c.parity) {
      case KParity::Any: os << " [all k]"; break;
      case KParity::Even: os << " [k even]"; break;
      case KParity::Odd: os << " [k odd]"; break;
    }
  } else if (c.parity != KParity::Any) {
    os << " at " << to_string(c.parity) << " k";
  }
  return os.str();
}

/// Header `base=L`, one line per case, footer `missing: {...}`.
inline std::string render_transcript(const ProofTranscript& t, Notation notation = Notation::Ascii) {
  std::string out = "base=" + std::to_string(t.base.value()) + "\n";
  for (const auto& c : t.cases) out += render_case(c, notation) + "\n";
  out += "missing: " + detail::format_digit_set(t.derived_missing) + "\n";
  return out;
}

}  // namespace trinum
