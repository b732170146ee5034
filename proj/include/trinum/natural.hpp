#pragma once

/**
 * @file natural.hpp
 * @brief Exact naturals, numeral-system bases and positional digit strings.
 *
 * Triangular numbers S_n = 1 + 2 + ... + n = n(n+1)/2 are computed exactly
 * for n of any magnitude. Their residues mod L never need the full value:
 * S_n mod L depends only on n mod 2L, so tri_mod() runs in time independent
 * of the size of n.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trinum/error.hpp"

namespace trinum {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision non-negative integer.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  explicit Natural(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) throw DomainError("Natural cannot hold a negative value");
  }

  /// Parses an unsigned decimal string of any length ("0", "91", "1000...0").
  static Natural parse(std::string_view text) {
    if (text.empty()) throw ParseError("expected a decimal natural number, got an empty string");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError("expected a decimal natural number, got '" + std::string(text) + "'");
      }
    }
    // Strip leading zeros; cpp_int would read a leading 0 as octal.
    auto first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return Natural{};
    return Natural(BigInt(std::string(text.substr(first))));
  }

  const BigInt& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  bool is_zero() const noexcept { return value_.is_zero(); }

  template <typename T>
  T convert_to() const {
    return value_.convert_to<T>();
  }

  friend Natural operator+(const Natural& a, const Natural& b) { return Natural(a.value_ + b.value_, Unchecked{}); }
  friend Natural operator*(const Natural& a, const Natural& b) { return Natural(a.value_ * b.value_, Unchecked{}); }
  Natural& operator+=(const Natural& other) {
    value_ += other.value_;
    return *this;
  }

  /// Remainder by a small positive modulus.
  std::uint64_t mod(std::uint64_t m) const { return static_cast<std::uint64_t>(value_ % m); }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct Unchecked {};
  Natural(BigInt v, Unchecked) : value_(std::move(v)) {}

  BigInt value_;
};

inline std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value(); }

/// A numeral-system base L with 2 <= L <= 256.
class BaseSpec {
 public:
  static constexpr unsigned kMin = 2;
  static constexpr unsigned kMax = 256;

  explicit BaseSpec(long long base) {
    if (base < static_cast<long long>(kMin) || base > static_cast<long long>(kMax)) {
      throw InvalidBase("base must be in [2, 256], got " + std::to_string(base));
    }
    base_ = static_cast<unsigned>(base);
  }

  unsigned value() const noexcept { return base_; }
  /// Length of the fundamental window [0, 2L).
  unsigned window() const noexcept { return 2 * base_; }

  friend bool operator==(BaseSpec, BaseSpec) = default;

 private:
  unsigned base_ = 10;
};

/// Most-significant-first positional digits of a natural in some base.
class DigitString {
 public:
  DigitString(std::vector<unsigned> digits, BaseSpec base) : digits_(std::move(digits)), base_(base) {
    if (digits_.empty()) throw InvalidDigits("a digit string needs at least one digit");
    if (digits_.size() > 1 && digits_.front() == 0) throw InvalidDigits("leading zero digit in a multi-digit string");
    for (unsigned d : digits_) {
      if (d >= base_.value()) {
        throw InvalidDigits("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_.value()));
      }
    }
  }

  const std::vector<unsigned>& digits() const noexcept { return digits_; }
  BaseSpec base() const noexcept { return base_; }
  unsigned units_digit() const noexcept { return digits_.back(); }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<unsigned> digits_;
  BaseSpec base_;
};

/// S_n = n(n+1)/2, exactly.
inline Natural tri_exact(const Natural& n) {
  BigInt v = n.value();
  v *= (n.value() + 1);
  v >>= 1;
  return Natural(std::move(v));
}

/// S_n mod L for machine-word n.
inline unsigned tri_mod(std::uint64_t n, BaseSpec base) {
  const std::uint64_t r = n % base.window();
  // r(r+1) is even and r < 512, so this stays tiny.
  return static_cast<unsigned>((r * (r + 1) / 2) % base.value());
}

/// S_n mod L for arbitrary n; only n mod 2L is ever multiplied.
inline unsigned tri_mod(const Natural& n, BaseSpec base) { return tri_mod(n.mod(base.window()), base); }

inline DigitString to_digits(const Natural& v, BaseSpec base) {
  if (v.is_zero()) return DigitString({0}, base);
  std::vector<unsigned> out;
  BigInt rest = v.value();
  BigInt q, r;
  const BigInt radix = base.value();
  while (!rest.is_zero()) {
    boost::multiprecision::divide_qr(rest, radix, q, r);
    out.push_back(r.convert_to<unsigned>());
    rest.swap(q);
  }
  std::reverse(out.begin(), out.end());
  return DigitString(std::move(out), base);
}

inline Natural from_digits(const DigitString& d) {
  BigInt v = 0;
  for (unsigned digit : d.digits()) {
    v *= d.base().value();
    v += digit;
  }
  return Natural(std::move(v));
}

/// Validates and evaluates raw digits; throws InvalidDigits on any digit >= L.
inline Natural from_digits(std::span<const unsigned> digits, BaseSpec base) {
  return from_digits(DigitString(std::vector<unsigned>(digits.begin(), digits.end()), base));
}

/// Display form: 0-9a-z for L <= 36, otherwise colon-separated decimal digits.
inline std::string render_digits(const DigitString& d) {
  std::string out;
  if (d.base().value() <= 36) {
    static constexpr std::string_view kAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    for (unsigned digit : d.digits()) out.push_back(kAlphabet[digit]);
    return out;
  }
  for (std::size_t i = 0; i < d.digits().size(); ++i) {
    if (i != 0) out.push_back(':');
    out += std::to_string(d.digits()[i]);
  }
  return out;
}

/// Inverse of render_digits.
inline DigitString parse_digits(std::string_view text, BaseSpec base) {
  std::vector<unsigned> digits;
  if (text.empty()) throw ParseError("empty digit string");
  if (base.value() <= 36) {
    for (char c : text) {
      unsigned d;
      if (c >= '0' && c <= '9') {
        d = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'z') {
        d = static_cast<unsigned>(c - 'a') + 10;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in digit string");
      }
      digits.push_back(d);
    }
    return DigitString(std::move(digits), base);
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(':', pos), text.size());
    std::string_view field = text.substr(pos, end - pos);
    if (field.empty() || field.size() > 3 || field.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("malformed digit field '" + std::string(field) + "'");
    }
    digits.push_back(static_cast<unsigned>(std::stoul(std::string(field))));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return DigitString(std::move(digits), base);
}

}  // namespace trinum
