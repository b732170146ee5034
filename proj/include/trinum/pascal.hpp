#pragma once

// Pascal-triangle rows and the C(n, 2) diagonal, by additive recurrence only.

#include <cstdint>
#include <vector>

#include "trinum/error.hpp"
#include "trinum/natural.hpp"

namespace trinum {

struct PascalRow {
  std::uint64_t index;
  /// C(index, 0) ... C(index, index).
  std::vector<Natural> coefficients;
};

/// Row n, built from row 0 with C(n, r) = C(n-1, r-1) + C(n-1, r).
inline PascalRow pascal_row(std::uint64_t n) {
  std::vector<Natural> row{Natural(1)};
  row.reserve(n + 1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    row.push_back(Natural(1));
    for (std::size_t r = i - 1; r >= 1; --r) row[r] += row[r - 1];
  }
  return PascalRow{n, std::move(row)};
}

/// C(2,2), C(3,2), ..., C(count+1, 2). Element t (1-based) sits in row t+1.
///
/// Only columns 1 and 2 of each row are carried: C(n,1) = C(n-1,1) + 1 and
/// C(n,2) = C(n-1,2) + C(n-1,1).
inline std::vector<Natural> quadratic_diagonal(std::uint64_t count) {
  if (count < 1) throw DomainError("diagonal length must be at least 1");
  std::vector<Natural> out;
  out.reserve(count);
  Natural col1 = 2;  // C(2,1)
  Natural col2 = 1;  // C(2,2)
  out.push_back(col2);
  for (std::uint64_t row = 3; row <= count + 1; ++row) {
    col2 += col1;
    col1 += Natural(1);
    out.push_back(col2);
  }
  return out;
}

}  // namespace trinum
