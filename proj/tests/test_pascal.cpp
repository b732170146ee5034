#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "trinum/natural.hpp"
#include "trinum/pascal.hpp"

using trinum::Natural;

namespace {

std::vector<Natural> naturals(std::initializer_list<std::uint64_t> values) {
  return std::vector<Natural>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("pascal rows", "[pascal]") {
  CHECK(trinum::pascal_row(0).coefficients == naturals({1}));
  CHECK(trinum::pascal_row(4).coefficients == naturals({1, 4, 6, 4, 1}));
  CHECK(trinum::pascal_row(9).coefficients == naturals({1, 9, 36, 84, 126, 126, 84, 36, 9, 1}));
  CHECK(trinum::pascal_row(9).index == 9);
}

TEST_CASE("pascal row invariants", "[pascal][property]") {
  auto prev = trinum::pascal_row(0);
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const auto row = trinum::pascal_row(n);
    REQUIRE(row.coefficients.size() == n + 1);
    for (std::uint64_t r = 0; r <= n; ++r) REQUIRE(row.coefficients[r] == row.coefficients[n - r]);
    for (std::uint64_t r = 1; r < n; ++r) {
      REQUIRE(row.coefficients[r] == prev.coefficients[r - 1] + prev.coefficients[r]);
    }
    if (n <= 60) {
      Natural sum;
      for (const auto& c : row.coefficients) sum += c;
      REQUIRE(sum == Natural(std::uint64_t{1} << n));
      for (std::uint64_t r = 0; r <= n; ++r) REQUIRE(row.coefficients[r] == Natural(oracle::binomial_small(n, r)));
    }
    prev = row;
  }
}

TEST_CASE("quadratic diagonal", "[pascal]") {
  CHECK(trinum::quadratic_diagonal(8) == naturals({1, 3, 6, 10, 15, 21, 28, 36}));
  CHECK(trinum::quadratic_diagonal(1) == naturals({1}));
  CHECK(trinum::quadratic_diagonal(13).back() == Natural(91));
  CHECK_THROWS_AS(trinum::quadratic_diagonal(0), trinum::DomainError);
}

TEST_CASE("quadratic diagonal is the triangular sequence", "[pascal][property]") {
  const auto diag = trinum::quadratic_diagonal(1000);
  REQUIRE(diag.size() == 1000);
  for (std::uint64_t t = 1; t <= 1000; ++t) REQUIRE(diag[t - 1] == trinum::tri_exact(t));

  // Also agrees with column 2 of full rows.
  for (std::uint64_t n = 2; n <= 40; ++n) REQUIRE(trinum::pascal_row(n).coefficients[2] == diag[n - 2]);
}
