// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trinum/trinum.hpp"
#include "trinum_cli.hpp"

using nlohmann::json;
using trinum::BaseSpec;
using trinum::KParity;
using trinum::Natural;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = trinum::cli::run(args, out, err);
  if (code != 0) throw std::runtime_error("cli failed: " + err.str());
  return out.str();
}

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.3fs exceeds %.0fs", elapsed, time_limit_s);
    o.expect(elapsed < time_limit_s, buf);
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %s %s (%.3fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, elapsed, o.ok ? "" : ": ",
              o.detail.c_str());
}

}  // namespace

int main() {
  criterion("AC1", "base-10 units-digit frequencies exact", 1.0, [](Outcome& o) {
    const auto doc = json::parse(run_cli({"residues", "--base", "10", "--format", "json"}));
    const char* expected[] = {"1/5", "1/5", "0/1", "1/10", "0/1", "1/5", "1/5", "0/1", "1/10", "0/1"};
    o.expect(doc["frequencies"].size() == 10, "expected ten frequency rows");
    for (int d = 0; d < 10; ++d) {
      o.expect(doc["frequencies"][d]["digit"] == d, "row order");
      o.expect(doc["frequencies"][d]["exact"] == expected[d], "digit " + std::to_string(d) + " frequency");
    }
    o.expect(doc["reachable"] == json::array({0, 1, 3, 5, 6, 8}), "reachable set");
  });

  criterion("AC2", "gappy {3,5,6,7,9,10}, non-gappy {4,8,16}", 1.0, [](Outcome& o) {
    const auto doc = json::parse(run_cli({"classify", "--bases", "3,5,6,7,9,10,4,8,16", "--format", "json"}));
    for (const auto& row : doc) {
      const int b = row["base"];
      const bool want_gappy = !(b == 4 || b == 8 || b == 16);
      o.expect(row["gappy"] == want_gappy, "base " + std::to_string(b));
    }
    o.expect(doc.size() == 9, "nine rows");
  });

  criterion("AC3", "Statement 1 (base 3) and Statement 2 (base 4) transcripts", 0, [](Outcome& o) {
    const auto three = trinum::enumerate_cases(BaseSpec(3));
    const std::vector<trinum::CongruenceCase> want3 = {
        {BaseSpec(3), 0, KParity::Any, 0}, {BaseSpec(3), 1, KParity::Any, 1}, {BaseSpec(3), 2, KParity::Any, 0}};
    o.expect(three.cases == want3, "base-3 cases");
    o.expect(three.derived_missing == std::vector<unsigned>{2}, "base-3 missing set");
    for (const auto& c : three.cases) o.expect(trinum::verify_case(c, 1000), "base-3 case fails verification");
    const auto text3 = trinum::render_transcript(three, trinum::Notation::Unicode);
    for (const char* line : {"S_{3k+0} ≡ 0 (mod 3)\n", "S_{3k+1} ≡ 1 (mod 3)\n", "S_{3k+2} ≡ 0 (mod 3)\n"}) {
      o.expect(text3.find(line) != std::string::npos, std::string("missing line ") + line);
    }

    const auto four = trinum::enumerate_cases(BaseSpec(4));
    const std::vector<trinum::CongruenceCase> want4 = {{BaseSpec(4), 0, KParity::Even, 0},
                                                      {BaseSpec(4), 0, KParity::Odd, 2},
                                                      {BaseSpec(4), 1, KParity::Even, 1},
                                                      {BaseSpec(4), 1, KParity::Odd, 3}};
    o.expect(four.cases.size() >= 4 && std::equal(want4.begin(), want4.end(), four.cases.begin()),
             "base-4 parity-split cases");
    o.expect(four.derived_missing.empty(), "base-4 missing set");
    for (const auto& c : four.cases) o.expect(trinum::verify_case(c, 1000), "base-4 case fails verification");
    const auto text4 = trinum::render_transcript(four, trinum::Notation::Unicode);
    for (const char* line : {"S_{4k+0} ≡ 0 (mod 4) at even k", "S_{4k+0} ≡ 2 (mod 4) at odd k",
                             "S_{4k+1} ≡ 1 (mod 4) at even k", "S_{4k+1} ≡ 3 (mod 4) at odd k"}) {
      o.expect(text4.find(line) != std::string::npos, std::string("missing line ") + line);
    }
  });

  criterion("AC4", "tri_mod equals summation oracle, n <= 1e5, L in 2..64", 60.0, [](Outcome& o) {
    const auto sums = oracle::cumulative_sums(100000);
    for (unsigned L = 2; L <= 64; ++L) {
      const BaseSpec base(L);
      for (std::uint64_t n = 0; n <= 100000; ++n) {
        if (trinum::tri_mod(Natural(n), base) != sums[n] % L) {
          o.expect(false, "mismatch at n=" + std::to_string(n) + " L=" + std::to_string(L));
          return;
        }
      }
    }
  });

  criterion("AC5", "quadratic diagonal equals triangular numbers", 0, [](Outcome& o) {
    const auto eight = trinum::quadratic_diagonal(8);
    const std::uint64_t bold[] = {1, 3, 6, 10, 15, 21, 28, 36};
    o.expect(eight.size() == 8, "length 8");
    for (std::size_t i = 0; i < 8 && i < eight.size(); ++i) o.expect(eight[i] == Natural(bold[i]), "Fig-1 value");
    const auto diag = trinum::quadratic_diagonal(1000);
    for (std::uint64_t t = 1; t <= 1000; ++t) o.expect(diag[t - 1] == trinum::tri_exact(t), "t=" + std::to_string(t));
  });

  criterion("AC6", "growth corollaries (triangular totals, exponents 2 and 1, base-10 gaps)", 0, [](Outcome& o) {
    const auto linear = trinum::simulate(trinum::DividingDynamics::linear_growth(), 10000);
    for (std::uint64_t t = 1; t <= 10000; ++t) {
      o.expect(linear.total_at(t) == trinum::tri_exact(t), "total at t=" + std::to_string(t));
    }
    const auto window = trinum::FitWindow{500, 1000};
    const auto lin_fit = trinum::fit_power_law(trinum::simulate(trinum::DividingDynamics::linear_growth(), 1000), window);
    o.expect(std::abs(lin_fit.exponent - 2.0) <= 0.05, "linear exponent " + std::to_string(lin_fit.exponent));
    const auto const_fit = trinum::fit_power_law(trinum::simulate(trinum::DividingDynamics::constant(1), 1000), window);
    o.expect(std::abs(const_fit.exponent - 1.0) <= 1e-6, "constant exponent " + std::to_string(const_fit.exponent));
    const auto hist = trinum::digit_histogram(linear, BaseSpec(10));
    for (unsigned d : {2u, 4u, 7u, 9u}) o.expect(hist.counts[d] == 0, "mass on digit " + std::to_string(d));
  });

  criterion("AC7", "empirical convergence in base 10", 0, [](Outcome& o) {
    const auto doc = json::parse(run_cli({"freq", "--base", "10", "--count", "100000", "--format", "json"}));
    for (const auto& row : doc["rows"]) {
      o.expect(row["deviation_approx"].get<double>() < 0.005, "digit " + row["digit"].dump());
    }
    for (const char* count : {"20", "40", "1000", "99980", "100000", "123456780"}) {
      const auto m = json::parse(run_cli({"freq", "--base", "10", "--count", count, "--format", "json"}));
      o.expect(m["max_deviation"] == "0/1", std::string("non-zero deviation at count ") + count);
    }
  });

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
