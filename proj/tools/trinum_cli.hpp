#pragma once

// Command implementations for the `trinum` executable. Kept in a header so the
// test suites can drive the CLI in-process with captured streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trinum/trinum.hpp"

namespace trinum::cli {

using nlohmann::json;

enum class Format { Table, Json };

namespace detail {

inline std::string fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline double approx(const Rational& r) { return r.convert_to<double>(); }

inline std::string digit_set(const std::vector<unsigned>& digits) {
  std::string out = "{";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out + "}";
}

/// Left-aligned columns separated by two spaces, no trailing blanks.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

inline std::vector<std::string> to_strings(const std::vector<Natural>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace detail

/// Parses `a..b` (inclusive), a single base, or a comma-separated mix of both.
inline std::vector<unsigned> parse_base_list(const std::string& text) {
  auto number = [&](const std::string& field) -> long long {
    if (field.empty() || field.size() > 6 || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid base list '" + text + "'");
    }
    return std::stoll(field);
  };
  std::vector<unsigned> bases;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      bases.push_back(BaseSpec(number(item)).value());
    } else {
      const long long lo = number(item.substr(0, dots));
      const long long hi = number(item.substr(dots + 2));
      if (hi < lo) throw ParseError("empty base range '" + item + "'");
      static_cast<void>(BaseSpec(lo));
      static_cast<void>(BaseSpec(hi));
      for (long long b = lo; b <= hi; ++b) bases.push_back(static_cast<unsigned>(b));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

inline FitWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& field) -> std::uint64_t {
    if (field.empty() || field.size() > 19 || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid window '" + text + "' (expected a..b)");
    }
    return std::stoull(field);
  };
  if (dots == std::string::npos) throw ParseError("invalid window '" + text + "' (expected a..b)");
  return FitWindow{number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

inline void cmd_tri(std::ostream& out, const std::string& n_text, std::optional<long long> base_arg, Format fmt) {
  const Natural n = Natural::parse(n_text);
  const Natural value = tri_exact(n);
  std::optional<DigitString> digits;
  if (base_arg) digits = to_digits(value, BaseSpec(*base_arg));

  if (fmt == Format::Json) {
    json doc = {{"n", n.str()}, {"value", value.str()}};
    if (digits) {
      doc["base"] = digits->base().value();
      doc["digits"] = render_digits(*digits);
      doc["units_digit"] = digits->units_digit();
    }
    out << doc.dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"n", n.str()}, {"value", value.str()}};
  if (digits) {
    rows.push_back({"base", std::to_string(digits->base().value())});
    rows.push_back({"digits", render_digits(*digits)});
    rows.push_back({"units digit", std::to_string(digits->units_digit())});
  }
  detail::print_table(out, rows);
}

inline void cmd_residues(std::ostream& out, long long base_arg, Format fmt) {
  const auto profile = residue_profile(BaseSpec(base_arg));
  if (fmt == Format::Json) {
    json freqs = json::array();
    for (unsigned d = 0; d < profile.frequency.size(); ++d) {
      freqs.push_back({{"digit", d},
                       {"exact", to_fraction_string(profile.frequency[d])},
                       {"approx", detail::approx(profile.frequency[d])}});
    }
    json doc = {{"base", profile.base.value()},
                {"period", profile.period},
                {"reachable", profile.reachable},
                {"frequencies", freqs}};
    out << doc.dump() << '\n';
    return;
  }
  out << "base: " << profile.base.value() << '\n'
      << "period: " << profile.period << '\n'
      << "reachable: " << detail::digit_set(profile.reachable) << '\n';
  std::vector<std::vector<std::string>> rows{{"digit", "exact", "approx"}};
  for (unsigned d = 0; d < profile.frequency.size(); ++d) {
    rows.push_back({std::to_string(d), to_fraction_string(profile.frequency[d]),
                    detail::fixed(detail::approx(profile.frequency[d]))});
  }
  detail::print_table(out, rows);
}

inline void cmd_classify(std::ostream& out, const std::string& bases_text, Format fmt) {
  const auto bases = parse_base_list(bases_text);
  std::vector<GapClassification> results;
  results.reserve(bases.size());
  for (unsigned b : bases) results.push_back(classify(BaseSpec(b)));

  if (fmt == Format::Json) {
    json doc = json::array();
    for (const auto& c : results) {
      doc.push_back({{"base", c.base.value()}, {"gappy", c.gappy}, {"missing", c.missing_digits}});
    }
    out << doc.dump() << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"base", "gappy", "missing"}};
  for (const auto& c : results) {
    rows.push_back({std::to_string(c.base.value()), c.gappy ? "yes" : "no", detail::digit_set(c.missing_digits)});
  }
  detail::print_table(out, rows);
}

inline void cmd_prove(std::ostream& out, long long base_arg, Notation notation, Format fmt) {
  const auto transcript = enumerate_cases(BaseSpec(base_arg));
  if (fmt == Format::Json) {
    json cases = json::array();
    for (const auto& c : transcript.cases) {
      cases.push_back({{"i", c.input_digit}, {"k", std::string(to_string(c.parity))}, {"j", c.output_digit}});
    }
    json doc = {{"base", transcript.base.value()},
                {"cases", cases},
                {"reachable", transcript.derived_reachable},
                {"missing", transcript.derived_missing}};
    out << doc.dump() << '\n';
    return;
  }
  out << render_transcript(transcript, notation);
}

inline void cmd_freq(std::ostream& out, long long base_arg, std::uint64_t count, Format fmt) {
  const BaseSpec base(base_arg);
  const auto empirical = empirical_frequencies(base, count);
  const auto profile = residue_profile(base);

  std::vector<Rational> deviation(base.value());
  Rational max_dev = 0;
  for (unsigned d = 0; d < base.value(); ++d) {
    deviation[d] = abs(empirical.proportion(d) - profile.frequency[d]);
    max_dev = std::max(max_dev, deviation[d]);
  }

  if (fmt == Format::Json) {
    json rows = json::array();
    for (unsigned d = 0; d < base.value(); ++d) {
      rows.push_back({{"digit", d},
                      {"count", empirical.counts[d]},
                      {"proportion", to_fraction_string(empirical.proportion(d))},
                      {"proportion_approx", detail::approx(empirical.proportion(d))},
                      {"exact", to_fraction_string(profile.frequency[d])},
                      {"approx", detail::approx(profile.frequency[d])},
                      {"deviation", to_fraction_string(deviation[d])},
                      {"deviation_approx", detail::approx(deviation[d])}});
    }
    json doc = {{"base", base.value()},
                {"count", count},
                {"rows", rows},
                {"max_deviation", to_fraction_string(max_dev)},
                {"max_deviation_approx", detail::approx(max_dev)}};
    out << doc.dump() << '\n';
    return;
  }
  out << "base: " << base.value() << '\n' << "count: " << count << '\n';
  std::vector<std::vector<std::string>> rows{{"digit", "count", "proportion", "exact", "approx", "deviation"}};
  for (unsigned d = 0; d < base.value(); ++d) {
    rows.push_back({std::to_string(d), std::to_string(empirical.counts[d]),
                    detail::fixed(detail::approx(empirical.proportion(d))), to_fraction_string(profile.frequency[d]),
                    detail::fixed(detail::approx(profile.frequency[d])), detail::fixed(detail::approx(deviation[d]))});
  }
  detail::print_table(out, rows);
  out << "max deviation: " << detail::fixed(detail::approx(max_dev)) << " (" << to_fraction_string(max_dev) << ")\n";
}

struct SimulateArgs {
  std::string dynamics;
  std::uint64_t steps = 0;
  std::string initial = "0";
  std::optional<long long> base;
  std::optional<std::string> window;
};

/// Traces longer than this print as head and tail in table mode.
inline constexpr std::uint64_t kFullTraceRows = 50;

inline void cmd_simulate(std::ostream& out, const SimulateArgs& args, Format fmt) {
  const auto dynamics = DividingDynamics::parse(args.dynamics);
  const Natural initial = Natural::parse(args.initial);
  std::optional<BaseSpec> base;
  if (args.base) base = BaseSpec(*args.base);
  const auto trace = simulate(dynamics, args.steps, initial);
  const FitWindow window = args.window ? parse_window(*args.window) : default_fit_window(trace);

  // A degenerate window (one step, zero totals) leaves the fit unavailable
  // without failing the command; an explicit --window must be valid.
  std::optional<PowerLawFit> fit;
  std::string fit_note;
  try {
    fit = fit_power_law(trace, window);
  } catch (const DomainError& e) {
    if (args.window) throw;
    fit_note = e.what();
  }
  std::optional<EmpiricalFrequencies> hist;
  if (base) hist = digit_histogram(trace, *base);

  if (fmt == Format::Json) {
    json doc = {{"dynamics", dynamics.str()},
                {"steps", args.steps},
                {"initial", initial.str()},
                {"dividing", detail::to_strings(trace.dividing)},
                {"total", detail::to_strings(trace.total)}};
    if (fit) {
      doc["fit"] = {{"exponent", fit->exponent},
                    {"offset", fit->offset},
                    {"residual", fit->residual},
                    {"window", {fit->window.first, fit->window.last}}};
    } else {
      doc["fit"] = nullptr;
    }
    if (hist) doc["histogram"] = {{"base", hist->base.value()}, {"counts", hist->counts}};
    out << doc.dump() << '\n';
    return;
  }

  out << "dynamics: " << dynamics.str() << '\n' << "steps: " << args.steps << '\n' << "initial: " << initial << '\n';
  std::vector<std::vector<std::string>> rows{{"t", "dividing", "total"}};
  const std::uint64_t T = trace.horizon();
  for (std::uint64_t t = 1; t <= T; ++t) {
    if (T > kFullTraceRows && t > 5 && t + 5 <= T) {
      if (t == 6) rows.push_back({"...", "...", "..."});
      continue;
    }
    rows.push_back({std::to_string(t), trace.dividing[t - 1].str(), trace.total[t - 1].str()});
  }
  detail::print_table(out, rows);
  if (fit) {
    out << "fit: exponent " << detail::fixed(fit->exponent) << " offset " << detail::fixed(fit->offset)
        << " residual " << detail::fixed(fit->residual) << " over [" << fit->window.first << ", "
        << fit->window.last << "]\n";
  } else {
    out << "fit: unavailable (" << fit_note << ")\n";
  }
  if (hist) {
    out << "histogram (base " << hist->base.value() << "):\n";
    std::vector<std::vector<std::string>> hrows{{"digit", "count"}};
    for (unsigned d = 0; d < hist->counts.size(); ++d) hrows.push_back({std::to_string(d), std::to_string(hist->counts[d])});
    detail::print_table(out, hrows);
  }
}

/// Runs one invocation; `args` excludes the program name. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular numbers: exact values, units-digit residues, congruence proofs and growth traces",
               "trinum"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  Format fmt = Format::Table;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats));
  };

  std::string n_text;
  std::optional<long long> tri_base;
  auto* tri = app.add_subcommand("tri", "Print S_n = n(n+1)/2, optionally with its base-L digits");
  tri->add_option("n", n_text, "Index n as a decimal string of any length")->required();
  tri->add_option("--base", tri_base, "Numeral-system base for the digit rendering");
  add_format(tri);

  long long base = 10;
  auto* residues = app.add_subcommand("residues", "Exact units-digit distribution of S_n in base L");
  residues->add_option("--base", base, "Numeral-system base L (2..256)")->required();
  add_format(residues);

  std::string bases_text;
  auto* classify_cmd = app.add_subcommand("classify", "Gappy/non-gappy classification per base");
  classify_cmd->add_option("--bases", bases_text, "Bases as a..b, a single base, or a comma list")->required();
  add_format(classify_cmd);

  const std::map<std::string, Notation> notations{{"ascii", Notation::Ascii}, {"unicode", Notation::Unicode}};
  Notation notation = Notation::Ascii;
  auto* prove = app.add_subcommand("prove", "Case-by-case congruence proof S_{Lk+i} == j (mod L)");
  prove->add_option("--base", base, "Numeral-system base L (2..256)")->required();
  prove->add_option("--notation", notation, "Congruence notation")->transform(CLI::CheckedTransformer(notations));
  add_format(prove);

  std::uint64_t count = kDefaultSampleSize;
  auto* freq = app.add_subcommand("freq", "Empirical units-digit counts of S_1..S_N against exact frequencies");
  freq->add_option("--base", base, "Numeral-system base L (2..256)")->required();
  freq->add_option("--count", count, "Sample size N");
  add_format(freq);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Cumulative growth trace from a dividing-cell dynamics");
  simulate_cmd->add_option("--dynamics", sim.dynamics, "linear | constant:c | decline:D,a")->required();
  simulate_cmd->add_option("--steps", sim.steps, "Horizon T")->required();
  simulate_cmd->add_option("--initial", sim.initial, "Initial total N0 (decimal)");
  simulate_cmd->add_option("--base", sim.base, "Base for the units-digit histogram of totals");
  simulate_cmd->add_option("--window", sim.window, "Fit window a..b (default: upper half)");
  add_format(simulate_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (tri->parsed()) {
      cmd_tri(out, n_text, tri_base, fmt);
    } else if (residues->parsed()) {
      cmd_residues(out, base, fmt);
    } else if (classify_cmd->parsed()) {
      cmd_classify(out, bases_text, fmt);
    } else if (prove->parsed()) {
      cmd_prove(out, base, notation, fmt);
    } else if (freq->parsed()) {
      if (count == 0) throw DomainError("--count must be at least 1");
      cmd_freq(out, base, count, fmt);
    } else if (simulate_cmd->parsed()) {
      if (sim.steps == 0) throw DomainError("--steps must be at least 1");
      cmd_simulate(out, sim, fmt);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace trinum::cli
