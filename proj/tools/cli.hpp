#pragma once

// gridsets command line: count, table, verify.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridsets/report.hpp"
#include "gridsets/verify.hpp"

namespace gridsets::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// GRIDSETS_BUDGET overrides the brute-force vertex budget.
inline int budget_from_env() {
  const char* raw = std::getenv("GRIDSETS_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteBudget;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError("GRIDSETS_BUDGET must be a positive integer");
  }
}

struct Options {
  std::string family = "grid";
  std::string method = "oracle";
  std::string format = "plain";
  int m = 0;
  int n = 0;
  int n_max = 0;
  bool spanning = false;
  int m_max = 4;
  int verify_n_max = 4;
  bool deep = false;
};

inline void add_count_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--family", o.family, "k (K_m x P_n) or grid (P_m x P_n)")
      ->check(CLI::IsMember({"k", "grid"}));
  cmd.add_option("--method", o.method, "oracle | profile | transfer | recurrence | bound")
      ->check(CLI::IsMember({"oracle", "profile", "transfer", "recurrence", "bound"}));
  cmd.add_option("--format", o.format, "csv | json | plain")->check(CLI::IsMember({"csv", "json", "plain"}));
  cmd.add_option("--m", o.m, "rows per column")->required()->check(CLI::PositiveNumber);
  cmd.add_flag("--spanning", o.spanning, "count only sets meeting every column");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of connected sets in K_m x P_n and P_m x P_n grids", "gridsets"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "count connected sets for one (m, n)");
  add_count_flags(*count, o);
  count->add_option("--n", o.n, "columns")->required()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "one record per n = 1 .. n-max");
  add_count_flags(*table, o);
  table->add_option("--n-max", o.n_max, "largest column count")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "cross-check every counting route");
  verify->add_option("--m-max", o.m_max, "largest m (default 4)")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", o.verify_n_max, "largest n (default 4)")->check(CLI::PositiveNumber);
  verify->add_flag("--deep", o.deep, "extend the column range by two");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    const int budget = budget_from_env();
    if (*verify) {
      const VerifyReport report = run_verification({o.m_max, o.verify_n_max, o.deep, budget});
      report.print(out);
      return report.ok() ? kExitOk : kExitMismatch;
    }

    CountRequest req{parse_family(o.family), parse_method(o.method), o.m, 1, o.spanning, budget};
    check_routing(req.family, req.method, req.m);
    std::vector<OutputRecord> records;
    if (*count) {
      req.n = o.n;
      records.push_back(compute_record(req));
    } else {
      for (int n = 1; n <= o.n_max; ++n) {
        req.n = n;
        records.push_back(compute_record(req));
      }
    }
    write_records(out, records, parse_format(o.format));
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gridsets::cli
