#pragma once

// Cross-checks between every counting route. Each check records both sides so
// the report shows what was compared, not just a verdict.

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gridsets/big_count.hpp"
#include "gridsets/excess_recurrence.hpp"
#include "gridsets/general_bound.hpp"
#include "gridsets/oracle.hpp"
#include "gridsets/transfer_matrix.hpp"

namespace gridsets {

struct VerifyOptions {
  int m_max = 4;
  int n_max = 4;
  bool deep = false;  // two more columns of oracle range
  int budget = kDefaultBruteBudget;
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  std::string lhs;
  std::string relation;  // "==", ">=", "<="
  std::string rhs;
  CheckStatus status = CheckStatus::Pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
  }
  bool ok() const { return count(CheckStatus::Fail) == 0; }

  void print(std::ostream& out) const {
    for (const auto& c : checks) {
      const char* tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
      out << tag << "  " << c.name << ": " << c.lhs << ' ' << c.relation << ' ' << c.rhs << '\n';
    }
    out << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
        << count(CheckStatus::Skip) << " skipped\n";
  }
};

namespace detail {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void compare(std::string name, const BigCount& lhs, std::string relation, const BigCount& rhs) {
    bool ok = false;
    if (relation == "==") ok = lhs == rhs;
    else if (relation == ">=") ok = lhs >= rhs;
    else if (relation == "<=") ok = lhs <= rhs;
    report_.checks.push_back({std::move(name), to_decimal(lhs), std::move(relation), to_decimal(rhs),
                              ok ? CheckStatus::Pass : CheckStatus::Fail});
  }

  void flag(std::string name, bool value) {
    report_.checks.push_back({std::move(name), value ? "true" : "false", "==", "true",
                              value ? CheckStatus::Pass : CheckStatus::Fail});
  }

  void skip(std::string name, std::string why) {
    report_.checks.push_back({std::move(name), "skipped", "--", std::move(why), CheckStatus::Skip});
  }

 private:
  VerifyReport& report_;
};

inline std::string cell(std::string_view what, int m, int n) {
  return std::string(what) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

/// Published small values of the m = 3 and m = 4 systems.
inline void check_known_values(Checker& c, int m_max) {
  struct Known {
    int m;
    std::vector<int> spanning_k, excess, spanning_grid;
  };
  const std::vector<Known> known{
      {3, {7, 37, 205, 1129}, {1, 9, 61, 399}, {6, 28, 144, 730}},
      {4, {15, 175, 2129, 25793}, {5, 87, 1209, 16431}, {10, 88, 920, 9362}},
  };
  for (const auto& k : known) {
    if (k.m > m_max) continue;
    const ExcessRecurrence rec(k.m, 4);
    for (int n = 1; n <= 4; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      c.compare(cell("known N_mk", k.m, n), rec.spanning_counts().spanning(n), "==", k.spanning_k[i]);
      c.compare(cell("known |C'|", k.m, n), rec.excess(n), "==", k.excess[i]);
      c.compare(cell("known N*", k.m, n), rec.grid_spanning(n), "==", k.spanning_grid[i]);
    }
  }
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  VerifyReport report;
  detail::Checker c(report);
  using detail::cell;

  detail::check_known_values(c, opt.m_max);

  const int n_max = opt.n_max + (opt.deep ? 2 : 0);
  for (int m = 1; m <= opt.m_max; ++m) {
    const SpanningCounts k_counts(m, n_max);
    std::optional<ExcessRecurrence> rec;
    if (m == 3 || m == 4) rec.emplace(m, n_max);
    std::optional<GeneralBound> bound;
    if (m <= kMaxBoundRows) bound.emplace(m, n_max);

    std::vector<BigCount> k_total, grid_total, grid_spanning;
    for (int n = 1; n <= n_max; ++n) {
      const GridSpec kspec{m, n, Family::CompleteColumn};
      const GridSpec gspec{m, n, Family::PathColumn};
      const bool brute_ok = m * n <= opt.budget;
      const bool profile_ok = m <= kMaxProfileRows;

      // Profile DP is the reference for the identities below when brute
      // force is out of budget.
      std::optional<BigCount> gtotal, gspan;
      if (profile_ok) {
        gtotal = profile_count(gspec, false);
        gspan = profile_count(gspec, true);
      }

      if (brute_ok) {
        const BigCount kb = brute_count(kspec, opt.budget);
        const BigCount kbs = brute_count_spanning(kspec, opt.budget);
        const BigCount gb = brute_count(gspec, opt.budget);
        const BigCount gbs = brute_count_spanning(gspec, opt.budget);
        if (profile_ok) {
          c.compare(cell("profile k", m, n), profile_count(kspec, false), "==", kb);
          c.compare(cell("profile k spanning", m, n), profile_count(kspec, true), "==", kbs);
          c.compare(cell("profile grid", m, n), *gtotal, "==", gb);
          c.compare(cell("profile grid spanning", m, n), *gspan, "==", gbs);
        }
        c.compare(cell("transfer N(K_m x P_n) vs oracle", m, n), k_counts.total(n), "==", kb);
        c.compare(cell("transfer N_mk vs oracle", m, n), k_counts.spanning(n), "==", kbs);
        c.compare(cell("oracle N(k) >= N(grid)", m, n), kb, ">=", gb);
        const BigCount ex = brute_excess(m, n, {}, opt.budget);
        c.compare(cell("oracle excess = N_mk - N*", m, n), ex, "==", kbs - gbs);
        if (rec) {
          c.compare(cell("recurrence grid count vs oracle", m, n), rec->grid_total(n), "==", gb);
          c.compare(cell("recurrence excess vs oracle", m, n), rec->excess(n), "==", ex);
        }
        if (bound) {
          const BoundResult np = bound->n_prime(n);
          c.compare(cell("bound N' <= oracle excess", m, n), np.value, "<=", ex);
          const BoundResult ub = grid_upper_bound(m, n);
          c.compare(cell("bound upper >= oracle grid count", m, n), ub.value, ">=", gb);
        }
      } else {
        c.skip(cell("oracle checks", m, n), "m*n exceeds brute-force budget " + std::to_string(opt.budget));
      }

      if (!profile_ok) c.skip(cell("profile checks", m, n), "m exceeds profile budget");

      if (rec && bound) {
        const BoundResult np = bound->n_prime(n);
        c.compare(cell("bound N' vs recurrence excess", m, n), np.value, "==", rec->excess(n));
        c.flag(cell("bound scheme exact", m, n), np.exact_scheme);
      }
      if (m <= 2 && bound) c.compare(cell("excess vanishes for m<=2", m, n), bound->n_prime(n).value, "==", 0);

      k_total.push_back(k_counts.total(n));
      if (gtotal) {
        grid_total.push_back(*gtotal);
        grid_spanning.push_back(*gspan);
      }
      if (n >= 3) {
        const auto i = static_cast<std::size_t>(n - 1);
        c.compare(cell("convolution k", m, n), k_total[i] - 2 * k_total[i - 1] + k_total[i - 2], "==",
                  k_counts.spanning(n));
        if (grid_total.size() == static_cast<std::size_t>(n))
          c.compare(cell("convolution grid", m, n), grid_total[i] - 2 * grid_total[i - 1] + grid_total[i - 2],
                    "==", grid_spanning[i]);
      }
    }
  }
  return report;
}

}  // namespace gridsets
