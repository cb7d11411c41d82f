#pragma once

// Ground-truth counters used to check every other module.
//
//  * brute_*      : exhaustive enumeration of all 2^(m*n) vertex subsets.
//  * profile_count: a column-sweep DP over connectivity partitions of the
//                   current column, exact for any n.
//
// Neither shares code paths with the transfer-matrix or recurrence modules.

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "gridsets/big_count.hpp"
#include "gridsets/grid.hpp"

namespace gridsets {

inline constexpr int kDefaultBruteBudget = 28;
inline constexpr int kMaxProfileRows = 20;  // each state tries all 2^m next columns

/// Columns whose intersection with a counted set is pinned. Columns are
/// 0-based; every pinned mask is nonzero.
struct RestrictionPattern {
  std::map<int, ColumnMask> fixed;

  RestrictionPattern& pin(int column, ColumnMask mask) {
    if (mask == 0) throw std::invalid_argument("pinned column masks must be nonzero");
    fixed[column] = mask;
    return *this;
  }

  bool matches(std::span<const ColumnMask> masks) const {
    for (const auto& [col, mask] : fixed)
      if (masks[static_cast<std::size_t>(col)] != mask) return false;
    return true;
  }
};

namespace detail {

inline void check_brute_budget(const GridSpec& spec, int budget) {
  spec.validate();
  if (spec.vertex_count() > budget)
    throw BudgetExceeded("too large for brute force: " + std::to_string(spec.vertex_count()) +
                         " vertices exceeds budget " + std::to_string(budget));
  if (spec.vertex_count() > 62) throw BudgetExceeded("too large for brute force: counter overflow");
}

/// Count subsets in [lo, hi) accepted by `accept(masks, counter)`.
template <class Accept>
std::uint64_t enumerate_range(const GridSpec& spec, std::uint64_t lo, std::uint64_t hi, Accept accept) {
  ComponentCounter counter(spec);
  std::vector<ColumnMask> masks(static_cast<std::size_t>(spec.n));
  const ColumnMask col_bits = spec.full_column();
  std::uint64_t hits = 0;
  for (std::uint64_t s = lo; s < hi; ++s) {
    for (int j = 0; j < spec.n; ++j)
      masks[static_cast<std::size_t>(j)] = static_cast<ColumnMask>(s >> (j * spec.m)) & col_bits;
    if (accept(std::span<const ColumnMask>(masks), counter)) ++hits;
  }
  return hits;
}

/// Split the full subset counter into disjoint ranges, evaluate each on its
/// own worker and sum.
template <class Accept>
BigCount enumerate_all(const GridSpec& spec, Accept accept) {
  const std::uint64_t total = std::uint64_t{1} << spec.vertex_count();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = total < (1u << 14) ? 1 : std::min<std::uint64_t>(hw, 64);
  if (workers == 1) return BigCount(enumerate_range(spec, 0, total, accept));

  std::vector<std::future<std::uint64_t>> parts;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::uint64_t lo = 0; lo < total; lo += step) {
    const std::uint64_t hi = std::min(total, lo + step);
    parts.push_back(std::async(std::launch::async,
                               [&spec, lo, hi, accept]() mutable { return enumerate_range(spec, lo, hi, accept); }));
  }
  BigCount sum = 0;
  for (auto& p : parts) sum += p.get();
  return sum;
}

inline bool all_nonzero(std::span<const ColumnMask> masks) {
  return std::all_of(masks.begin(), masks.end(), [](ColumnMask c) { return c != 0; });
}

}  // namespace detail

/// N(G): number of connected vertex subsets.
inline BigCount brute_count(const GridSpec& spec, int budget = kDefaultBruteBudget) {
  detail::check_brute_budget(spec, budget);
  return detail::enumerate_all(spec, [](std::span<const ColumnMask> masks, ComponentCounter& cc) {
    return cc.count_unchecked(masks) == 1;
  });
}

/// Connected subsets that meet every column.
inline BigCount brute_count_spanning(const GridSpec& spec, int budget = kDefaultBruteBudget) {
  detail::check_brute_budget(spec, budget);
  return detail::enumerate_all(spec, [](std::span<const ColumnMask> masks, ComponentCounter& cc) {
    return detail::all_nonzero(masks) && cc.count_unchecked(masks) == 1;
  });
}

/// Sets connected in K_m x P_n, disconnected in P_m x P_n, meeting every
/// column and agreeing with every pinned column of `pattern`.
inline BigCount brute_excess(int m, int n, const RestrictionPattern& pattern = {},
                             int budget = kDefaultBruteBudget) {
  const GridSpec complete{m, n, Family::CompleteColumn};
  const GridSpec path{m, n, Family::PathColumn};
  detail::check_brute_budget(complete, budget);
  for (const auto& [col, mask] : pattern.fixed) {
    if (col < 0 || col >= n) throw std::invalid_argument("pinned column out of range");
    if (mask == 0 || (mask & ~complete.full_column()))
      throw std::invalid_argument("pinned mask must be a nonzero subset of the column");
  }
  return detail::enumerate_all(
      complete, [&pattern, grid = ComponentCounter(path)](std::span<const ColumnMask> masks,
                                                                ComponentCounter& cc) mutable {
        if (!pattern.matches(masks)) return false;
        if (!detail::all_nonzero(masks)) return false;
        return cc.count_unchecked(masks) == 1 && grid.count_unchecked(masks) > 1;
      });
}

/// Connectivity profile of the current column. `labels[i]` is 0 for an
/// unselected row, otherwise the 1-based class id; ids are canonical
/// (first-occurrence order by row).
struct ProfileState {
  std::array<std::uint8_t, kMaxProfileRows> labels{};
  bool finished = false;  // a single component was completed and detached

  bool started() const {
    return finished || std::any_of(labels.begin(), labels.end(), [](auto l) { return l != 0; });
  }

  int classes() const { return *std::max_element(labels.begin(), labels.end()); }

  // One byte per row, then the finished flag.
  std::string key() const {
    std::string k(labels.begin(), labels.end());
    k.push_back(finished ? 1 : 0);
    return k;
  }

  static ProfileState from_key(std::string_view k) {
    ProfileState s;
    if (k.size() != s.labels.size() + 1) throw std::invalid_argument("malformed profile key");
    std::copy(k.begin(), k.end() - 1, s.labels.begin());
    s.finished = k.back() != 0;
    return s;
  }
};

namespace detail {

/// Successor of `state` after selecting `mask` in the next column; returns
/// false when the partial set can no longer become connected.
inline bool profile_step(const ProfileState& state, ColumnMask mask, int m, Family family,
                         ProfileState& next) {
  next = ProfileState{};
  if (state.finished) {
    next.finished = true;
    return mask == 0;
  }
  const int old_classes = state.classes();
  if (mask == 0) {
    if (old_classes == 0) return true;  // not started yet
    if (old_classes == 1) {
      next.finished = true;
      return true;
    }
    return false;
  }

  UnionFind uf(static_cast<std::size_t>(old_classes + m));
  std::array<bool, kMaxProfileRows> touched{};
  for (int i = 0; i < m; ++i) {
    if (!(mask >> i & 1u)) continue;
    const int l = state.labels[static_cast<std::size_t>(i)];
    if (l != 0) {
      uf.unite(old_classes + i, l - 1);
      touched[static_cast<std::size_t>(l - 1)] = true;
    }
  }
  for (int c = 0; c < old_classes; ++c)
    if (!touched[static_cast<std::size_t>(c)]) return false;
  if (family == Family::CompleteColumn) {
    const int first = std::countr_zero(mask);
    for (ColumnMask rest = mask & (mask - 1); rest; rest &= rest - 1)
      uf.unite(old_classes + first, old_classes + std::countr_zero(rest));
  } else {
    for (ColumnMask pairs = mask & (mask >> 1); pairs; pairs &= pairs - 1) {
      const int i = std::countr_zero(pairs);
      uf.unite(old_classes + i, old_classes + i + 1);
    }
  }

  std::array<int, 2 * kMaxProfileRows + 1> relabel{};
  std::uint8_t next_id = 0;
  for (int i = 0; i < m; ++i) {
    if (!(mask >> i & 1u)) continue;
    int& slot = relabel[static_cast<std::size_t>(uf.find(old_classes + i))];
    if (slot == 0) slot = ++next_id;
    next.labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(slot);
  }
  return true;
}

}  // namespace detail

/// Exact N(G) (or the column-spanning count) by a left-to-right sweep over
/// connectivity profiles.
inline BigCount profile_count(const GridSpec& spec, bool spanning) {
  spec.validate();
  if (spec.m > kMaxProfileRows)
    throw BudgetExceeded("profile DP supports at most " + std::to_string(kMaxProfileRows) + " rows");

  const ColumnMask masks = spec.full_column() + 1;
  std::unordered_map<std::string, BigCount> frontier{{ProfileState{}.key(), BigCount(1)}};
  for (int col = 0; col < spec.n; ++col) {
    std::unordered_map<std::string, BigCount> next_frontier;
    for (const auto& [key, weight] : frontier) {
      const ProfileState state = ProfileState::from_key(key);
      for (ColumnMask mask = spanning ? 1 : 0; mask < masks; ++mask) {
        ProfileState next;
        if (detail::profile_step(state, mask, spec.m, spec.family, next)) next_frontier[next.key()] += weight;
      }
    }
    frontier = std::move(next_frontier);
  }

  BigCount total = 0;
  for (const auto& [key, weight] : frontier) {
    const ProfileState s = ProfileState::from_key(key);
    if (s.finished || s.classes() == 1) total += weight;
  }
  return total;
}

}  // namespace gridsets
