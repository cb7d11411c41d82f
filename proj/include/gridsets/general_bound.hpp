#pragma once

// Lower bound N'_{m,n} <= |C'_{m,n}| for any m, and through it an upper bound
// on N(P_m x P_n).
//
// Restricted counts are indexed by the pinned suffix of columns only:
//
//   one(d, S)     = N'(K_m x P_d; S in column d)
//   two(d, S, T)  = N'(K_m x P_d; S in column d, T in column d-1)
//
// one(d, S) expands over every nonzero T meeting S's row shadow. A two-column
// state at depth >= 3 is classified by grid connectivity on the window
// (T, S):
//
//   Detached       a run of S touches no row of T; the rest is any spanning
//                  K_m set ending in T, i.e. f(d-1, |T|).
//   SameComponents every grid component of S u T holds exactly one run of T;
//                  the last column can be dropped: one(d-1, T).
//   Merging        S joins several runs of T; expand once more over X in
//                  column d-2 and classify the triple (X, T, S):
//     X_i      a component of S u T misses X             -> f(d-2, |X|)
//     X_ii     component count equals that of X alone     -> one(d-2, X)
//     X_iii    X runs merge, merged runs are consecutive  -> two(d-1, fill, X)
//     Excluded merged runs interleave                     -> 0, bound may be strict
//
// Depth-1 and depth-2 states pin every column and are evaluated directly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridsets/big_count.hpp"
#include "gridsets/grid.hpp"
#include "gridsets/transfer_matrix.hpp"

namespace gridsets {

inline constexpr int kMaxBoundRows = 12;

enum class TwoColumnCase { Detached, SameComponents, Merging };
enum class ThreeColumnCase { X_i, X_ii, X_iii, Excluded };

namespace detail {

/// Grid components of a window of consecutive columns, oldest first.
class GridWindow {
 public:
  GridWindow(int m, std::vector<ColumnMask> masks)
      : masks_(std::move(masks)),
        counter_(GridSpec{m, static_cast<int>(masks_.size()), Family::PathColumn}) {
    components_ = counter_.count(masks_);
  }

  int components() const { return components_; }
  bool has(int row, int col) const { return masks_[static_cast<std::size_t>(col)] >> row & 1u; }
  int root(int row, int col) { return counter_.representative(row, col); }
  int m() const { return counter_.spec().m; }

 private:
  std::vector<ColumnMask> masks_;
  ComponentCounter counter_;
  int components_ = 0;
};

/// First row of every run of `mask`, in row order.
inline std::vector<int> run_heads(ColumnMask mask) {
  std::vector<int> heads;
  for (ColumnMask h = mask & ~(mask << 1); h; h &= h - 1) heads.push_back(std::countr_zero(h));
  return heads;
}

inline void require_nonzero(ColumnMask a, ColumnMask b, int m) {
  const ColumnMask full = GridSpec::low_bits(m);
  if (a == 0 || b == 0) throw std::invalid_argument("column masks must be nonzero");
  if ((a | b) & ~full) throw std::invalid_argument("column mask has bits above row m");
}

}  // namespace detail

/// Classify the pair (S in column n, T in column n-1).
inline TwoColumnCase classify_two_column(int m, ColumnMask last, ColumnMask prev) {
  detail::require_nonzero(last, prev, m);
  detail::GridWindow window(m, {prev, last});
  // A run of `last` stays its own component iff no vertex of `prev` joins it.
  for (int head : detail::run_heads(last)) {
    const int root = window.root(head, 1);
    bool joined = false;
    for (int i = 0; i < m && !joined; ++i) joined = window.has(i, 0) && window.root(i, 0) == root;
    if (!joined) return TwoColumnCase::Detached;
  }
  return window.components() == column_runs(prev) ? TwoColumnCase::SameComponents : TwoColumnCase::Merging;
}

/// Row span of each run of X inside the three-column component containing it.
struct LLabels {
  std::vector<int> low;   // l_i, 0-based rows
  std::vector<int> high;  // l-bar_i
  bool consecutive = true;
  ColumnMask fill = 0;    // union of the row intervals [l_i, l-bar_i]
};

/// Labels for the window (X in column n-2, T in n-1, S in n). Only X's
/// column is scanned for l_i / l-bar_i.
inline LLabels l_labels(int m, ColumnMask last, ColumnMask prev, ColumnMask older) {
  detail::require_nonzero(last, prev, m);
  detail::require_nonzero(older, older, m);
  if ((older & prev) == 0) throw std::invalid_argument("X must share a row with T");

  detail::GridWindow window(m, {older, prev, last});
  LLabels out;
  for (int head : detail::run_heads(older)) {
    const int root = window.root(head, 0);
    int lo = m;
    int hi = -1;
    for (int q = 0; q < m; ++q) {
      if (window.has(q, 0) && window.root(q, 0) == root) {
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
    }
    out.low.push_back(lo);
    out.high.push_back(hi);
  }
  const std::size_t r = out.low.size();
  for (std::size_t a = 0; a < r && out.consecutive; ++a)
    for (std::size_t b = a + 1; b < r && out.consecutive; ++b)
      if (out.low[a] == out.low[b])
        for (std::size_t c = a + 1; c < b; ++c)
          if (out.low[c] != out.low[a]) out.consecutive = false;
  for (std::size_t i = 0; i < r; ++i)
    for (int q = out.low[i]; q <= out.high[i]; ++q) out.fill |= ColumnMask{1} << q;
  return out;
}

/// Classify X in column n-2 for a Merging pair (S, T).
inline ThreeColumnCase classify_three_column(int m, ColumnMask last, ColumnMask prev, ColumnMask older) {
  detail::require_nonzero(last, prev, m);
  detail::require_nonzero(older, older, m);
  detail::GridWindow pair(m, {0, prev, last});
  detail::GridWindow triple(m, {older, prev, last});

  // (i): some component of S u T is untouched by X.
  std::vector<int> seen;
  for (int col = 1; col <= 2; ++col) {
    for (int q = 0; q < m; ++q) {
      if (!pair.has(q, col)) continue;
      const int root2 = pair.root(q, col);
      if (std::find(seen.begin(), seen.end(), root2) != seen.end()) continue;
      seen.push_back(root2);
      const int root3 = triple.root(q, col);
      bool reached = false;
      for (int x = 0; x < m && !reached; ++x) reached = triple.has(x, 0) && triple.root(x, 0) == root3;
      if (!reached) return ThreeColumnCase::X_i;
    }
  }
  if (triple.components() == column_runs(older)) return ThreeColumnCase::X_ii;
  return l_labels(m, last, prev, older).consecutive ? ThreeColumnCase::X_iii : ThreeColumnCase::Excluded;
}

struct BoundValue {
  BigCount value;
  bool exact_scheme = true;
};

struct BoundResult {
  BigCount value;
  bool exact_scheme = true;
  std::size_t excluded_cases = 0;  // distinct (state, X) expansions dropped
  std::size_t memo_size = 0;
};

/// Memoized evaluator of the restricted counts for one m. States reached for
/// a given depth are reused across column counts.
class GeneralBound {
 public:
  /// `canonicalize` folds each state with its row reflection in the memo.
  GeneralBound(int m, int max_depth, bool canonicalize = true)
      : m_(m), max_depth_(max_depth), canonicalize_(canonicalize), spanning_(check_m(m), std::max(1, max_depth)) {}

  int m() const { return m_; }
  std::size_t memo_size() const { return memo_.size(); }
  std::size_t excluded_cases() const { return excluded_; }
  const SpanningCounts& spanning_counts() const { return spanning_; }

  /// N'(K_m x P_depth; S in the last column).
  BoundValue one_column(int depth, ColumnMask last) { return eval(depth, last, 0); }

  /// N'(K_m x P_depth; S in the last column, T in the one before it).
  BoundValue two_column(int depth, ColumnMask last, ColumnMask prev) {
    if (depth < 2) throw std::invalid_argument("two-column states need depth >= 2");
    if (prev == 0) throw std::invalid_argument("column masks must be nonzero");
    return eval(depth, last, prev);
  }

  /// N'_{m,n}: sum of one_column(n, S) over all nonzero S.
  BoundResult n_prime(int n) {
    BoundResult out;
    for (ColumnMask s = 1; s <= full(); ++s) {
      BoundValue v = one_column(n, s);
      out.value += v.value;
      out.exact_scheme = out.exact_scheme && v.exact_scheme;
    }
    out.excluded_cases = excluded_;
    out.memo_size = memo_.size();
    return out;
  }

 private:
  static int check_m(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m > kMaxBoundRows) throw BudgetExceeded("general bound supports at most 12 rows");
    return m;
  }

  ColumnMask full() const { return GridSpec::low_bits(m_); }

  std::uint64_t key(int depth, ColumnMask last, ColumnMask prev) const {
    const auto forward = std::make_pair(last, prev);
    if (!canonicalize_) return std::uint64_t(depth) << 48 | std::uint64_t(last) << 24 | prev;
    const auto mirrored = std::make_pair(reflect_rows(last, m_), reflect_rows(prev, m_));
    const auto& canon = std::min(forward, mirrored);
    return std::uint64_t(depth) << 48 | std::uint64_t(canon.first) << 24 | canon.second;
  }

  const BigCount& f(int depth, int size) const { return spanning_.f(depth)[size]; }

  BoundValue eval(int depth, ColumnMask last, ColumnMask prev) {
    if (depth < 1 || depth > max_depth_) throw std::out_of_range("depth outside the prepared range");
    if (last == 0 || ((last | prev) & ~full())) throw std::invalid_argument("invalid column mask");
    const std::uint64_t k = key(depth, last, prev);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    BoundValue v = prev == 0 ? compute_one(depth, last) : compute_two(depth, last, prev);
    return memo_.emplace(k, std::move(v)).first->second;
  }

  BoundValue compute_one(int depth, ColumnMask last) {
    if (depth == 1) return {column_runs(last) > 1 ? 1 : 0, true};
    BoundValue sum{0, true};
    for (ColumnMask t = 1; t <= full(); ++t) {
      if ((t & last) == 0) continue;
      accumulate(sum, eval(depth, last, t));
    }
    return sum;
  }

  BoundValue compute_two(int depth, ColumnMask last, ColumnMask prev) {
    if (depth == 2) {
      const std::vector<ColumnMask> masks{prev, last};
      const bool in_complete = is_connected(GridSpec{m_, 2, Family::CompleteColumn}, masks);
      const bool in_grid = is_connected(GridSpec{m_, 2, Family::PathColumn}, masks);
      return {in_complete && !in_grid ? 1 : 0, true};
    }
    switch (classify_two_column(m_, last, prev)) {
      case TwoColumnCase::Detached: return {f(depth - 1, popcount(prev)), true};
      case TwoColumnCase::SameComponents: return eval(depth - 1, prev, 0);
      case TwoColumnCase::Merging: break;
    }
    BoundValue sum{0, true};
    for (ColumnMask x = 1; x <= full(); ++x) {
      if ((x & prev) == 0) continue;
      switch (classify_three_column(m_, last, prev, x)) {
        case ThreeColumnCase::X_i: sum.value += f(depth - 2, popcount(x)); break;
        case ThreeColumnCase::X_ii: accumulate(sum, eval(depth - 2, x, 0)); break;
        case ThreeColumnCase::X_iii: accumulate(sum, eval(depth - 1, l_labels(m_, last, prev, x).fill, x)); break;
        case ThreeColumnCase::Excluded:
          ++excluded_;
          sum.exact_scheme = false;
          break;
      }
    }
    return sum;
  }

  static void accumulate(BoundValue& into, const BoundValue& v) {
    into.value += v.value;
    into.exact_scheme = into.exact_scheme && v.exact_scheme;
  }

  int m_;
  int max_depth_;
  bool canonicalize_;
  SpanningCounts spanning_;
  std::unordered_map<std::uint64_t, BoundValue> memo_;
  std::size_t excluded_ = 0;
};

/// N'_{m,n} and whether the scheme ever hit an excluded configuration.
inline BoundResult n_prime_bound(int m, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return GeneralBound(m, n).n_prime(n);
}

/// sum_k (N_{m,k} - N'_{m,k}) (n - k + 1), an upper bound on N(P_m x P_n).
inline BoundResult grid_upper_bound(int m, int n, bool spanning_only = false) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  GeneralBound solver(m, n);
  BoundResult out;
  for (int k = spanning_only ? n : 1; k <= n; ++k) {
    BoundResult excess = solver.n_prime(k);
    const int weight = spanning_only ? 1 : n - k + 1;
    out.value += (solver.spanning_counts().spanning(k) - excess.value) * weight;
    out.exact_scheme = out.exact_scheme && excess.exact_scheme;
  }
  out.excluded_cases = solver.excluded_cases();
  out.memo_size = solver.memo_size();
  return out;
}

}  // namespace gridsets
