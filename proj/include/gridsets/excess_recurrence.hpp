#pragma once

// Multistep recurrences for the excess |C'_{m,n}| at m = 3 and m = 4: the
// number of column-spanning sets connected in K_m x P_n but not in the grid
// P_m x P_n. Subtracting it from the transfer-matrix count N_{m,n} yields the
// spanning grid count, and the usual convolution gives N(P_m x P_n).
//
// Every sequence is N'(K_m x P_n; S) for one last-column pattern S (rows
// 1-based in the names below):
//
//   m = 3:  a1 {1}  a2 {2}  b1 {1,2}  b3 {1,3}  c {1,2,3}
//           d = N'(I_n plus {1,3} in column n-1)
//   m = 4:  a1 {1}  a2 {2}  b1 {1,2}  b2 {2,3}  b4 {1,3}  b6 {1,4}
//           c1 {1,2,3}  c3 {1,2,4}  g {1,2,3,4}
//           r, t, k: the two-column merging patterns (see merging_pairs()).
//
// Reflection i -> m+1-i makes the remaining patterns redundant and they are
// not stored: for m = 3, a3 = a1 and b2 = b1; for m = 4, a4 = a1, a3 = a2,
// b3 = b1, b5 = b4, c2 = c1, c4 = c3.

#include <array>
#include <stdexcept>
#include <vector>

#include "gridsets/big_count.hpp"
#include "gridsets/grid.hpp"
#include "gridsets/transfer_matrix.hpp"

namespace gridsets {

struct Row3 {
  BigCount a1, a2, b1, b3, c;
  BigCount d;  // defined from n = 2 on; zero at n = 1

  BigCount excess() const { return 2 * a1 + a2 + 2 * b1 + b3 + c; }
};

struct SequenceTable3 {
  std::vector<Row3> rows;  // rows[n-1] holds index n

  int size() const { return static_cast<int>(rows.size()); }
  const Row3& at(int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }

  static SequenceTable3 initial() {
    Row3 first;
    first.b3 = 1;
    return SequenceTable3{{first}};
  }
};

/// Extend `table` (filled through n-1) to n using f = v_{n-1} of K_3 x P_{n-1}.
inline void advance3(SequenceTable3& table, const FVector& f) {
  const int n = table.size() + 1;
  if (n < 2) throw std::logic_error("sequence table must hold its initial row");
  if (f.k != n - 1 || f.values.size() != 3) throw std::invalid_argument("advance3 needs f_{3,n-1}");
  const Row3& p = table.at(n - 1);

  Row3 row;
  if (n >= 3) {
    const Row3& pp = table.at(n - 2);
    row.d = 2 * pp.a1 + 2 * pp.b1 + p.d + pp.c;
  }
  row.a1 = p.a1 + p.b1 + p.b3 + p.c;
  row.a2 = p.a2 + 2 * p.b1 + p.c;
  row.b1 = p.a1 + p.a2 + 2 * p.b1 + p.b3 + p.c;
  row.b3 = 2 * f[1] + 2 * f[2] + p.b3 + p.c;
  row.c = 2 * p.a1 + p.a2 + 2 * p.b1 + row.d + p.c;
  table.rows.push_back(std::move(row));
}

struct Row4 {
  BigCount a1, a2, b1, b2, b4, b6, c1, c3, g;
  BigCount r, t, k;  // defined from n = 2 on; zero at n = 1

  BigCount excess() const { return 2 * a1 + 2 * a2 + 2 * b1 + b2 + 2 * b4 + b6 + 2 * c1 + 2 * c3 + g; }
};

struct SequenceTable4 {
  std::vector<Row4> rows;

  int size() const { return static_cast<int>(rows.size()); }
  const Row4& at(int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }

  static SequenceTable4 initial() {
    Row4 first;
    first.b4 = 1;
    first.b6 = 1;
    first.c3 = 1;
    return SequenceTable4{{first}};
  }
};

/// Extend `table` (filled through n-1) to n using f = v_{n-1} of K_4 x P_{n-1}.
/// r, t, k at n are computed first; c1 and g at n consume them.
inline void advance4(SequenceTable4& table, const FVector& f) {
  const int n = table.size() + 1;
  if (n < 2) throw std::logic_error("sequence table must hold its initial row");
  if (f.k != n - 1 || f.values.size() != 4) throw std::invalid_argument("advance4 needs f_{4,n-1}");
  const Row4& p = table.at(n - 1);

  Row4 row;
  if (n >= 3) {
    const Row4& pp = table.at(n - 2);
    // a3 = a2, b5 = b4 by reflection.
    row.r = pp.a1 + pp.a2 + 2 * pp.b1 + pp.b2 + pp.b6 + p.r + 2 * pp.c1 + pp.c3 + p.t + pp.g;
    row.t = 2 * pp.a1 + pp.a2 + 2 * pp.b1 + pp.b2 + pp.b4 + p.r + p.k + 2 * pp.c1 + 2 * p.t + pp.g;
    row.k = 2 * pp.a1 + 2 * pp.b1 + 2 * pp.b4 + p.k + 2 * pp.c1 + 2 * p.t + pp.g;
  }
  row.a1 = p.a1 + p.b1 + p.b4 + p.b6 + p.c1 + 2 * p.c3 + p.g;
  row.a2 = p.a2 + p.b1 + p.b2 + p.b4 + 2 * p.c1 + p.c3 + p.g;
  row.b1 = p.a1 + p.a2 + p.b1 + p.b2 + 2 * p.b4 + p.b6 + 2 * p.c1 + 2 * p.c3 + p.g;
  row.b2 = 2 * p.a2 + 2 * p.b1 + p.b2 + 2 * p.b4 + 2 * p.c1 + 2 * p.c3 + p.g;
  row.b4 = 2 * f[1] + 4 * f[2] + p.b4 + 2 * f[3] + p.c1 + p.c3 + p.g;
  row.b6 = 2 * f[1] + 4 * f[2] + p.b6 + 2 * f[3] + 2 * p.c3 + p.g;
  row.c1 = p.a1 + 2 * p.a2 + 2 * p.b1 + p.b2 + p.b4 + p.b6 + row.r + 2 * p.c1 + p.c3 + row.t + p.g;
  row.c3 = 3 * f[1] + 4 * f[2] + p.b4 + p.b6 + f[3] + p.c1 + 2 * p.c3 + p.g;
  row.g = 2 * p.a1 + 2 * p.a2 + 2 * p.b1 + p.b2 + 2 * row.r + row.k + 2 * p.c1 + 2 * row.t + p.g;
  table.rows.push_back(std::move(row));
}

inline SequenceTable3 build_table3(int n, const SpanningCounts& k3) {
  SequenceTable3 table = SequenceTable3::initial();
  for (int i = 2; i <= n; ++i) advance3(table, k3.f(i - 1));
  return table;
}

inline SequenceTable4 build_table4(int n, const SpanningCounts& k4) {
  SequenceTable4 table = SequenceTable4::initial();
  for (int i = 2; i <= n; ++i) advance4(table, k4.f(i - 1));
  return table;
}

/// Which of r, t, k a two-column merging pattern evaluates to.
enum class MergeClass { R, T, K };

struct MergePair {
  ColumnMask last;  // S in column n, 0-based row bits
  ColumnMask prev;  // T in column n-1
  MergeClass value;
};

/// The nine (S, T) pairs of K_4 x P_n whose grid component count drops when
/// column n is added, with the sequence each one equals.
inline const std::array<MergePair, 9>& merging_pairs() {
  // Row bit i corresponds to v_{i+1}.
  static const std::array<MergePair, 9> pairs{{
      {0b0111, 0b0101, MergeClass::R},
      {0b0111, 0b1101, MergeClass::T},
      {0b1110, 0b1010, MergeClass::R},
      {0b1110, 0b1011, MergeClass::T},
      {0b1111, 0b0101, MergeClass::R},
      {0b1111, 0b1001, MergeClass::K},
      {0b1111, 0b1010, MergeClass::R},
      {0b1111, 0b1011, MergeClass::T},
      {0b1111, 0b1101, MergeClass::T},
  }};
  return pairs;
}

inline const BigCount& merge_value(const Row4& row, MergeClass c) {
  switch (c) {
    case MergeClass::R: return row.r;
    case MergeClass::T: return row.t;
    case MergeClass::K: break;
  }
  return row.k;
}

/// Full recurrence state for one m in {3, 4} through column count n.
class ExcessRecurrence {
 public:
  ExcessRecurrence(int m, int n) : m_(m), spanning_(check_m(m), n) {
    if (m == 3)
      table3_ = build_table3(n, spanning_);
    else
      table4_ = build_table4(n, spanning_);
  }

  int m() const { return m_; }
  int n() const { return spanning_.n(); }
  const SpanningCounts& spanning_counts() const { return spanning_; }
  const SequenceTable3& table3() const { return table3_; }
  const SequenceTable4& table4() const { return table4_; }

  /// |C'_{m,k}|.
  BigCount excess(int k) const { return m_ == 3 ? table3_.at(k).excess() : table4_.at(k).excess(); }

  /// N*_{m,k} = N_{m,k} - |C'_{m,k}|: grid sets meeting every column.
  BigCount grid_spanning(int k) const { return spanning_.spanning(k) - excess(k); }

  /// N(P_m x P_cols) for cols <= n.
  BigCount grid_total(int cols) const {
    BigCount sum = 0;
    for (int k = 1; k <= cols; ++k) sum += grid_spanning(k) * (cols - k + 1);
    return sum;
  }

 private:
  static int check_m(int m) {
    if (m != 3 && m != 4)
      throw std::invalid_argument("exact recurrences exist only for m = 3 and m = 4; use the general bound");
    return m;
  }

  int m_;
  SpanningCounts spanning_;
  SequenceTable3 table3_;
  SequenceTable4 table4_;
};

inline BigCount excess_count(int m, int n) { return ExcessRecurrence(m, n).excess(n); }

/// N(P_m x P_n) for m in {3, 4}.
inline BigCount grid_count(int m, int n) { return ExcessRecurrence(m, n).grid_total(n); }

}  // namespace gridsets
