#pragma once

// Column-spanning connected sets of K_m x P_n via an m x m binomial transfer
// matrix.
//
// f(k, i) counts connected sets of K_m x P_k that meet every column and whose
// last column is a fixed set of i rows. Only the size of the last column
// matters because every column is a clique. With v_k = (f(k,1) .. f(k,m)):
//
//   v_1 = (1, ..., 1),  v_k = T v_{k-1},
//   T[i][j] = C(m, j) - C(m - i, j)          (C(a, b) = 0 for b > a),
//   N_{m,k} = sum_i C(m, i) f(k, i),
//   N(K_m x P_n) = sum_k (n - k + 1) N_{m,k}.

#include <stdexcept>
#include <vector>

#include "gridsets/big_count.hpp"

namespace gridsets {

/// Pascal triangle rows 0..max_n.
class Binomials {
 public:
  explicit Binomials(int max_n) : rows_(static_cast<std::size_t>(max_n + 1)) {
    for (int a = 0; a <= max_n; ++a) {
      auto& row = rows_[static_cast<std::size_t>(a)];
      row.assign(static_cast<std::size_t>(a + 1), BigCount(1));
      for (int b = 1; b < a; ++b)
        row[static_cast<std::size_t>(b)] =
            rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
            rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
  }

  /// C(a, b); zero outside 0 <= b <= a.
  BigCount operator()(int a, int b) const {
    if (a < 0 || b < 0 || b > a) return 0;
    if (a >= static_cast<int>(rows_.size())) throw std::out_of_range("binomial table too small");
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  std::vector<std::vector<BigCount>> rows_;
};

/// Row/column indices are 1-based in at() to match the usual t_{ij} labels.
class TransferMatrix {
 public:
  explicit TransferMatrix(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("transfer matrix needs m >= 1");
    const Binomials c(m);
    entries_.resize(static_cast<std::size_t>(m * m));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) at_mut(i, j) = c(m, j) - c(m - i, j);
    weights_.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) weights_.push_back(c(m, j));
  }

  int m() const { return m_; }
  const BigCount& at(int i, int j) const {
    return entries_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))];
  }

  /// u = (C(m,1), ..., C(m,m)).
  const std::vector<BigCount>& weights() const { return weights_; }

  std::vector<BigCount> apply(const std::vector<BigCount>& v) const {
    std::vector<BigCount> out(static_cast<std::size_t>(m_));
    for (int i = 1; i <= m_; ++i) {
      BigCount acc = 0;
      for (int j = 1; j <= m_; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j - 1)];
      out[static_cast<std::size_t>(i - 1)] = std::move(acc);
    }
    return out;
  }

 private:
  BigCount& at_mut(int i, int j) { return entries_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))]; }

  int m_;
  std::vector<BigCount> entries_;
  std::vector<BigCount> weights_;
};

inline TransferMatrix build_transfer_matrix(int m) { return TransferMatrix(m); }

struct FVector {
  int k = 1;
  std::vector<BigCount> values;  // values[i-1] = f(k, i)

  const BigCount& operator[](int i) const { return values[static_cast<std::size_t>(i - 1)]; }
};

/// v_1 .. v_n for one m, plus the spanning totals N_{m,1} .. N_{m,n}.
class SpanningCounts {
 public:
  SpanningCounts(int m, int n) : matrix_(m) {
    if (n < 1) throw std::invalid_argument("column count must be >= 1");
    FVector v{1, std::vector<BigCount>(static_cast<std::size_t>(m), BigCount(1))};
    for (int k = 1; k <= n; ++k) {
      if (k > 1) v = FVector{k, matrix_.apply(v.values)};
      BigCount total = 0;
      for (int i = 1; i <= m; ++i) total += matrix_.weights()[static_cast<std::size_t>(i - 1)] * v[i];
      spanning_.push_back(std::move(total));
      vectors_.push_back(v);
    }
  }

  int m() const { return matrix_.m(); }
  int n() const { return static_cast<int>(vectors_.size()); }
  const TransferMatrix& matrix() const { return matrix_; }
  const FVector& f(int k) const { return vectors_.at(static_cast<std::size_t>(k - 1)); }
  const BigCount& spanning(int k) const { return spanning_.at(static_cast<std::size_t>(k - 1)); }

  /// N(K_m x P_n') for any n' <= n.
  BigCount total(int cols) const {
    BigCount sum = 0;
    for (int k = 1; k <= cols; ++k) sum += spanning(k) * (cols - k + 1);
    return sum;
  }

 private:
  TransferMatrix matrix_;
  std::vector<FVector> vectors_;
  std::vector<BigCount> spanning_;
};

inline FVector f_vector(int m, int k) { return SpanningCounts(m, k).f(k); }

/// N_{m,k}: connected sets of K_m x P_k meeting every column.
inline BigCount n_mk(int m, int k) { return SpanningCounts(m, k).spanning(k); }

/// N(K_m x P_n).
inline BigCount n_km_pn(int m, int n) { return SpanningCounts(m, n).total(n); }

}  // namespace gridsets
