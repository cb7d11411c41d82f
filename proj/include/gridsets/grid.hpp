#pragma once

// Implicit K_m x P_n and P_m x P_n graphs plus component counting on vertex
// subsets. Rows and columns are 0-based internally; vertex (i, j) is row i of
// column j.

#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridsets {

/// Rows selected in one column, bit i = row i.
using ColumnMask = std::uint32_t;

inline constexpr int kMaxRows = 31;

/// A request beyond what an exhaustive or state-space method can afford.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family {
  CompleteColumn,  // K_m x P_n: every column is a clique
  PathColumn,      // P_m x P_n: the (m x n)-grid
};

inline std::string_view family_name(Family f) {
  return f == Family::CompleteColumn ? "k" : "grid";
}

inline Family parse_family(std::string_view s) {
  if (s == "k") return Family::CompleteColumn;
  if (s == "grid") return Family::PathColumn;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected k or grid)");
}

struct GridSpec {
  int m = 1;
  int n = 1;
  Family family = Family::PathColumn;

  void validate() const {
    if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (m > kMaxRows) throw std::invalid_argument("at most 31 rows per column are supported");
  }

  int vertex_count() const { return m * n; }
  ColumnMask full_column() const { return low_bits(m); }

  static constexpr ColumnMask low_bits(int m) {
    return m >= 32 ? ~ColumnMask{0} : (ColumnMask{1} << m) - 1;
  }

  /// Adjacency of (i1, j1) and (i2, j2) under this family.
  bool adjacent(int i1, int j1, int i2, int j2) const {
    if (j1 == j2) {
      if (i1 == i2) return false;
      return family == Family::CompleteColumn || (i1 - i2 == 1 || i2 - i1 == 1);
    }
    return i1 == i2 && (j1 - j2 == 1 || j2 - j1 == 1);
  }
};

/// Reverse the low m bits (row i -> row m-1-i).
inline ColumnMask reflect_rows(ColumnMask mask, int m) {
  ColumnMask out = 0;
  for (int i = 0; i < m; ++i)
    if (mask >> i & 1u) out |= ColumnMask{1} << (m - 1 - i);
  return out;
}

inline int popcount(ColumnMask mask) { return std::popcount(mask); }

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::size_t n) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    size_.assign(n, 1);
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

/// Reusable scratch for component counting over many subsets of one grid.
class ComponentCounter {
 public:
  explicit ComponentCounter(GridSpec spec)
      : spec_((spec.validate(), spec)), uf_(static_cast<std::size_t>(spec.vertex_count())) {}

  const GridSpec& spec() const { return spec_; }

  /// Number of components of the subgraph induced by `masks` (one mask per
  /// column, masks.size() == n). Throws on bits above row m.
  int count(std::span<const ColumnMask> masks) {
    check(masks);
    return count_unchecked(masks);
  }

  int count_unchecked(std::span<const ColumnMask> masks) {
    const int m = spec_.m;
    uf_.reset(static_cast<std::size_t>(spec_.vertex_count()));
    int vertices = 0;
    int merges = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const ColumnMask col = masks[j];
      if (col == 0) continue;
      const int base = static_cast<int>(j) * m;
      vertices += popcount(col);
      if (spec_.family == Family::CompleteColumn) {
        const int first = std::countr_zero(col);
        for (ColumnMask rest = col & (col - 1); rest; rest &= rest - 1)
          merges += uf_.unite(base + first, base + std::countr_zero(rest));
      } else {
        for (ColumnMask pairs = col & (col >> 1); pairs; pairs &= pairs - 1) {
          const int i = std::countr_zero(pairs);
          merges += uf_.unite(base + i, base + i + 1);
        }
      }
      if (j + 1 < masks.size()) {
        for (ColumnMask across = col & masks[j + 1]; across; across &= across - 1) {
          const int i = std::countr_zero(across);
          merges += uf_.unite(base + i, base + m + i);
        }
      }
    }
    return vertices - merges;
  }

  /// Component id (a representative vertex index) of every selected vertex,
  /// valid after the last count() call.
  int representative(int row, int col) { return uf_.find(col * spec_.m + row); }

 private:
  void check(std::span<const ColumnMask> masks) const {
    if (static_cast<int>(masks.size()) != spec_.n)
      throw std::invalid_argument("vertex set must hold exactly one mask per column");
    for (ColumnMask c : masks)
      if (c & ~spec_.full_column()) throw std::invalid_argument("column mask has bits above row m");
  }

  GridSpec spec_;
  UnionFind uf_;
};

/// A vertex subset stored as one ColumnMask per column.
struct VertexSet {
  std::vector<ColumnMask> masks;

  bool touches_every_column() const {
    for (ColumnMask c : masks)
      if (c == 0) return false;
    return true;
  }
  bool empty() const {
    for (ColumnMask c : masks)
      if (c != 0) return false;
    return true;
  }
};

inline int component_count(const GridSpec& spec, std::span<const ColumnMask> masks) {
  ComponentCounter counter(spec);
  return counter.count(masks);
}

inline int component_count(const GridSpec& spec, const VertexSet& set) {
  return component_count(spec, std::span<const ColumnMask>(set.masks));
}

inline bool is_connected(const GridSpec& spec, std::span<const ColumnMask> masks) {
  return component_count(spec, masks) == 1;
}

inline bool is_connected(const GridSpec& spec, const VertexSet& set) {
  return component_count(spec, set) == 1;
}

/// Components of a single path column: maximal runs of consecutive rows.
inline int column_runs(ColumnMask mask) { return popcount(mask & ~(mask << 1)); }

}  // namespace gridsets
