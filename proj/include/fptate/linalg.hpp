#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "fptate/fp.hpp"

namespace fptate {

/// Dense matrix over F_p, row-major, entries reduced in [0, p).
class FpMatrix {
public:
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMatrix from_triplets(std::size_t rows, std::size_t cols,
                                const std::vector<std::tuple<std::size_t, std::size_t, long long>>& t,
                                const PrimeField& f) {
    FpMatrix m(rows, cols);
    for (const auto& [r, c, v] : t) m.at(r, c) = f.add(m.at(r, c), f.reduce(v));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (std::uint32_t v : a_)
      if (v != 0) return false;
    return true;
  }

private:
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;

  bool operator==(const RankNullity&) const = default;
};

/// Exact rank and nullity by Gaussian elimination. rank + nullity == cols;
/// the empty matrix has rank 0.
inline RankNullity rank_nullity(FpMatrix m, const PrimeField& f) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    std::uint32_t inv = f.inv(m.at(rank, c));
    for (std::size_t k = c; k < cols; ++k) m.at(rank, k) = f.mul(m.at(rank, k), inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t fac = m.at(r, c);
      if (fac == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        m.at(r, k) = f.sub(m.at(r, k), f.mul(fac, m.at(rank, k)));
    }
    ++rank;
  }
  return {rank, cols - rank};
}

inline FpMatrix matmul(const FpMatrix& a, const FpMatrix& b, const PrimeField& f) {
  FpMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
    }
  return out;
}

/// Sparse matrix as rows of (column, value) pairs sorted by column. Used for
/// the very sparse differential and bar-boundary matrices, where dense
/// elimination would waste almost every cycle.
class SparseFpMatrix {
public:
  using Row = std::vector<std::pair<std::size_t, std::uint32_t>>;

  SparseFpMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Entries must arrive with distinct columns per row; sorted on demand.
  void set_row(std::size_t r, Row row) {
    std::sort(row.begin(), row.end());
    rows_[r] = std::move(row);
  }

  const Row& row(std::size_t r) const { return rows_[r]; }

  FpMatrix to_dense() const {
    FpMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) m.at(r, c) = v;
    return m;
  }

private:
  std::size_t cols_;
  std::vector<Row> rows_;

  friend RankNullity rank_nullity(SparseFpMatrix, const PrimeField&);
};

/// Elimination on sparse rows; pivots are chosen on the shortest remaining
/// row (ties by index) to limit fill-in. Exact, deterministic.
inline RankNullity rank_nullity(SparseFpMatrix m, const PrimeField& f) {
  auto& rows = m.rows_;
  const std::size_t n = rows.size();
  std::vector<bool> done(n, false);
  std::size_t rank = 0;
  for (;;) {
    std::size_t best = n;
    for (std::size_t r = 0; r < n; ++r)
      if (!done[r] && !rows[r].empty() && (best == n || rows[r].size() < rows[best].size())) best = r;
    if (best == n) break;
    done[best] = true;
    ++rank;
    SparseFpMatrix::Row& prow = rows[best];
    const std::size_t pc = prow.front().first;
    std::uint32_t inv = f.inv(prow.front().second);
    for (auto& [c, v] : prow) v = f.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || rows[r].empty()) continue;
      std::uint32_t fac = 0;
      for (const auto& [c, v] : rows[r])
        if (c == pc) {
          fac = v;
          break;
        }
      if (fac == 0) continue;
      SparseFpMatrix::Row merged;
      merged.reserve(rows[r].size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < rows[r].size() || j < prow.size()) {
        if (j == prow.size() || (i < rows[r].size() && rows[r][i].first < prow[j].first)) {
          merged.push_back(rows[r][i++]);
        } else if (i == rows[r].size() || prow[j].first < rows[r][i].first) {
          std::uint32_t v = f.neg(f.mul(fac, prow[j].second));
          if (v != 0) merged.push_back({prow[j].first, v});
          ++j;
        } else {
          std::uint32_t v = f.sub(rows[r][i].second, f.mul(fac, prow[j].second));
          if (v != 0) merged.push_back({rows[r][i].first, v});
          ++i;
          ++j;
        }
      }
      rows[r] = std::move(merged);
    }
  }
  return {rank, m.cols() - rank};
}

} // namespace fptate
