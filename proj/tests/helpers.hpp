#pragma once

#include <cstdint>
#include <vector>

#include <fptate/fptate.hpp>

namespace testutil {

/// Independent rank oracle: textbook row reduction on a copy of the rows,
/// written without reference to the library's elimination code.
inline std::size_t naive_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // Scale the pivot row to 1 by brute-force inverse search.
    std::uint32_t inv = 1;
    while ((static_cast<std::uint64_t>(inv) * rows[rank][c]) % p != 1) ++inv;
    for (std::size_t j = 0; j < cols; ++j)
      rows[rank][j] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(rows[rank][j]) * inv) % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint32_t f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint64_t sub = (static_cast<std::uint64_t>(f) * rows[rank][j]) % p;
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

/// True when fn() throws fptate::error with exactly this code.
template <class F>
inline bool raises(F&& fn, fptate::errc code) {
  try {
    fn();
  } catch (const fptate::error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

inline std::vector<std::vector<std::uint32_t>> to_rows(const fptate::FpMatrix& m) {
  std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  return rows;
}

} // namespace testutil
