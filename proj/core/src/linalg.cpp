#include "conforma/linalg.hpp"

#include <algorithm>

namespace conforma {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> nullspace(const RatMat& m_in, std::size_t cols) {
  RatMat m = m_in;
  for (auto& r : m) r.resize(cols, Rat(0));
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& m_in, const RatVec& b) {
  RatMat m = m_in;
  std::size_t cols = 0;
  for (const auto& r : m) cols = std::max(cols, r.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i].resize(cols, Rat(0));
    m[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == cols) return std::nullopt;  // 0 = 1 row
  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

bool in_row_span(const RatMat& m, const RatVec& v) {
  RowReducer red(v.size());
  for (const auto& r : m) red.add_row(r);
  return red.contains(v);
}

bool RowReducer::add_row(RatVec row) {
  row.resize(cols_, Rat(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row[pivots_[r]] == 0) continue;
    Rat f = row[pivots_[r]];
    for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
  }
  std::size_t piv = 0;
  while (piv < cols_ && row[piv] == 0) ++piv;
  if (piv == cols_) return false;
  Rat inv = Rat(1) / row[piv];
  for (std::size_t j = piv; j < cols_; ++j) row[j] *= inv;
  // Reduce existing rows against the new pivot to keep rref form.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][piv] == 0) continue;
    Rat f = rows_[r][piv];
    for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * row[j];
  }
  // Insert sorted by pivot column for determinism.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  return true;
}

bool RowReducer::contains(RatVec row) const {
  row.resize(cols_, Rat(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row[pivots_[r]] == 0) continue;
    Rat f = row[pivots_[r]];
    for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
  }
  for (const auto& x : row)
    if (x != 0) return false;
  return true;
}

}  // namespace conforma
