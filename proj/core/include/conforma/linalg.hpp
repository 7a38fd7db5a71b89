#pragma once

#include <optional>
#include <vector>

#include "conforma/rational.hpp"

namespace conforma {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Reduced row echelon form in place; returns the pivot column of each row
// kept (rank = pivots.size()). Deterministic: first nonzero column pivoting.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Basis of the right nullspace of m (columns = unknowns).
std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols);

// Particular solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMat& m, const RatVec& b);

// True iff v lies in the row span of m.
bool in_row_span(const RatMat& m, const RatVec& v);

// Online Gaussian elimination: keeps an rref basis of the rows fed so far.
// Rows that reduce to zero are dropped. Deterministic.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  // Returns true when the row added a new dimension.
  bool add_row(RatVec row);
  std::size_t rank() const { return rows_.size(); }
  const RatMat& rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool contains(RatVec row) const;  // row in current span

 private:
  std::size_t cols_;
  RatMat rows_;                       // rref rows
  std::vector<std::size_t> pivots_;  // pivot column per row
};

}  // namespace conforma
