#include "zastava/linsolve.hpp"

#include <stdexcept>

namespace zastava {

SolveResult solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const std::size_t rows = A.size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

  std::vector<std::size_t> pivot_row_of_col(cols, static_cast<std::size_t>(-1));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(b[piv], b[rank]);
    const Rat inv = Rat(1) / A[rank][col];
    for (std::size_t c = col; c < cols; ++c) A[rank][c] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      const Rat factor = A[r][col];
      for (std::size_t c = col; c < cols; ++c) A[r][c] -= factor * A[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return {SolveStatus::inconsistent, {}};

  if (rank < cols) return {SolveStatus::underdetermined, {}};

  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t col = 0; col < cols; ++col) x[col] = b[pivot_row_of_col[col]];
  return {SolveStatus::unique, std::move(x)};
}

}  // namespace zastava
