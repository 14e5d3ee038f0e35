#include "curvekit/linalg.hpp"

namespace curvekit {

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Rat inv = m(r, c).inverse();
    for (int j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (int j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatMatrix nullspace(RatMatrix m) {
  const int cols = static_cast<int>(m.cols());
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMatrix out(cols, cols - static_cast<int>(pivots.size()));
  out.setConstant(Rat(0));
  int k = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, k) = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -m(static_cast<int>(i), f);
    ++k;
  }
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  RatMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols);
  x.setConstant(Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<int>(i), cols);
  return x;
}

Rat determinant(const RatMatrix& m) {
  std::vector<std::vector<Rat>> rows(m.rows(), std::vector<Rat>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return bareiss_determinant(std::move(rows));
}

std::optional<RatMatrix3> inverse(const RatMatrix3& m) {
  RatMatrix aug(3, 6);
  aug.setConstant(Rat(0));
  aug.leftCols(3) = m;
  for (int i = 0; i < 3; ++i) aug(i, 3 + i) = Rat(1);
  const auto pivots = rref(aug);
  if (pivots.size() < 3 || pivots[2] != 2) return std::nullopt;
  RatMatrix3 inv = aug.rightCols(3);
  return inv;
}

RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  m.setConstant(Rat(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols && j < static_cast<int>(rows[i].size()); ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

}  // namespace curvekit
