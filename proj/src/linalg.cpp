#include "depol/linalg.hpp"

namespace depol {

Rref rref(Mat m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = m(r, c).inverse();
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return Rref{std::move(m), std::move(pivot_cols)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const int cols = static_cast<int>(m.cols());
  Rref e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = Vec::Zero(cols);
    v(c) = Rational(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v(e.pivot_cols[r]) = -e.reduced(static_cast<int>(r), c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ImageBasis image_basis(const Mat& m) {
  Rref e = rref(m);
  ImageBasis out;
  for (int c : e.pivot_cols) {
    out.columns.push_back(c + 1);
    out.vectors.push_back(m.col(c));
  }
  return out;
}

std::optional<LinearSolution> solve(const Mat& m, const Vec& rhs) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rhs.rows() != rows) throw std::invalid_argument("solve: rhs length mismatch");

  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = rhs;
  Rref e = rref(std::move(aug));

  // A pivot in the augmented column means 0 = 1 after elimination.
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;

  Vec particular = Vec::Zero(cols);
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    particular(e.pivot_cols[r]) = e.reduced(static_cast<int>(r), cols);
  }
  return LinearSolution{std::move(particular), kernel_basis(m)};
}

std::optional<Vec> inconsistency_certificate(const Mat& m, const Vec& rhs) {
  // y ranges over the left null space of m; pick the first basis vector with
  // y . rhs != 0. Deterministic because kernel_basis is.
  for (const Vec& y : kernel_basis(m.transpose())) {
    Rational dot(0);
    for (int i = 0; i < rhs.rows(); ++i) dot += y(i) * rhs(i);
    if (!dot.is_zero()) return y;
  }
  return std::nullopt;
}

Mat row_space_echelon(const Mat& m) {
  Rref e = rref(m);
  const int r = static_cast<int>(e.pivot_cols.size());
  Mat out(r, m.cols());
  for (int i = 0; i < r; ++i) out.row(i) = e.reduced.row(i);
  return out;
}

bool same_row_space(const Mat& a, const Mat& b) {
  Mat ea = row_space_echelon(a);
  Mat eb = row_space_echelon(b);
  if (ea.rows() != eb.rows() || ea.cols() != eb.cols()) return false;
  return ea == eb;
}

bool in_row_space(const Mat& echelon, const Vec& v) {
  Mat stacked(echelon.rows() + 1, echelon.cols());
  stacked.topRows(echelon.rows()) = echelon;
  stacked.row(echelon.rows()) = v.transpose();
  return rank(stacked) == echelon.rows();
}

}  // namespace depol
