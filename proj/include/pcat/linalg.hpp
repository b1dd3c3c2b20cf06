#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "pcat/field.hpp"

namespace pcat {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct RowEchelon {
  Mat<S> reduced;            // reduced row echelon form
  std::vector<int> pivots;   // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination over an exact field.
template <class S>
RowEchelon<S> row_echelon(Mat<S> a) {
  RowEchelon<S> out;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S inv = S(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
int rank(const Mat<S>& a) {
  return row_echelon<S>(a).rank();
}

enum class SolveStatus { Unique, NoSolution, Multiple };

template <class S>
struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  Vec<S> x;  // one solution when status != NoSolution
};

/// Solves a x = b exactly, reporting whether the solution is unique.
template <class S>
SolveResult<S> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = row_echelon<S>(aug);
  SolveResult<S> out;
  const int n = static_cast<int>(a.cols());
  if (!e.pivots.empty() && e.pivots.back() == n) return out;
  out.status = e.rank() == n ? SolveStatus::Unique : SolveStatus::Multiple;
  out.x = Vec<S>::Zero(n);
  for (int i = 0; i < e.rank(); ++i) out.x(e.pivots[i]) = e.reduced(i, n);
  return out;
}

/// Columns spanning the null space of a.
template <class S>
Mat<S> kernel_basis(const Mat<S>& a) {
  const auto e = row_echelon<S>(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivots) is_pivot[c] = true;
  Mat<S> k = Mat<S>::Zero(n, n - e.rank());
  Eigen::Index col = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, col) = S(1);
    for (int i = 0; i < e.rank(); ++i) k(e.pivots[i], col) = -e.reduced(i, free);
    ++col;
  }
  return k;
}

/// Integer matrix cast into an exact field.
template <class S, class Int>
Mat<S> cast_matrix(const Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>& m) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = S(static_cast<long>(m(i, j)));
  return out;
}

}  // namespace pcat
