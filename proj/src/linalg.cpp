#include "symalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace symalg {

RowSpace::RowSpace(Eigen::Index cols) : cols_(cols) {}

void RowSpace::reduce(RationalVector& row) const {
  for (const auto& [col, pivot_row] : pivots_) {
    if (row(col) != 0) {
      row -= row(col) * pivot_row;
    }
  }
}

bool RowSpace::insert(RationalVector row) {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: column count mismatch");
  reduce(row);
  for (Eigen::Index c = 0; c < cols_; ++c) {
    if (row(c) != 0) {
      row /= row(c);
      const auto pos = std::lower_bound(
          pivots_.begin(), pivots_.end(), c,
          [](const auto& pivot, Eigen::Index col) { return pivot.first < col; });
      pivots_.insert(pos, {c, std::move(row)});
      return true;
    }
  }
  return false;
}

bool RowSpace::contains(RationalVector row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: column count mismatch");
  reduce(row);
  for (Eigen::Index c = 0; c < cols_; ++c) {
    if (row(c) != 0) return false;
  }
  return true;
}

int rank(const RationalMatrix& m) {
  RowSpace space(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) space.insert(m.row(i).transpose());
  return space.rank();
}

RationalMatrix solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const Eigen::Index rows = a.rows();
  const Eigen::Index unknowns = a.cols();
  RationalMatrix work(rows, unknowns + b.cols());
  work << a, b;

  for (Eigen::Index col = 0; col < unknowns; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < rows; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("solve: matrix does not have full column rank");
    if (pivot != col) work.row(pivot).swap(work.row(col));
    work.row(col) /= work(col, col);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != col && work(r, col) != 0) {
        work.row(r) -= work(r, col) * work.row(col);
      }
    }
  }
  // Rows beyond the pivots must have cancelled completely.
  for (Eigen::Index r = unknowns; r < rows; ++r) {
    for (Eigen::Index c = unknowns; c < work.cols(); ++c) {
      if (work(r, c) != 0) throw std::invalid_argument("solve: inconsistent system");
    }
  }
  return work.block(0, unknowns, unknowns, b.cols());
}

}  // namespace symalg
