#pragma once

#include <utility>
#include <vector>

#include "symalg/rational.hpp"

namespace symalg {

/// Incremental exact row space over Q. Rows are absorbed into a normalized
/// row-echelon basis, so rank and membership queries stay cheap while rows
/// stream in.
class RowSpace {
public:
  explicit RowSpace(Eigen::Index cols);

  /// Returns true when the row was independent of the space so far.
  bool insert(RationalVector row);
  bool contains(RationalVector row) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  Eigen::Index cols() const { return cols_; }

private:
  void reduce(RationalVector& row) const;

  Eigen::Index cols_;
  // (pivot column, row with that pivot normalized to 1), sorted by column.
  std::vector<std::pair<Eigen::Index, RationalVector>> pivots_;
};

int rank(const RationalMatrix& m);

/// Solves A*X = B exactly for A of full column rank (tall A allowed).
/// Throws std::invalid_argument when the system is inconsistent.
RationalMatrix solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace symalg
