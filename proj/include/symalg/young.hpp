#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"
#include "symalg/permutation.hpp"

namespace symalg {

/// Bijective filling of a Young frame with 1..n. Identity is by rows: two
/// tableaux are equal iff frames and all entries coincide.
class Tableau {
public:
  Tableau(Partition frame, std::vector<std::vector<int>> rows);

  const Partition& frame() const { return frame_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return frame_.n(); }
  int entry(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

  /// Every row and every column strictly increasing.
  bool is_standard() const;

  /// (row, col), 0-based, of a value in 1..n.
  std::pair<int, int> position_of(int value) const;

  // Structural order (frame, then rows); lex_compare below is the
  // domain-meaningful order on fillings of one frame.
  auto operator<=>(const Tableau&) const = default;

  /// "[[1,3],[2]]"
  std::string to_string() const;

private:
  Partition frame_;
  std::vector<std::vector<int>> rows_;
};

/// Total order on fillings of one frame: simultaneous row-major scan, first
/// position with different entries decides, larger entry means greater
/// tableau. Frames must match.
std::strong_ordering lex_compare(const Tableau& a, const Tableau& b);

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// All partitions of n+1 whose frame contains the given frame (one added
/// box); no duplicates, in the order the boxes are tried top to bottom.
std::vector<Partition> add_one_box(const Partition& lambda);

/// Standard tableaux of the frame, ascending by lex_compare.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// All n! fillings, lexicographic by row-major entry sequence.
std::vector<Tableau> all_tableaux(const Partition& lambda);

/// Number of standard tableaux, by the hook length formula.
long long dimension(const Partition& lambda);

/// All permutations preserving each row of t setwise (size = product of row
/// factorials); deterministic order.
std::vector<Permutation> horizontal_group(const Tableau& t);

/// All permutations preserving each column of t setwise.
std::vector<Permutation> vertical_group(const Tableau& t);

/// y_t = sum over p in H_t, q in V_t of sign(q) p*q.
GroupAlgebraElement young_symmetrizer(const Tableau& t);

/// e_t = (d_lambda / n!) y_t; the unique scalar multiple of y_t that is
/// idempotent (y_t^2 = (n!/d_lambda) y_t).
GroupAlgebraElement normalized_idempotent(const Tableau& t);

/// Entry-wise relabeling: (p o t)(box) = p(t(box)). Satisfies
/// young_symmetrizer(relabeled(p, t)) = p * y_t * p^-1.
Tableau relabeled(const Permutation& p, const Tableau& t);

std::ostream& operator<<(std::ostream& os, const Tableau& t);

}  // namespace symalg
