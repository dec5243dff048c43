#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "symalg/partition.hpp"

namespace symalg {

/// Permutation of {1..n} in one-line form: images()[i-1] = p(i). The one-line
/// list is also the canonical external (JSON) form, e.g. [2,3,1]. Values are
/// immutable after construction.
class Permutation {
public:
  /// Validates that the list is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (i j) in S_n.
  static Permutation transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  /// "[2,3,1]"
  std::string to_string() const;

private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
};

/// Composition (p*q)(i) = p(q(i)); the group-algebra convolution and every
/// action in this library inherit this convention.
Permutation operator*(const Permutation& p, const Permutation& q);

int sign(const Permutation& p);

/// Weakly decreasing cycle lengths; sums to the degree.
Partition cycle_type(const Permutation& p);

/// All n! permutations in lexicographic order of their one-line lists.
std::vector<Permutation> all_permutations(int n);

/// Position of p in the all_permutations(n) ordering, 0-based.
long long lex_rank(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace symalg
