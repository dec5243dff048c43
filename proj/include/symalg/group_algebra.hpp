#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "symalg/permutation.hpp"
#include "symalg/rational.hpp"

namespace symalg {

/// Sparse element of the group algebra Q[S_n]: a finite formal sum of
/// permutations of one fixed degree with rational coefficients. Zero
/// coefficients are pruned eagerly, so operator== is structural equality and
/// the term map iterates in lexicographic order of the one-line lists.
class GroupAlgebraElement {
public:
  static GroupAlgebraElement zero(int degree);
  static GroupAlgebraElement identity(int degree);
  static GroupAlgebraElement from_permutation(Permutation p, Rational coefficient = 1);

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& p) const;
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Accumulates c onto the coefficient of p, dropping the term if it cancels.
  void add_term(const Permutation& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);

  bool operator==(const GroupAlgebraElement&) const = default;

  std::string to_string() const;

private:
  explicit GroupAlgebraElement(int degree);

  int degree_ = 0;
  std::map<Permutation, Rational> terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
/// Convolution product: the coefficient of s is sum over p*q = s of a(p)b(q).
GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a);
GroupAlgebraElement operator-(GroupAlgebraElement a);

/// The involution a* = sum a(p) p^-1; an anti-automorphism of the algebra.
GroupAlgebraElement star(const GroupAlgebraElement& a);

/// Embedding Q[S_r] -> Q[S_{r+1}] extending every permutation by the fixed
/// point r+1; multiplicative and coefficient-preserving.
GroupAlgebraElement embed(const GroupAlgebraElement& a);

bool is_idempotent(const GroupAlgebraElement& a);

/// Coefficients of a as a dense vector of length n!, ordered by lex_rank.
RationalVector coefficient_vector(const GroupAlgebraElement& a);

/// Rank over Q of {p*a : p in S_n} viewed as vectors of length n!.
/// For a primitive idempotent this equals the dimension of the irreducible
/// representation carried by the generated minimal left ideal.
int left_ideal_dimension(const GroupAlgebraElement& a);

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& a);

}  // namespace symalg
