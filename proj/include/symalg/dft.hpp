#pragma once

#include <iosfwd>
#include <map>

#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"
#include "symalg/rational.hpp"

namespace symalg {

/// Wedderburn image of a group-algebra element of Q[S_n]: one square rational
/// block of size dimension(lambda) per partition lambda of n.
class FourierImage {
public:
  FourierImage(int n, std::map<Partition, RationalMatrix> blocks);

  /// All-zero blocks of the correct sizes.
  static FourierImage zeros(int n);
  /// Identity in every block; the image of the identity permutation.
  static FourierImage identity(int n);

  int n() const { return n_; }
  const std::map<Partition, RationalMatrix>& blocks() const { return blocks_; }
  const RationalMatrix& block(const Partition& lambda) const;
  RationalMatrix& block(const Partition& lambda);

  bool operator==(const FourierImage& other) const;

private:
  int n_;
  std::map<Partition, RationalMatrix> blocks_;
};

/// Blockwise product; dft is an algebra homomorphism onto these.
FourierImage operator*(const FourierImage& a, const FourierImage& b);

/// Matrix of p in Young's natural representation for the frame lambda, on the
/// basis of standard polytabloids ordered by lex_compare. Entries are
/// integers; trace equals character(lambda, cycle_type(p)).
RationalMatrix natural_representation(const Partition& lambda, const Permutation& p);

/// blocks[lambda] = sum over p of a(p) * natural_representation(lambda, p).
FourierImage dft(const GroupAlgebraElement& a);

/// Inverse transform via the trace formula
///   a(p) = (1/n!) * sum over lambda of d_lambda * tr(rho_lambda(p^-1) B_lambda).
GroupAlgebraElement inverse_dft(const FourierImage& image);

/// Component of a in the two-sided ideal of mu: zero every other block of
/// dft(a) and invert. Equals a * central_idempotent(mu).
GroupAlgebraElement extract_component(const GroupAlgebraElement& a, const Partition& mu);

std::ostream& operator<<(std::ostream& os, const FourierImage& image);

}  // namespace symalg
