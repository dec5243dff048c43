#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "symalg/branching.hpp"
#include "symalg/group_algebra.hpp"
#include "symalg/rational.hpp"

namespace symalg {

/// Dense order-r tensor over Q^d, entries stored row-major with 1-based
/// multi-indices. Hard caps order <= 5, dim <= 6 keep everything desk-scale.
class DenseTensor {
public:
  DenseTensor(int order, int dim);  // zero-filled

  int order() const { return order_; }
  int dim() const { return dim_; }

  const Rational& at(std::span<const int> index) const;
  Rational& at(std::span<const int> index);

  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  bool is_zero() const;

  /// Multilinear evaluation T(v_1, ..., v_r) for coordinate vectors in Q^d.
  Rational evaluate(std::span<const RationalVector> vectors) const;

  bool operator==(const DenseTensor&) const = default;

private:
  int order_;
  int dim_;
  std::vector<Rational> entries_;
};

DenseTensor operator+(DenseTensor a, const DenseTensor& b);
DenseTensor operator-(DenseTensor a, const DenseTensor& b);
DenseTensor operator*(const Rational& c, DenseTensor t);

/// Symmetry-operator action: (aT)_{i_1..i_r} = sum over p of
/// a(p) T_{i_{p(1)}..i_{p(r)}}. A left action: apply(a*b, T) =
/// apply(a, apply(b, T)).
DenseTensor apply(const GroupAlgebraElement& a, const DenseTensor& t);

/// Group-algebra element induced by a tensor and an r-tuple of vectors:
/// T_b = sum over p of T(v_{p(1)}, ..., v_{p(r)}) p. Satisfies
/// (aT)_b = T_b * star(a).
GroupAlgebraElement group_element_of(const DenseTensor& t, const std::vector<RationalVector>& b);

/// i-th standard basis vector of Q^d, 1-based.
RationalVector basis_vector(int dim, int i);

DenseTensor symmetrize(const DenseTensor& t);
DenseTensor antisymmetrize(const DenseTensor& t);

DenseTensor tensor_product(const DenseTensor& x, const DenseTensor& y);

/// Seeded random tensor with integer entries in [-9, 9].
DenseTensor random_tensor(int order, int dim, std::uint64_t seed);

/// Stand-in for the covariant derivative of a random (anti)symmetric field:
/// a random order-(r+1) tensor projected with star(subgroup_symmetrizer).
/// The result W satisfies apply(star(e), W) = W for the matching e.
DenseTensor nabla_surrogate(Kind kind, int r, int d, std::uint64_t seed);

/// apply(star(y), first x second) for y the Young symmetrizer of the
/// standard tableau [[1,3,5],[2,4]]; orders must be 2+3 or 3+2.
DenseTensor build_cdc_candidate(const DenseTensor& first, const DenseTensor& second);

/// Exact verdicts for the five order-5 curvature identities: antisymmetry in
/// the first and in the second index pair, pair interchange, and the two
/// cyclic (Bianchi-type) sums.
struct CdcReport {
  bool antisymmetric_first_pair = false;
  bool antisymmetric_second_pair = false;
  bool pair_interchange = false;
  bool first_bianchi = false;
  bool second_bianchi = false;

  bool all_pass() const {
    return antisymmetric_first_pair && antisymmetric_second_pair && pair_interchange &&
           first_bianchi && second_bianchi;
  }
};

CdcReport verify_cdc_identities(const DenseTensor& t);

std::ostream& operator<<(std::ostream& os, const DenseTensor& t);

}  // namespace symalg
