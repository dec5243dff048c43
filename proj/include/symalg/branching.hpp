#pragma once

#include <map>
#include <vector>

#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"

namespace symalg {

enum class Kind { symmetric, alternating };

/// Subgroup (anti)symmetrizer in Q[S_{r+1}]: (1/r!) sum over the permutations
/// fixing r+1, signed for Kind::alternating. Idempotent and star-invariant.
GroupAlgebraElement subgroup_symmetrizer(int r, Kind kind);

/// Full-group (anti)symmetrizer (1/(r+1)!) sum over S_{r+1}; the centrally
/// primitive idempotent of the one-row (resp. one-column) frame.
GroupAlgebraElement full_symmetrizer(int r, Kind kind);

/// h = subgroup_symmetrizer - full_symmetrizer: the primitive idempotent of
/// the frame (r,1) for Kind::symmetric resp. (2,1^{r-1}) for
/// Kind::alternating; orthogonal to the full symmetrizer.
GroupAlgebraElement h_component(int r, Kind kind);

/// Splitting of an embedded primitive idempotent over the one-box extensions
/// of its frame. Components that vanish are kept as explicit zeros so the sum
/// invariant is checkable without special cases.
struct BranchingDecomposition {
  GroupAlgebraElement source;  // embed(e), degree r+1
  std::vector<Partition> frames;
  std::map<Partition, GroupAlgebraElement> components;
};

/// Requires e idempotent with left_ideal_dimension(e) == dimension(lambda).
/// components[mu] = extract_component(embed(e), mu) = embed(e) * e_mu;
/// the components are pairwise orthogonal, idempotent or zero, and sum to
/// embed(e).
BranchingDecomposition decompose(const GroupAlgebraElement& e, const Partition& lambda);

}  // namespace symalg
