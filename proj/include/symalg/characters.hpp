#pragma once

#include <map>
#include <vector>

#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"

namespace symalg {

/// Irreducible character of S_n indexed by lambda, evaluated on the conjugacy
/// class of the given cycle type. Computed by the Murnaghan-Nakayama border
/// strip recursion in exact integer arithmetic; memoized.
long long character(const Partition& lambda, const Partition& cycle_type);

/// Full character table of S_n: rows and columns both indexed by the
/// partitions of n in partitions_of order. Built eagerly; immutable after
/// construction.
class CharacterTable {
public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  long long value(const Partition& lambda, const Partition& ct) const;

private:
  int n_;
  std::vector<Partition> partitions_;
  std::map<std::pair<Partition, Partition>, long long> values_;
};

/// The centrally primitive idempotent
///   e_lambda = (chi_lambda(id)/n!) * sum over p of chi_lambda(p) p^-1.
/// These resolve the identity and are pairwise orthogonal.
GroupAlgebraElement central_idempotent(const Partition& lambda);

}  // namespace symalg
