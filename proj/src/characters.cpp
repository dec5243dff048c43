#include "symalg/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "symalg/config.hpp"
#include "symalg/young.hpp"

namespace symalg {

namespace {

// Border-strip recursion on beta numbers b_i = lambda_i + (m-1-i). Removing a
// strip of length k replaces some b_i by b_i - k; the sign is (-1)^crossed
// where crossed counts the betas strictly between the old and new value.
long long murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& cycle_type) {
  if (cycle_type.empty()) return 1;

  const int k = cycle_type.front();
  const std::vector<int> rest(cycle_type.begin() + 1, cycle_type.end());
  const int m = static_cast<int>(lambda.size());

  std::vector<int> betas(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    betas[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (m - 1 - i);
  }

  long long total = 0;
  for (int i = 0; i < m; ++i) {
    const int target = betas[static_cast<std::size_t>(i)] - k;
    if (target < 0) continue;
    bool collision = false;
    int crossed = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const int b = betas[static_cast<std::size_t>(j)];
      if (b == target) collision = true;
      if (b > target && b < betas[static_cast<std::size_t>(i)]) ++crossed;
    }
    if (collision) continue;

    std::vector<int> new_betas = betas;
    new_betas[static_cast<std::size_t>(i)] = target;
    std::sort(new_betas.begin(), new_betas.end(), std::greater<int>());
    std::vector<int> reduced;
    const int mm = static_cast<int>(new_betas.size());
    for (int j = 0; j < mm; ++j) {
      const int part = new_betas[static_cast<std::size_t>(j)] - (mm - 1 - j);
      if (part > 0) reduced.push_back(part);
    }
    const long long sub = murnaghan_nakayama(reduced, rest);
    total += (crossed % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& ct) {
  if (lambda.n() != ct.n()) {
    throw std::invalid_argument("character: partitions must have the same size");
  }
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static std::map<Key, long long> memo;
  static std::mutex memo_mutex;

  const Key key{lambda.parts(), ct.parts()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const long long value = murnaghan_nakayama(lambda.parts(), ct.parts());
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, value);
  return value;
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(partitions_of(n)) {
  for (const Partition& lambda : partitions_) {
    for (const Partition& ct : partitions_) {
      values_.emplace(std::make_pair(lambda, ct), character(lambda, ct));
    }
  }
}

long long CharacterTable::value(const Partition& lambda, const Partition& ct) const {
  const auto it = values_.find({lambda, ct});
  if (it == values_.end()) throw std::invalid_argument("CharacterTable: unknown partition pair");
  return it->second;
}

GroupAlgebraElement central_idempotent(const Partition& lambda) {
  const int n = lambda.n();
  require_degree(n, "central_idempotent");

  std::map<Partition, long long> by_class;
  for (const Partition& ct : partitions_of(n)) by_class.emplace(ct, character(lambda, ct));

  const Rational lead =
      Rational(character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) /
      Rational(factorial(n));
  GroupAlgebraElement result = GroupAlgebraElement::zero(n);
  for (const Permutation& p : all_permutations(n)) {
    const long long chi = by_class.at(cycle_type(p));
    if (chi != 0) result.add_term(p.inverse(), lead * chi);
  }
  return result;
}

}  // namespace symalg
