#include "symalg/branching.hpp"

#include <stdexcept>

#include "symalg/characters.hpp"
#include "symalg/config.hpp"
#include "symalg/dft.hpp"
#include "symalg/young.hpp"

namespace symalg {

GroupAlgebraElement subgroup_symmetrizer(int r, Kind kind) {
  if (r < 2) throw std::invalid_argument("subgroup_symmetrizer: r must be at least 2");
  require_degree(r + 1, "subgroup_symmetrizer");
  const Rational scale = Rational(1) / Rational(factorial(r));
  GroupAlgebraElement result = GroupAlgebraElement::zero(r + 1);
  for (const Permutation& p : all_permutations(r)) {
    std::vector<int> images = p.images();
    images.push_back(r + 1);
    Permutation extended(std::move(images));
    result.add_term(extended, kind == Kind::alternating ? scale * sign(extended) : scale);
  }
  return result;
}

GroupAlgebraElement full_symmetrizer(int r, Kind kind) {
  if (r < 2) throw std::invalid_argument("full_symmetrizer: r must be at least 2");
  require_degree(r + 1, "full_symmetrizer");
  const Rational scale = Rational(1) / Rational(factorial(r + 1));
  GroupAlgebraElement result = GroupAlgebraElement::zero(r + 1);
  for (const Permutation& p : all_permutations(r + 1)) {
    result.add_term(p, kind == Kind::alternating ? scale * sign(p) : scale);
  }
  return result;
}

GroupAlgebraElement h_component(int r, Kind kind) {
  return subgroup_symmetrizer(r, kind) - full_symmetrizer(r, kind);
}

BranchingDecomposition decompose(const GroupAlgebraElement& e, const Partition& lambda) {
  if (lambda.n() != e.degree()) {
    throw std::invalid_argument("decompose: frame size does not match the element degree");
  }
  require_degree(e.degree() + 1, "decompose");
  if (!is_idempotent(e)) throw std::invalid_argument("decompose: element is not idempotent");
  if (left_ideal_dimension(e) != dimension(lambda)) {
    throw std::invalid_argument(
        "decompose: left ideal dimension does not match dimension(" + lambda.to_string() +
        "); the element is not a primitive idempotent of that frame");
  }

  BranchingDecomposition out{embed(e), add_one_box(lambda), {}};
  for (const Partition& mu : out.frames) {
    out.components.emplace(mu, extract_component(out.source, mu));
  }
  return out;
}

}  // namespace symalg
