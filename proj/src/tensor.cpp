#include "symalg/tensor.hpp"

#include <ostream>
#include <stdexcept>

#include "symalg/config.hpp"
#include "symalg/rng.hpp"
#include "symalg/young.hpp"

namespace symalg {

namespace {

constexpr int kMaxOrder = 5;
constexpr int kMaxDim = 6;

std::size_t power(int base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= static_cast<std::size_t>(base);
  return result;
}

// Row-major offset of a 1-based multi-index.
std::size_t offset_of(int order, int dim, std::span<const int> index) {
  std::size_t offset = 0;
  for (int k = 0; k < order; ++k) {
    offset = offset * static_cast<std::size_t>(dim) + static_cast<std::size_t>(index[static_cast<std::size_t>(k)] - 1);
  }
  return offset;
}

bool next_index(std::vector<int>& index, int dim) {
  for (auto it = index.rbegin(); it != index.rend(); ++it) {
    if (*it < dim) {
      ++*it;
      return true;
    }
    *it = 1;
  }
  return false;
}

}  // namespace

DenseTensor::DenseTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("tensor order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("tensor dimension must be in 1.." + std::to_string(kMaxDim));
  }
  entries_.assign(power(dim, order), Rational(0));
}

const Rational& DenseTensor::at(std::span<const int> index) const {
  return entries_[offset_of(order_, dim_, index)];
}

Rational& DenseTensor::at(std::span<const int> index) {
  return entries_[offset_of(order_, dim_, index)];
}

bool DenseTensor::is_zero() const {
  for (const Rational& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Rational DenseTensor::evaluate(std::span<const RationalVector> vectors) const {
  if (static_cast<int>(vectors.size()) != order_) {
    throw std::invalid_argument("evaluate: expected one vector per tensor slot");
  }
  for (const RationalVector& v : vectors) {
    if (v.size() != dim_) throw std::invalid_argument("evaluate: vector dimension mismatch");
  }
  Rational total = 0;
  std::vector<int> index(static_cast<std::size_t>(order_), 1);
  do {
    Rational product = at(index);
    for (int k = 0; k < order_ && product != 0; ++k) {
      product *= vectors[static_cast<std::size_t>(k)](index[static_cast<std::size_t>(k)] - 1);
    }
    total += product;
  } while (next_index(index, dim_));
  return total;
}

DenseTensor operator+(DenseTensor a, const DenseTensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) {
    throw std::invalid_argument("tensor add: shape mismatch");
  }
  for (std::size_t i = 0; i < a.entries().size(); ++i) a.entries()[i] += b.entries()[i];
  return a;
}

DenseTensor operator-(DenseTensor a, const DenseTensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) {
    throw std::invalid_argument("tensor subtract: shape mismatch");
  }
  for (std::size_t i = 0; i < a.entries().size(); ++i) a.entries()[i] -= b.entries()[i];
  return a;
}

DenseTensor operator*(const Rational& c, DenseTensor t) {
  for (Rational& e : t.entries()) e *= c;
  return t;
}

DenseTensor apply(const GroupAlgebraElement& a, const DenseTensor& t) {
  if (a.degree() != t.order()) {
    throw std::invalid_argument("apply: group algebra degree must equal tensor order");
  }
  DenseTensor out(t.order(), t.dim());
  std::vector<int> index(static_cast<std::size_t>(t.order()), 1);
  std::vector<int> source(static_cast<std::size_t>(t.order()), 1);
  do {
    Rational value = 0;
    for (const auto& [p, c] : a.terms()) {
      for (int k = 1; k <= t.order(); ++k) {
        source[static_cast<std::size_t>(k - 1)] = index[static_cast<std::size_t>(p(k) - 1)];
      }
      value += c * t.at(source);
    }
    out.at(index) = std::move(value);
  } while (next_index(index, t.dim()));
  return out;
}

GroupAlgebraElement group_element_of(const DenseTensor& t, const std::vector<RationalVector>& b) {
  if (static_cast<int>(b.size()) != t.order()) {
    throw std::invalid_argument("group_element_of: expected one vector per tensor slot");
  }
  GroupAlgebraElement result = GroupAlgebraElement::zero(t.order());
  std::vector<RationalVector> arranged(b.size(), RationalVector());
  for (const Permutation& p : all_permutations(t.order())) {
    for (int k = 1; k <= t.order(); ++k) {
      arranged[static_cast<std::size_t>(k - 1)] = b[static_cast<std::size_t>(p(k) - 1)];
    }
    result.add_term(p, t.evaluate(arranged));
  }
  return result;
}

RationalVector basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("basis_vector: index out of range");
  RationalVector v = RationalVector::Zero(dim);
  v(i - 1) = 1;
  return v;
}

namespace {

GroupAlgebraElement full_group_average(int r, bool signed_sum) {
  const Rational scale = Rational(1) / Rational(factorial(r));
  GroupAlgebraElement result = GroupAlgebraElement::zero(r);
  for (const Permutation& p : all_permutations(r)) {
    result.add_term(p, signed_sum ? scale * sign(p) : scale);
  }
  return result;
}

}  // namespace

DenseTensor symmetrize(const DenseTensor& t) {
  return apply(full_group_average(t.order(), false), t);
}

DenseTensor antisymmetrize(const DenseTensor& t) {
  return apply(full_group_average(t.order(), true), t);
}

DenseTensor tensor_product(const DenseTensor& x, const DenseTensor& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("tensor_product: dimension mismatch");
  DenseTensor out(x.order() + y.order(), x.dim());
  const std::size_t y_size = y.entries().size();
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    if (x.entries()[i] == 0) continue;
    for (std::size_t j = 0; j < y_size; ++j) {
      out.entries()[i * y_size + j] = x.entries()[i] * y.entries()[j];
    }
  }
  return out;
}

DenseTensor random_tensor(int order, int dim, std::uint64_t seed) {
  DenseTensor out(order, dim);
  SplitMix64 rng(seed);
  for (Rational& e : out.entries()) e = rng.next_int(-9, 9);
  return out;
}

DenseTensor nabla_surrogate(Kind kind, int r, int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("nabla_surrogate: dimension must be at least 2");
  const DenseTensor w = random_tensor(r + 1, d, seed);
  return apply(star(subgroup_symmetrizer(r, kind)), w);
}

DenseTensor build_cdc_candidate(const DenseTensor& first, const DenseTensor& second) {
  const bool orders_ok = (first.order() == 2 && second.order() == 3) ||
                         (first.order() == 3 && second.order() == 2);
  if (!orders_ok) throw std::invalid_argument("build_cdc_candidate: orders must be 2+3 or 3+2");
  if (first.dim() != second.dim() || first.dim() < 2) {
    throw std::invalid_argument("build_cdc_candidate: need equal dimensions >= 2");
  }
  const Tableau t(Partition({3, 2}), {{1, 3, 5}, {2, 4}});
  return apply(star(young_symmetrizer(t)), tensor_product(first, second));
}

CdcReport verify_cdc_identities(const DenseTensor& t) {
  if (t.order() != 5) throw std::invalid_argument("verify_cdc_identities: tensor must have order 5");
  const auto perm_apply = [&](std::vector<int> images) {
    return apply(GroupAlgebraElement::from_permutation(Permutation(std::move(images))), t);
  };
  const DenseTensor zero(t.order(), t.dim());

  CdcReport report;
  report.antisymmetric_first_pair = perm_apply({2, 1, 3, 4, 5}) == Rational(-1) * t;
  report.antisymmetric_second_pair = perm_apply({1, 2, 4, 3, 5}) == Rational(-1) * t;
  report.pair_interchange = perm_apply({3, 4, 1, 2, 5}) == t;
  report.first_bianchi = t + perm_apply({1, 3, 4, 2, 5}) + perm_apply({1, 4, 2, 3, 5}) == zero;
  report.second_bianchi = t + perm_apply({1, 2, 4, 5, 3}) + perm_apply({1, 2, 5, 3, 4}) == zero;
  return report;
}

std::ostream& operator<<(std::ostream& os, const DenseTensor& t) {
  os << "DenseTensor(order=" << t.order() << ", dim=" << t.dim() << ", [";
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    if (i > 0) os << ", ";
    os << t.entries()[i].str();
  }
  return os << "])";
}

}  // namespace symalg
