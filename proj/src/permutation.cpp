#include "symalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "symalg/config.hpp"

namespace symalg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("one-line list is not a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (n < 1) throw std::invalid_argument("transposition: degree must be positive");
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::invalid_argument("transposition: need distinct points in {1..n}");
  }
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) {
    inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  }
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  std::vector<int> images(p.images_.size());
  for (int i = 1; i <= p.degree(); ++i) {
    images[static_cast<std::size_t>(i - 1)] = p(q(i));
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

int sign(const Permutation& p) {
  int inversions = 0;
  const auto& v = p.images();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Partition cycle_type(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    int current = start;
    do {
      visited[static_cast<std::size_t>(current - 1)] = true;
      current = p(current);
      ++length;
    } while (current != start);
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(int n) {
  require_degree(n, "all_permutations");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    result.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

long long lex_rank(const Permutation& p) {
  const auto& v = p.images();
  const int n = p.degree();
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    long long smaller_right = 0;
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)]) ++smaller_right;
    }
    rank += smaller_right * factorial(n - 1 - i);
  }
  return rank;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

}  // namespace symalg
