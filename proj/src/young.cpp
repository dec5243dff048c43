#include "symalg/young.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "symalg/config.hpp"

namespace symalg {

Tableau::Tableau(Partition frame, std::vector<std::vector<int>> rows)
    : frame_(std::move(frame)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != frame_.rows()) {
    throw std::invalid_argument("tableau: row count does not match frame");
  }
  const int n = frame_.n();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < frame_.rows(); ++i) {
    if (static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) != frame_.part(i)) {
      throw std::invalid_argument("tableau: row length does not match frame");
    }
    for (int v : rows_[static_cast<std::size_t>(i)]) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw std::invalid_argument("tableau: entries must be exactly {1..n}");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

bool Tableau::is_standard() const {
  for (int i = 0; i < frame_.rows(); ++i) {
    for (int j = 0; j < frame_.part(i); ++j) {
      if (j + 1 < frame_.part(i) && entry(i, j) >= entry(i, j + 1)) return false;
      if (i + 1 < frame_.rows() && j < frame_.part(i + 1) && entry(i, j) >= entry(i + 1, j)) {
        return false;
      }
    }
  }
  return true;
}

std::pair<int, int> Tableau::position_of(int value) const {
  for (int i = 0; i < frame_.rows(); ++i) {
    for (int j = 0; j < frame_.part(i); ++j) {
      if (entry(i, j) == value) return {i, j};
    }
  }
  throw std::invalid_argument("tableau: value not present");
}

std::string Tableau::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(rows_[i][j]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::strong_ordering lex_compare(const Tableau& a, const Tableau& b) {
  if (a.frame() != b.frame()) throw std::invalid_argument("lex_compare: frame mismatch");
  for (int i = 0; i < a.frame().rows(); ++i) {
    for (int j = 0; j < a.frame().part(i); ++j) {
      if (a.entry(i, j) != b.entry(i, j)) return a.entry(i, j) <=> b.entry(i, j);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int k = std::min(max_part, remaining); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i - 1] > parts[i]) {
      std::vector<int> grown = parts;
      ++grown[i];
      out.push_back(Partition(std::move(grown)));
    }
  }
  std::vector<int> appended = parts;
  appended.push_back(1);
  out.push_back(Partition(std::move(appended)));
  return out;
}

std::vector<Tableau> all_tableaux(const Partition& lambda) {
  require_degree(lambda.n(), "all_tableaux");
  std::vector<Tableau> out;
  out.reserve(static_cast<std::size_t>(factorial(lambda.n())));
  for (const Permutation& p : all_permutations(lambda.n())) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
    int next = 1;
    for (int i = 0; i < lambda.rows(); ++i) {
      rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(lambda.part(i)));
      for (int j = 0; j < lambda.part(i); ++j) {
        rows[static_cast<std::size_t>(i)].push_back(p(next++));
      }
    }
    out.push_back(Tableau(lambda, std::move(rows)));
  }
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  require_degree(lambda.n(), "standard_tableaux");
  std::vector<Tableau> out;
  for (Tableau& t : all_tableaux(lambda)) {
    if (t.is_standard()) out.push_back(std::move(t));
  }
  // all_tableaux enumerates by row-major sequence, which is the lex_compare
  // order already; keep the sort as an explicit guarantee.
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return lex_compare(a, b) < 0; });
  return out;
}

long long dimension(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  long long hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      hooks *= (lambda.part(i) - j) + (cols.part(j) - i) - 1;
    }
  }
  const long long total = factorial(lambda.n());
  if (total % hooks != 0) throw std::logic_error("hook product does not divide n!");
  return total / hooks;
}

namespace {

// All permutations of {1..n} permuting each of the given disjoint entry sets
// within itself; deterministic order (per-set lexicographic arrangements).
std::vector<Permutation> set_preserving_group(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<std::vector<int>>> arrangements;
  for (const auto& set : sets) {
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> per_set;
    do {
      per_set.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    arrangements.push_back(std::move(per_set));
  }

  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::size_t> choice(arrangements.size(), 0);
  while (true) {
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t s = 0; s < arrangements.size(); ++s) {
      std::vector<int> sorted = sets[s];
      std::sort(sorted.begin(), sorted.end());
      const auto& arrangement = arrangements[s][choice[s]];
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        images[static_cast<std::size_t>(sorted[k] - 1)] = arrangement[k];
      }
    }
    out.push_back(Permutation(images));

    std::size_t s = 0;
    for (; s < arrangements.size(); ++s) {
      if (++choice[s] < arrangements[s].size()) break;
      choice[s] = 0;
    }
    if (s == arrangements.size()) break;
  }
  return out;
}

}  // namespace

std::vector<Permutation> horizontal_group(const Tableau& t) {
  return set_preserving_group(t.n(), t.rows());
}

std::vector<Permutation> vertical_group(const Tableau& t) {
  std::vector<std::vector<int>> columns;
  const int width = t.frame().rows() == 0 ? 0 : t.frame().part(0);
  for (int j = 0; j < width; ++j) {
    std::vector<int> column;
    for (int i = 0; i < t.frame().rows(); ++i) {
      if (j < t.frame().part(i)) column.push_back(t.entry(i, j));
    }
    columns.push_back(std::move(column));
  }
  return set_preserving_group(t.n(), columns);
}

GroupAlgebraElement young_symmetrizer(const Tableau& t) {
  GroupAlgebraElement result = GroupAlgebraElement::zero(t.n());
  const auto vertical = vertical_group(t);
  for (const Permutation& p : horizontal_group(t)) {
    for (const Permutation& q : vertical) {
      result.add_term(p * q, sign(q));
    }
  }
  return result;
}

GroupAlgebraElement normalized_idempotent(const Tableau& t) {
  const Rational scale = Rational(dimension(t.frame())) / Rational(factorial(t.n()));
  return scale * young_symmetrizer(t);
}

Tableau relabeled(const Permutation& p, const Tableau& t) {
  if (p.degree() != t.n()) throw std::invalid_argument("relabeled: degree mismatch");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows) {
    for (int& v : row) v = p(v);
  }
  return Tableau(t.frame(), std::move(rows));
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

}  // namespace symalg
