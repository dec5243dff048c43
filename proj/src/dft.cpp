#include "symalg/dft.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "symalg/config.hpp"
#include "symalg/linalg.hpp"
#include "symalg/young.hpp"

namespace symalg {

namespace {

// Row-equivalence class of a filling: each row sorted, flattened row-major.
std::vector<int> tabloid_key(const Partition& frame, const std::vector<std::vector<int>>& rows) {
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(frame.n()));
  for (const auto& row : rows) {
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    key.insert(key.end(), sorted.begin(), sorted.end());
  }
  return key;
}

std::vector<std::vector<int>> key_to_rows(const Partition& frame, const std::vector<int>& key) {
  std::vector<std::vector<int>> rows;
  std::size_t offset = 0;
  for (int i = 0; i < frame.rows(); ++i) {
    rows.emplace_back(key.begin() + static_cast<std::ptrdiff_t>(offset),
                      key.begin() + static_cast<std::ptrdiff_t>(offset + static_cast<std::size_t>(frame.part(i))));
    offset += static_cast<std::size_t>(frame.part(i));
  }
  return rows;
}

// Specht module of one frame over the tabloid space: standard polytabloids
// as explicit coordinate vectors plus the generator matrices obtained by
// straightening the permuted polytabloids back into the standard basis.
struct SpechtModule {
  Partition frame;
  std::vector<Tableau> standard;           // ascending lex_compare
  Eigen::Index dim = 0;
  std::map<std::vector<int>, int> tabloid_index;
  std::vector<std::vector<int>> tabloid_keys;
  RationalMatrix polytabloids;             // #tabloids x dim
  std::vector<RationalMatrix> generators;  // adjacent transpositions (i, i+1)

  explicit SpechtModule(const Partition& lambda, int n) : frame(lambda) {
    standard = standard_tableaux(lambda);
    dim = static_cast<Eigen::Index>(standard.size());

    for (const Tableau& t : all_tableaux(lambda)) {
      auto key = tabloid_key(lambda, t.rows());
      if (tabloid_index.emplace(key, static_cast<int>(tabloid_keys.size())).second) {
        tabloid_keys.push_back(std::move(key));
      }
    }
    const Eigen::Index tabloids = static_cast<Eigen::Index>(tabloid_keys.size());

    polytabloids = RationalMatrix::Zero(tabloids, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Tableau& t = standard[static_cast<std::size_t>(j)];
      for (const Permutation& q : vertical_group(t)) {
        const auto key = tabloid_key(lambda, relabeled(q, t).rows());
        polytabloids(tabloid_index.at(key), j) += sign(q);
      }
    }

    for (int g = 1; g <= n - 1; ++g) {
      const Permutation s = Permutation::transposition(n, g, g + 1);
      RationalMatrix permuted = RationalMatrix::Zero(tabloids, dim);
      for (Eigen::Index i = 0; i < tabloids; ++i) {
        auto rows = key_to_rows(lambda, tabloid_keys[static_cast<std::size_t>(i)]);
        for (auto& row : rows) {
          for (int& v : row) v = s(v);
        }
        const Eigen::Index image = tabloid_index.at(tabloid_key(lambda, rows));
        permuted.row(image) = polytabloids.row(i);
      }
      generators.push_back(solve_full_column_rank(polytabloids, permuted));
    }
  }
};

// Bubble-sorting the one-line list by right-multiplications p*s_g records a
// word with p = s_{g_k} * ... * s_{g_1}.
std::vector<int> adjacent_word(const Permutation& p) {
  std::vector<int> v = p.images();
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
        swapped = true;
      }
    }
  }
  return word;
}

class RepresentationTable {
public:
  explicit RepresentationTable(int n) : n_(n), lambdas_(partitions_of(n)) {
    for (const Partition& lambda : lambdas_) {
      modules_.emplace(lambda, std::make_unique<SpechtModule>(lambda, n));
    }
  }

  int n() const { return n_; }
  const std::vector<Partition>& lambdas() const { return lambdas_; }

  const SpechtModule& module(const Partition& lambda) const {
    const auto it = modules_.find(lambda);
    if (it == modules_.end()) throw std::invalid_argument("unknown frame for this degree");
    return *it->second;
  }

  // All blocks of p in lambdas() order. Cached for the whole group at small
  // degrees; computed from the generator word otherwise.
  std::vector<RationalMatrix> matrices(const Permutation& p) {
    const bool cache_all = factorial(n_) <= kFullCacheSize;
    if (cache_all) {
      std::lock_guard<std::mutex> lock(mutex_);
      const auto it = cache_.find(p);
      if (it != cache_.end()) return it->second;
    }
    std::vector<RationalMatrix> blocks = compute(p);
    if (cache_all) {
      std::lock_guard<std::mutex> lock(mutex_);
      cache_.emplace(p, blocks);
    }
    return blocks;
  }

  // Fills the whole-group cache walking the Cayley graph: one generator
  // product per group element instead of a full word per element. Only for
  // degrees where the cache is enabled; full-group sweeps (inverse_dft)
  // call this first.
  void ensure_full_cache() {
    if (factorial(n_) > kFullCacheSize) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (full_cache_built_) return;

    std::vector<Permutation> generators;
    for (int g = 1; g <= n_ - 1; ++g) generators.push_back(Permutation::transposition(n_, g, g + 1));

    const Permutation id = Permutation::identity(n_);
    std::vector<RationalMatrix> id_blocks;
    for (const Partition& lambda : lambdas_) {
      const auto d = module(lambda).dim;
      id_blocks.push_back(RationalMatrix::Identity(d, d));
    }
    cache_.clear();
    cache_.emplace(id, std::move(id_blocks));

    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& p : frontier) {
        const auto& base = cache_.at(p);
        for (std::size_t g = 0; g < generators.size(); ++g) {
          Permutation q = p * generators[g];
          if (cache_.contains(q)) continue;
          std::vector<RationalMatrix> blocks;
          blocks.reserve(lambdas_.size());
          for (std::size_t i = 0; i < lambdas_.size(); ++i) {
            blocks.push_back(base[i] * module(lambdas_[i]).generators[g]);
          }
          cache_.emplace(q, std::move(blocks));
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    full_cache_built_ = true;
  }

private:
  static constexpr long long kFullCacheSize = 720;

  std::vector<RationalMatrix> compute(const Permutation& p) const {
    std::vector<RationalMatrix> blocks;
    blocks.reserve(lambdas_.size());
    const std::vector<int> word = adjacent_word(p);
    for (const Partition& lambda : lambdas_) {
      const SpechtModule& m = module(lambda);
      RationalMatrix rho = RationalMatrix::Identity(m.dim, m.dim);
      for (int g : word) {
        rho = m.generators[static_cast<std::size_t>(g - 1)] * rho;
      }
      blocks.push_back(std::move(rho));
    }
    return blocks;
  }

  int n_;
  std::vector<Partition> lambdas_;
  std::map<Partition, std::unique_ptr<SpechtModule>> modules_;
  std::map<Permutation, std::vector<RationalMatrix>> cache_;
  bool full_cache_built_ = false;
  std::mutex mutex_;
};

RepresentationTable& table_for(int n) {
  static std::map<int, std::unique_ptr<RepresentationTable>> tables;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) {
    it = tables.emplace(n, std::make_unique<RepresentationTable>(n)).first;
  }
  return *it->second;
}

}  // namespace

FourierImage::FourierImage(int n, std::map<Partition, RationalMatrix> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (const Partition& lambda : partitions_of(n)) {
    const auto it = blocks_.find(lambda);
    if (it == blocks_.end()) throw std::invalid_argument("FourierImage: missing block " + lambda.to_string());
    const auto d = static_cast<Eigen::Index>(dimension(lambda));
    if (it->second.rows() != d || it->second.cols() != d) {
      throw std::invalid_argument("FourierImage: block " + lambda.to_string() + " must be " +
                                  std::to_string(d) + "x" + std::to_string(d));
    }
  }
  if (blocks_.size() != partitions_of(n).size()) {
    throw std::invalid_argument("FourierImage: unexpected extra blocks");
  }
}

FourierImage FourierImage::zeros(int n) {
  std::map<Partition, RationalMatrix> blocks;
  for (const Partition& lambda : partitions_of(n)) {
    const auto d = static_cast<Eigen::Index>(dimension(lambda));
    blocks.emplace(lambda, RationalMatrix::Zero(d, d));
  }
  return FourierImage(n, std::move(blocks));
}

FourierImage FourierImage::identity(int n) {
  std::map<Partition, RationalMatrix> blocks;
  for (const Partition& lambda : partitions_of(n)) {
    const auto d = static_cast<Eigen::Index>(dimension(lambda));
    blocks.emplace(lambda, RationalMatrix::Identity(d, d));
  }
  return FourierImage(n, std::move(blocks));
}

const RationalMatrix& FourierImage::block(const Partition& lambda) const {
  const auto it = blocks_.find(lambda);
  if (it == blocks_.end()) throw std::invalid_argument("FourierImage: no block " + lambda.to_string());
  return it->second;
}

RationalMatrix& FourierImage::block(const Partition& lambda) {
  const auto it = blocks_.find(lambda);
  if (it == blocks_.end()) throw std::invalid_argument("FourierImage: no block " + lambda.to_string());
  return it->second;
}

bool FourierImage::operator==(const FourierImage& other) const {
  if (n_ != other.n_) return false;
  for (const auto& [lambda, block] : blocks_) {
    if (block != other.block(lambda)) return false;
  }
  return true;
}

FourierImage operator*(const FourierImage& a, const FourierImage& b) {
  if (a.n() != b.n()) throw std::invalid_argument("FourierImage product: degree mismatch");
  std::map<Partition, RationalMatrix> blocks;
  for (const auto& [lambda, block] : a.blocks()) {
    blocks.emplace(lambda, block * b.block(lambda));
  }
  return FourierImage(a.n(), std::move(blocks));
}

RationalMatrix natural_representation(const Partition& lambda, const Permutation& p) {
  if (lambda.n() != p.degree()) {
    throw std::invalid_argument("natural_representation: degree mismatch");
  }
  require_degree(p.degree(), "natural_representation");
  RepresentationTable& table = table_for(p.degree());
  const auto& lambdas = table.lambdas();
  const auto blocks = table.matrices(p);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] == lambda) return blocks[i];
  }
  throw std::invalid_argument("natural_representation: unknown frame");
}

FourierImage dft(const GroupAlgebraElement& a) {
  require_degree(a.degree(), "dft");
  RepresentationTable& table = table_for(a.degree());
  FourierImage image = FourierImage::zeros(a.degree());
  for (const auto& [p, c] : a.terms()) {
    const auto blocks = table.matrices(p);
    const auto& lambdas = table.lambdas();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      image.block(lambdas[i]) += c * blocks[i];
    }
  }
  return image;
}

GroupAlgebraElement inverse_dft(const FourierImage& image) {
  const int n = image.n();
  require_degree(n, "inverse_dft");
  RepresentationTable& table = table_for(n);
  table.ensure_full_cache();
  const auto& lambdas = table.lambdas();

  std::vector<Rational> weights;  // d_lambda / n!
  std::vector<const RationalMatrix*> blocks;
  for (const Partition& lambda : lambdas) {
    weights.push_back(Rational(dimension(lambda)) / Rational(factorial(n)));
    blocks.push_back(&image.block(lambda));
  }
  GroupAlgebraElement result = GroupAlgebraElement::zero(n);

  for (const Permutation& p : all_permutations(n)) {
    const auto rho = table.matrices(p.inverse());
    Rational coeff = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      // tr(rho * B) without forming the product.
      coeff += weights[i] * rho[i].cwiseProduct(blocks[i]->transpose()).sum();
    }
    if (coeff != 0) result.add_term(p, coeff);
  }
  return result;
}

GroupAlgebraElement extract_component(const GroupAlgebraElement& a, const Partition& mu) {
  if (a.degree() != mu.n()) throw std::invalid_argument("extract_component: degree mismatch");
  const FourierImage image = dft(a);
  FourierImage selected = FourierImage::zeros(a.degree());
  selected.block(mu) = image.block(mu);
  return inverse_dft(selected);
}

std::ostream& operator<<(std::ostream& os, const FourierImage& image) {
  os << "FourierImage(n=" << image.n() << ")";
  for (const auto& [lambda, block] : image.blocks()) {
    os << "\n  " << lambda << ":";
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      os << "\n    ";
      for (Eigen::Index j = 0; j < block.cols(); ++j) {
        os << block(i, j).str() << (j + 1 < block.cols() ? " " : "");
      }
    }
  }
  return os;
}

}  // namespace symalg
