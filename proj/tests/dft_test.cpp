#include <doctest.h>

#include "symalg/branching.hpp"
#include "symalg/characters.hpp"
#include "symalg/classify.hpp"
#include "symalg/config.hpp"
#include "symalg/dft.hpp"
#include "symalg/young.hpp"
#include "test_support.hpp"

using namespace symalg;
using test::group_average;
using test::random_element;

TEST_CASE("natural representation basics") {
  for (const Partition& lambda : partitions_of(4)) {
    const auto d = static_cast<Eigen::Index>(dimension(lambda));
    CHECK(natural_representation(lambda, Permutation::identity(4)) ==
          RationalMatrix::Identity(d, d));
  }
  for (const Permutation& p : all_permutations(4)) {
    CHECK(natural_representation(Partition({4}), p)(0, 0) == 1);
    CHECK(natural_representation(Partition({1, 1, 1, 1}), p)(0, 0) == sign(p));
  }
  CHECK_THROWS_AS(natural_representation(Partition({3}), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("natural representation is multiplicative with integer entries") {
  SplitMix64 rng(21);
  const auto perms = all_permutations(4);
  for (const Partition& lambda : partitions_of(4)) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto& p = perms[rng.next() % perms.size()];
      const auto& q = perms[rng.next() % perms.size()];
      CHECK(natural_representation(lambda, p * q) ==
            natural_representation(lambda, p) * natural_representation(lambda, q));
    }
    for (const Permutation& p : perms) {
      const RationalMatrix m = natural_representation(lambda, p);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          CHECK(denominator(m(i, j)) == 1);
        }
      }
    }
  }
}

TEST_CASE("trace of the representation is the character") {
  for (int n = 3; n <= 4; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Permutation& p : all_permutations(n)) {
        CHECK(natural_representation(lambda, p).trace() ==
              character(lambda, cycle_type(p)));
      }
    }
  }
}

TEST_CASE("dft of distinguished elements") {
  CHECK(dft(GroupAlgebraElement::identity(4)) == FourierImage::identity(4));

  // The full symmetrizer maps to a lone 1 in the one-row block.
  const auto image = dft(full_symmetrizer(3, Kind::symmetric));
  for (const auto& [lambda, block] : image.blocks()) {
    if (lambda == Partition({4})) {
      CHECK(block(0, 0) == 1);
    } else {
      for (Eigen::Index i = 0; i < block.rows(); ++i) {
        for (Eigen::Index j = 0; j < block.cols(); ++j) CHECK(block(i, j) == 0);
      }
    }
  }
}

TEST_CASE("dft is an algebra homomorphism") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = random_element(4, 6, 2000 + seed);
    const auto b = random_element(4, 6, 2100 + seed);
    CHECK(dft(a * b) == dft(a) * dft(b));
  }
}

TEST_CASE("inverse dft roundtrips") {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto a = random_element(n, 8, 2200 + seed);
      CHECK(inverse_dft(dft(a)) == a);
    }
  }
  CHECK(inverse_dft(FourierImage::identity(4)) == GroupAlgebraElement::identity(4));

  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto image = dft(random_element(4, 6, 2300 + seed));
    CHECK(dft(inverse_dft(image)) == image);
  }
}

TEST_CASE("the lone one-column block inverts to the alternating symmetrizer") {
  FourierImage image = FourierImage::zeros(4);
  image.block(Partition({1, 1, 1, 1}))(0, 0) = 1;
  CHECK(inverse_dft(image) == full_symmetrizer(3, Kind::alternating));
}

TEST_CASE("extract_component") {
  // Embedded subgroup symmetrizers split into the full symmetrizer plus h.
  for (int r = 2; r <= 3; ++r) {
    const auto e_s = subgroup_symmetrizer(r, Kind::symmetric);
    CHECK(extract_component(e_s, Partition({r + 1})) == full_symmetrizer(r, Kind::symmetric));

    std::vector<int> hook{2};
    hook.insert(hook.end(), static_cast<std::size_t>(r - 1), 1);
    const auto e_a = subgroup_symmetrizer(r, Kind::alternating);
    CHECK(extract_component(e_a, Partition(hook)) ==
          subgroup_symmetrizer(r, Kind::alternating) - full_symmetrizer(r, Kind::alternating));
  }

  for (const Partition& mu : partitions_of(4)) {
    CHECK(extract_component(GroupAlgebraElement::identity(4), mu) == central_idempotent(mu));
  }
}

TEST_CASE("character route equals the Fourier route") {
  const int r = 3;
  const std::vector<GroupAlgebraElement> embedded = {
      embed(group_average(r, false)),
      embed(group_average(r, true)),
      embed(excluded_ideal_idempotent()),
  };
  for (const auto& e : embedded) {
    for (const Partition& mu : partitions_of(r + 1)) {
      CHECK(extract_component(e, mu) == e * central_idempotent(mu));
    }
  }
}

TEST_CASE("degree six transform") {
  const Permutation p({3, 1, 4, 6, 2, 5});
  for (const Partition& lambda : partitions_of(6)) {
    CHECK(natural_representation(lambda, p).trace() == character(lambda, cycle_type(p)));
  }
  const auto a = GroupAlgebraElement::from_permutation(p, Rational(2) / Rational(3)) +
                 GroupAlgebraElement::identity(6);
  CHECK(inverse_dft(dft(a)) == a);
}

TEST_CASE("malformed images are rejected") {
  std::map<Partition, RationalMatrix> blocks;
  for (const Partition& lambda : partitions_of(3)) {
    blocks.emplace(lambda, RationalMatrix::Zero(1, 1));  // wrong size for (2,1)
  }
  CHECK_THROWS_AS(FourierImage(3, std::move(blocks)), std::invalid_argument);

  std::map<Partition, RationalMatrix> missing;
  missing.emplace(Partition({3}), RationalMatrix::Zero(1, 1));
  CHECK_THROWS_AS(FourierImage(3, std::move(missing)), std::invalid_argument);
}
