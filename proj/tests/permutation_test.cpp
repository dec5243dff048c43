#include <doctest.h>

#include <set>

#include "symalg/config.hpp"
#include "symalg/permutation.hpp"
#include "symalg/rng.hpp"

using namespace symalg;

TEST_CASE("identity permutation") {
  CHECK(Permutation::identity(3).images() == std::vector<int>{1, 2, 3});
  CHECK(sign(Permutation::identity(5)) == 1);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);

  const Permutation p({3, 1, 4, 2});
  CHECK(Permutation::identity(4) * p == p);
  CHECK(p * Permutation::identity(4) == p);
}

TEST_CASE("one-line list validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("composition acts as p(q(i))") {
  CHECK((Permutation({2, 1, 3}) * Permutation({1, 3, 2})).images() == std::vector<int>{2, 3, 1});
  CHECK((Permutation({2, 3, 1}) * Permutation({2, 3, 1})).images() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(Permutation({2, 1}) * Permutation({1, 2, 3}), std::invalid_argument);

  const Permutation p({4, 2, 1, 3});
  CHECK(p * p.inverse() == Permutation::identity(4));
  CHECK(p.inverse() * p == Permutation::identity(4));
}

TEST_CASE("composition is associative") {
  SplitMix64 rng(11);
  const auto perms = all_permutations(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& p = perms[rng.next() % perms.size()];
    const auto& q = perms[rng.next() % perms.size()];
    const auto& r = perms[rng.next() % perms.size()];
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("inverse") {
  CHECK(Permutation({2, 3, 1}).inverse().images() == std::vector<int>{3, 1, 2});
  const Permutation t = Permutation::transposition(5, 2, 4);
  CHECK(t.inverse() == t);
  const Permutation p({5, 3, 1, 2, 4});
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("transposition constructor") {
  const Permutation t = Permutation::transposition(4, 1, 3);
  CHECK(t.images() == std::vector<int>{3, 2, 1, 4});
  CHECK(t * t == Permutation::identity(4));
  CHECK_THROWS_AS(Permutation::transposition(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(4, 0, 3), std::invalid_argument);
}

TEST_CASE("sign") {
  CHECK(sign(Permutation({2, 1, 3})) == -1);
  CHECK(sign(Permutation({2, 3, 1})) == 1);
  CHECK(sign(Permutation::identity(7)) == 1);

  SplitMix64 rng(12);
  const auto perms = all_permutations(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& p = perms[rng.next() % perms.size()];
    const auto& q = perms[rng.next() % perms.size()];
    CHECK(sign(p * q) == sign(p) * sign(q));
  }
}

TEST_CASE("exactly half of S_n is even") {
  for (int n = 2; n <= 6; ++n) {
    long long positive = 0;
    for (const Permutation& p : all_permutations(n)) {
      if (sign(p) == 1) ++positive;
    }
    CHECK(positive == factorial(n) / 2);
  }
}

TEST_CASE("cycle type") {
  CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(Permutation({2, 3, 1})) == Partition({3}));
  CHECK(cycle_type(Permutation({2, 1, 4, 3})) == Partition({2, 2}));
}

TEST_CASE("cycle type is a conjugation invariant") {
  const auto perms = all_permutations(5);
  SplitMix64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& p = perms[rng.next() % perms.size()];
    const auto& q = perms[rng.next() % perms.size()];
    CHECK(cycle_type(q * p * q.inverse()) == cycle_type(p));
  }
}

TEST_CASE("all_permutations enumeration") {
  const auto s3 = all_permutations(3);
  CHECK(s3.size() == 6);
  CHECK(s3.front() == Permutation::identity(3));
  CHECK(s3.back().images() == std::vector<int>{3, 2, 1});
  CHECK(std::set<Permutation>(s3.begin(), s3.end()).size() == 6);

  CHECK(all_permutations(1) == std::vector<Permutation>{Permutation::identity(1)});
  CHECK(all_permutations(5).size() == 120);
  CHECK_THROWS_AS(all_permutations(9), LimitError);
}

TEST_CASE("lex_rank indexes the enumeration") {
  const auto perms = all_permutations(4);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    CHECK(lex_rank(perms[k]) == static_cast<long long>(k));
  }
}
