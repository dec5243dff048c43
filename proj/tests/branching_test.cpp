#include <doctest.h>

#include "symalg/branching.hpp"
#include "symalg/characters.hpp"
#include "symalg/classify.hpp"
#include "symalg/config.hpp"
#include "symalg/dft.hpp"
#include "symalg/young.hpp"
#include "test_support.hpp"

using namespace symalg;

namespace {

GroupAlgebraElement expected_h_a_r2() {
  // e_a - f_a expanded by hand from the two defining sums.
  GroupAlgebraElement h = GroupAlgebraElement::zero(3);
  h.add_term(Permutation({1, 2, 3}), Rational(1) / Rational(3));
  h.add_term(Permutation({2, 1, 3}), Rational(-1) / Rational(3));
  h.add_term(Permutation({3, 2, 1}), Rational(1) / Rational(6));
  h.add_term(Permutation({1, 3, 2}), Rational(1) / Rational(6));
  h.add_term(Permutation({2, 3, 1}), Rational(-1) / Rational(6));
  h.add_term(Permutation({3, 1, 2}), Rational(-1) / Rational(6));
  return h;
}

}  // namespace

TEST_CASE("subgroup symmetrizers at r = 2") {
  GroupAlgebraElement e_s = GroupAlgebraElement::zero(3);
  e_s.add_term(Permutation({1, 2, 3}), Rational(1) / Rational(2));
  e_s.add_term(Permutation({2, 1, 3}), Rational(1) / Rational(2));
  CHECK(subgroup_symmetrizer(2, Kind::symmetric) == e_s);

  GroupAlgebraElement e_a = GroupAlgebraElement::zero(3);
  e_a.add_term(Permutation({1, 2, 3}), Rational(1) / Rational(2));
  e_a.add_term(Permutation({2, 1, 3}), Rational(-1) / Rational(2));
  CHECK(subgroup_symmetrizer(2, Kind::alternating) == e_a);
}

TEST_CASE("subgroup symmetrizer properties") {
  for (int r = 2; r <= 4; ++r) {
    for (Kind kind : {Kind::symmetric, Kind::alternating}) {
      const auto e = subgroup_symmetrizer(r, kind);
      CHECK(is_idempotent(e));
      CHECK(star(e) == e);
      for (const auto& [p, c] : e.terms()) CHECK(p(r + 1) == r + 1);
    }
  }
  CHECK_THROWS_AS(subgroup_symmetrizer(1, Kind::symmetric), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_symmetrizer(8, Kind::symmetric), LimitError);
}

TEST_CASE("full symmetrizers") {
  for (int r = 2; r <= 4; ++r) {
    const auto f_s = full_symmetrizer(r, Kind::symmetric);
    const auto f_a = full_symmetrizer(r, Kind::alternating);
    CHECK(star(f_s) == f_s);
    CHECK(star(f_a) == f_a);
    CHECK(f_s == central_idempotent(Partition({r + 1})));
    CHECK(f_a ==
          central_idempotent(Partition(std::vector<int>(static_cast<std::size_t>(r + 1), 1))));
    CHECK(f_s * subgroup_symmetrizer(r, Kind::symmetric) == f_s);
  }
}

TEST_CASE("h components") {
  CHECK(h_component(2, Kind::alternating) == expected_h_a_r2());
  CHECK(left_ideal_dimension(h_component(3, Kind::alternating)) == 3);

  for (int r = 2; r <= 4; ++r) {
    for (Kind kind : {Kind::symmetric, Kind::alternating}) {
      const auto e = subgroup_symmetrizer(r, kind);
      const auto f = full_symmetrizer(r, kind);
      const auto h = h_component(r, kind);
      CHECK(e == f + h);
      CHECK(is_idempotent(h));
      CHECK((f * h).is_zero());
      CHECK((h * f).is_zero());
      CHECK(star(h) == h);
    }
  }
}

TEST_CASE("h and f split the subgroup symmetrizer action") {
  for (int r = 2; r <= 4; ++r) {
    const auto e_a = subgroup_symmetrizer(r, Kind::alternating);
    const auto f_a = full_symmetrizer(r, Kind::alternating);
    const auto h_a = h_component(r, Kind::alternating);
    CHECK(f_a * e_a == f_a);
    CHECK(h_a * e_a == h_a);
  }
}

TEST_CASE("decompose the embedded symmetrizers") {
  for (int r = 2; r <= 3; ++r) {
    const auto d = decompose(test::group_average(r, false), Partition({r}));
    CHECK(d.frames == std::vector<Partition>{Partition({r + 1}), Partition({r, 1})});
    CHECK(d.source == subgroup_symmetrizer(r, Kind::symmetric));
    CHECK(d.components.at(Partition({r + 1})) == full_symmetrizer(r, Kind::symmetric));
    CHECK(d.components.at(Partition({r, 1})) == h_component(r, Kind::symmetric));

    std::vector<int> hook{2};
    hook.insert(hook.end(), static_cast<std::size_t>(r - 1), 1);
    const auto da =
        decompose(test::group_average(r, true), Partition(std::vector<int>(static_cast<std::size_t>(r), 1)));
    CHECK(da.frames.size() == 2);
    CHECK(da.components.at(Partition(std::vector<int>(static_cast<std::size_t>(r + 1), 1))) ==
          full_symmetrizer(r, Kind::alternating));
    CHECK(da.components.at(Partition(hook)) == h_component(r, Kind::alternating));
  }
}

TEST_CASE("decompose a hook-frame idempotent over three frames") {
  const auto f = excluded_ideal_idempotent();
  const auto d = decompose(f, Partition({2, 1}));
  CHECK(d.frames ==
        std::vector<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});

  GroupAlgebraElement sum = GroupAlgebraElement::zero(4);
  for (const Partition& mu : d.frames) {
    const auto& component = d.components.at(mu);
    sum += component;
    CHECK((component.is_zero() || is_idempotent(component)));
    CHECK(component == embed(f) * central_idempotent(mu));
  }
  CHECK(sum == d.source);
  CHECK(d.source == embed(f));

  for (std::size_t i = 0; i < d.frames.size(); ++i) {
    for (std::size_t j = 0; j < d.frames.size(); ++j) {
      if (i == j) continue;
      CHECK((d.components.at(d.frames[i]) * d.components.at(d.frames[j])).is_zero());
    }
  }
}

TEST_CASE("decompose validates its input") {
  CHECK_THROWS_AS(decompose(Rational(2) * GroupAlgebraElement::identity(3), Partition({3})),
                  std::invalid_argument);
  // Central idempotent of (2,1) generates a 4-dimensional ideal, not d = 2.
  CHECK_THROWS_AS(decompose(central_idempotent(Partition({2, 1})), Partition({2, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose(GroupAlgebraElement::identity(3), Partition({2, 1, 1})),
                  std::invalid_argument);
}
