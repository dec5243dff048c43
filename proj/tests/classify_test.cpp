#include <doctest.h>

#include <set>

#include "symalg/branching.hpp"
#include "symalg/classify.hpp"
#include "symalg/config.hpp"
#include "symalg/reference_tables.hpp"
#include "symalg/tensor.hpp"
#include "symalg/young.hpp"
#include "test_support.hpp"

using namespace symalg;

namespace {

std::set<Tableau> with_status(const std::vector<TableauVerdict>& verdicts, VerdictStatus status) {
  std::set<Tableau> out;
  for (const TableauVerdict& v : verdicts) {
    if (v.status == status) out.insert(v.tableau);
  }
  return out;
}

std::set<Tableau> as_set(const std::vector<Tableau>& tableaux) {
  return {tableaux.begin(), tableaux.end()};
}

}  // namespace

TEST_CASE("reference tables have the advertised sizes") {
  CHECK(reference_tables(2).reproducing.size() == 2);
  CHECK(reference_tables(2).annihilating.size() == 2);
  CHECK(reference_tables(3).reproducing.size() == 6);
  CHECK(reference_tables(3).annihilating.size() == 12);
  CHECK(reference_tables(4).reproducing.size() == 24);
  CHECK(reference_tables(4).annihilating.size() == 72);
  CHECK_THROWS_AS(reference_tables(5), std::invalid_argument);
}

TEST_CASE("classification of (2,1) against h_a matches the reference") {
  const auto verdicts = classify_frame(h_component(2, Kind::alternating), Partition({2, 1}));
  CHECK(verdicts.size() == 6);

  const auto reproduces = with_status(verdicts, VerdictStatus::reproduces);
  const auto annihilates = with_status(verdicts, VerdictStatus::annihilates);
  const auto neither = with_status(verdicts, VerdictStatus::neither);

  CHECK(reproduces == std::set<Tableau>{Tableau(Partition({2, 1}), {{1, 3}, {2}}),
                                        Tableau(Partition({2, 1}), {{2, 3}, {1}})});
  CHECK(annihilates == std::set<Tableau>{Tableau(Partition({2, 1}), {{1, 2}, {3}}),
                                         Tableau(Partition({2, 1}), {{2, 1}, {3}})});
  CHECK(neither.size() == 2);

  CHECK(reproduces == as_set(reference_tables(2).reproducing));
  CHECK(annihilates == as_set(reference_tables(2).annihilating));
}

TEST_CASE("classification of (2,1,1) against h_a matches the reference") {
  const auto verdicts = classify_frame(h_component(3, Kind::alternating), Partition({2, 1, 1}));
  CHECK(verdicts.size() == 24);
  CHECK(with_status(verdicts, VerdictStatus::reproduces) == as_set(reference_tables(3).reproducing));
  CHECK(with_status(verdicts, VerdictStatus::annihilates) == as_set(reference_tables(3).annihilating));
  CHECK(with_status(verdicts, VerdictStatus::neither).size() == 6);
}

TEST_CASE("every tableau receives exactly one status") {
  const auto verdicts = classify_frame(h_component(3, Kind::alternating), Partition({2, 1, 1}));
  const auto all = all_tableaux(Partition({2, 1, 1}));
  REQUIRE(verdicts.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(verdicts[i].tableau == all[i]);
    CHECK(verdicts[i].standard == all[i].is_standard());
  }
}

TEST_CASE("classify_frame validates input") {
  CHECK_THROWS_AS(classify_frame(Rational(2) * GroupAlgebraElement::identity(3), Partition({2, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify_frame(GroupAlgebraElement::identity(3), Partition({2, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("standard tableau theorem") {
  CHECK(standard_tableau_theorem_check(2));
  CHECK(standard_tableau_theorem_check(3));
  CHECK(standard_tableau_theorem_check(4));
}

TEST_CASE("no (r,1) tableau reproduces or annihilates h_s") {
  for (int r = 2; r <= 3; ++r) {
    const auto report = hs_negative_check(r);
    CHECK(report.no_reproducer);
    CHECK(report.no_annihilator);
  }
}

TEST_CASE("admissibility products against the excluded idempotent") {
  const auto f = excluded_ideal_idempotent();
  CHECK(is_idempotent(f));

  const auto h_s = h_component(2, Kind::symmetric);
  const auto h_a = h_component(2, Kind::alternating);

  GroupAlgebraElement expected_fhs = GroupAlgebraElement::zero(3);
  expected_fhs.add_term(Permutation({1, 2, 3}), Rational(1) / Rational(4));
  expected_fhs.add_term(Permutation({2, 1, 3}), Rational(1) / Rational(4));
  expected_fhs.add_term(Permutation({2, 3, 1}), Rational(-1) / Rational(4));
  expected_fhs.add_term(Permutation({3, 2, 1}), Rational(-1) / Rational(4));
  CHECK(f * h_s == expected_fhs);

  // z = (1/2)(id - (1 3)); f*h_a = z*e_a - f_a.
  GroupAlgebraElement z = GroupAlgebraElement::identity(3);
  z.add_term(Permutation::transposition(3, 1, 3), -1);
  z *= Rational(1) / Rational(2);
  const auto expected_fha =
      z * subgroup_symmetrizer(2, Kind::alternating) - full_symmetrizer(2, Kind::alternating);
  CHECK(f * h_a == expected_fha);

  CHECK(f * h_s != h_s);
  CHECK(f * h_a != h_a);
  CHECK(admissibility_check(h_s));
  CHECK(admissibility_check(h_a));
  CHECK_FALSE(admissibility_check(f));
  CHECK_THROWS_AS(admissibility_check(GroupAlgebraElement::identity(4)), std::invalid_argument);
}

TEST_CASE("primitive idempotents reproduce each other symmetrically") {
  // For primitive e, f: e*f = e iff f*e = f.
  const auto h_a = h_component(2, Kind::alternating);
  std::vector<GroupAlgebraElement> primitives{h_a, h_component(2, Kind::symmetric)};
  for (const Tableau& t : all_tableaux(Partition({2, 1}))) {
    primitives.push_back(normalized_idempotent(t));
  }
  for (const auto& e : primitives) {
    for (const auto& f : primitives) {
      CHECK((e * f == e) == (f * e == f));
    }
  }
}

TEST_CASE("algebra verdicts agree with the tensor action") {
  const auto h_a = h_component(2, Kind::alternating);
  const auto verdicts = classify_frame(h_a, Partition({2, 1}));
  for (const TableauVerdict& v : verdicts) {
    const auto e_t = normalized_idempotent(v.tableau);
    bool reproduces_all = true, annihilates_all = true;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      // A tensor of the h_a symmetry class.
      const DenseTensor x = apply(star(h_a), random_tensor(3, 3, 4000 + seed));
      const DenseTensor image = apply(star(e_t), x);
      if (image != x) reproduces_all = false;
      if (!image.is_zero()) annihilates_all = false;
    }
    switch (v.status) {
      case VerdictStatus::reproduces: CHECK(reproduces_all); break;
      case VerdictStatus::annihilates: CHECK(annihilates_all); break;
      case VerdictStatus::neither:
        CHECK_FALSE(reproduces_all);
        CHECK_FALSE(annihilates_all);
        break;
    }
  }
}
