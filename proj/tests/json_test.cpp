#include <doctest.h>

#include <json.hpp>

#include "symalg/branching.hpp"
#include "symalg/dft.hpp"
#include "symalg/json_io.hpp"
#include "symalg/tensor.hpp"
#include "test_support.hpp"

using namespace symalg;
using nlohmann::json;
using test::random_element;

TEST_CASE("rational strings") {
  CHECK(to_string(Rational(1) / Rational(2)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(parse_rational("6/8") == Rational(3) / Rational(4));
  CHECK(parse_rational("-6/8") == Rational(-3) / Rational(4));
  CHECK(to_string(parse_rational("5/-10")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("permutation and partition JSON") {
  const Permutation p({2, 3, 1});
  CHECK(json(p).dump() == "[2,3,1]");
  CHECK(permutation_from_json(json(p)) == p);
  CHECK_THROWS_AS(permutation_from_json(json::parse("[1,1,3]")), std::invalid_argument);

  const Partition lambda({2, 1, 1});
  CHECK(json(lambda).dump() == "[2,1,1]");
  CHECK(partition_from_json(json(lambda)) == lambda);
}

TEST_CASE("tableau JSON") {
  const Tableau t(Partition({2, 1, 1, 1}), {{1, 5}, {2}, {3}, {4}});
  CHECK(json(t).dump() == "[[1,5],[2],[3],[4]]");
  CHECK(tableau_from_json(json(t)) == t);
  CHECK_THROWS_AS(tableau_from_json(json::parse("[[1,2],[2]]")), std::invalid_argument);
}

TEST_CASE("element JSON form") {
  GroupAlgebraElement a = GroupAlgebraElement::zero(3);
  a.add_term(Permutation({2, 1, 3}), Rational(-1));
  a.add_term(Permutation::identity(3), Rational(1) / Rational(2));
  const json j = a;
  CHECK(j.at("degree") == 3);
  REQUIRE(j.at("terms").size() == 2);
  // Lexicographic by one-line list, denominator omitted when 1.
  CHECK(j.at("terms")[0].at("perm").dump() == "[1,2,3]");
  CHECK(j.at("terms")[0].at("coeff") == "1/2");
  CHECK(j.at("terms")[1].at("perm").dump() == "[2,1,3]");
  CHECK(j.at("terms")[1].at("coeff") == "-1");
  CHECK(element_from_json(j) == a);
}

TEST_CASE("element roundtrip on random values") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto a = random_element(4, 7, 5000 + seed);
    CHECK(element_from_json(json(a)) == a);
  }
}

TEST_CASE("element parsing rejects degree mismatches") {
  const json j = json::parse(R"({"degree": 3, "terms": [{"perm": [1, 2], "coeff": "1"}]})");
  CHECK_THROWS_AS(element_from_json(j), std::invalid_argument);
}

TEST_CASE("fourier image roundtrip") {
  const auto image = dft(random_element(4, 6, 5100));
  const json j = image;
  CHECK(j.at("n") == 4);
  CHECK(j.at("blocks").contains("[2,1,1]"));
  CHECK(fourier_image_from_json(j) == image);
}

TEST_CASE("tensor roundtrip") {
  const DenseTensor t = random_tensor(3, 3, 5200);
  CHECK(tensor_from_json(json(t)) == t);

  json bad = json(t);
  bad["entries"].erase(0);
  CHECK_THROWS_AS(tensor_from_json(bad), std::invalid_argument);
}

TEST_CASE("decomposition serialization") {
  const auto d = decompose(test::group_average(2, true), Partition({1, 1}));
  const json j = d;
  CHECK(j.at("frames").size() == 2);
  CHECK(j.at("components").contains("[2,1]"));
  CHECK(j.at("components").contains("[1,1,1]"));
  CHECK(element_from_json(j.at("source")) == d.source);
  CHECK(element_from_json(j.at("components").at("[2,1]")) == d.components.at(Partition({2, 1})));
}
