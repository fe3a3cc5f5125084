#include "doctest.h"
#include "lieplan/errors.hpp"
#include "lieplan/serialize.hpp"

using namespace lieplan;

TEST_CASE("rationals") {
  CHECK(to_json(Rational(6, 4)).get<std::string>() == "3/2");
  CHECK(rational_from_json(Json("-2/6")) == Rational(-1, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}

TEST_CASE("matrix round trip") {
  const Matrix m{{Rational(1, 2), 0}, {-3, Rational(2, 3)}};
  const Json j = matrix_to_json(m);
  CHECK(j["n"] == 2);
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(parse_json(R"({"n": 1, "entries": [["4/2"]]})")) == Matrix{{2}});
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n": 2, "entries": [["1"]]})")), DimensionError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n": 1, "entries": [["1", "2"]]})")), DimensionError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"entries": []})")), ParseError);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("block spec round trip") {
  const BlockSpec b{{Elliptic2{Rational(3, 2)}, Hyperbolic2{-1}, Quad4{1, 2}, Zero2{}}};
  const Json j = to_json(b);
  CHECK(j[0]["kind"] == "ell2");
  CHECK(canonical_dump(to_json(block_spec_from_json(j))) == canonical_dump(j));
  CHECK_THROWS_AS(block_spec_from_json(parse_json(R"([{"kind": "ell3"}])")), ParseError);
  CHECK_THROWS_AS(block_spec_from_json(parse_json(R"([{"kind": "ell2"}])")), ParseError);
}

TEST_CASE("report round trip is byte identical") {
  for (const SpaceSpec& s : {SpaceSpec{GroupFamily::Sp, 2, 1, 0}, SpaceSpec{GroupFamily::Sp, 3, 2, 1},
                             SpaceSpec{GroupFamily::Sp, 2, 2, 0}, SpaceSpec{GroupFamily::GL, 4, 3, 0},
                             SpaceSpec{GroupFamily::GL, 2, 1, 1}, SpaceSpec{GroupFamily::Sp, 5, 2, 0}}) {
    const std::string text = canonical_dump(to_json(build_report(s, s.n + 1)));
    const SupportReport back = report_from_json(parse_json(text));
    CHECK(back.space == s);
    CHECK(canonical_dump(to_json(back)) == text);
  }
}

TEST_CASE("report field order") {
  const Json j = to_json(build_report({GroupFamily::Sp, 2, 1, 0}, 3));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"space", "levi", "strata", "ds", "ds_reason", "hc_params"});
  CHECK(j["hc_params"].size() == 6);
  CHECK(j["strata"][0]["region"]["kind"] == "sp_cartan_range");
}

TEST_CASE("family names") {
  CHECK(parse_family("sp") == GroupFamily::Sp);
  CHECK(family_name(GroupFamily::GL) == "gl");
  CHECK_THROWS_AS(parse_family("so"), ParseError);
}
