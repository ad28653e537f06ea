#include <doctest.h>

#include "mirrorkit/serialize.hpp"

using namespace mirrorkit;

TEST_CASE("polynomial JSON round trip") {
  for (int n = 1; n <= 3; ++n) {
    const auto w = build_W(n) * Rational(-7, 3);
    const Json j = to_json(w);
    CHECK(poly_from_json(j, y_variables(n)) == w);
    CHECK(Json::parse(j.dump()) == j);
  }
  const auto y = y_variables(2);
  const auto p = LaurentPolynomial::monomial(y, Exponent({-1, 2}), Rational(-3, 4));
  CHECK(to_json(p).dump() == R"([{"exponent":[-1,2],"num":"-3","den":"4"}])");
  CHECK(to_json(LaurentPolynomial(y)).dump() == "[]");
}

TEST_CASE("polynomial JSON rejects malformed input") {
  const auto y = y_variables(2);
  CHECK_THROWS_AS(poly_from_json(Json::object(), y), std::invalid_argument);
  const Json wrong = Json::parse(R"([{"exponent":[1],"num":"1","den":"1"}])");
  CHECK_THROWS_AS(poly_from_json(wrong, y), ContextError);
  const Json zero_den = Json::parse(R"([{"exponent":[1,0],"num":"1","den":"0"}])");
  CHECK_THROWS_AS(poly_from_json(zero_den, y), std::invalid_argument);
  // Unreduced input is reduced on the way in.
  const Json unreduced = Json::parse(R"([{"exponent":[1,0],"num":"2","den":"-4"}])");
  CHECK(poly_from_json(unreduced, y).coefficient(Exponent({1, 0})) == Rational(-1, 2));
}

TEST_CASE("big numbers are strings") {
  CHECK(to_json(factorial(25)).get<std::string>() == "15511210043330985984000000");
  CHECK(to_json(Rational(-1, 3)).get<std::string>() == "-1/3");
}

TEST_CASE("disc count table JSON") {
  const Json j = to_json(disc_counts(1));
  CHECK(j["n"] == 1);
  CHECK(j["total"] == "2");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["alpha"] == Json::array({0, 2}));
  CHECK(j["rows"][1]["count"] == "0");
}

TEST_CASE("ring monomial and block map JSON") {
  const RingMonomial m{2, 1, {2, 0, 1}};
  const Json j = to_json(m);
  CHECK(j.dump() == R"({"t":1,"x":[2,0,1]})");
  CHECK(monomial_from_json(2, j) == m);
  const Json b = to_json(pushforward_of_t(1, product_polynomial(1)));
  CHECK(b["blocks"].dump() == R"([["0","1 * x0^1 x1^1"],["1","0"]])");
}

TEST_CASE("dimension report JSON") {
  const Json j = to_json(a_side_dim(2, 0, 1));
  CHECK(j["a_side"] == "4");
  CHECK(j["b_side"] == "4");
  CHECK(j["match"] == true);
  CHECK(j["blocks"] == Json::array({"3", "1", "0"}));
}
