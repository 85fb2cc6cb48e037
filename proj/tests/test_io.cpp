#include <doctest.h>

#include "placto/io.hpp"
#include "util.hpp"

using namespace placto;

TEST_CASE("tableau JSON round trip") {
  std::vector<Alphabet> alphabets = testutil::small_alphabets();
  alphabets.push_back(Alphabet::natural());
  for (const auto& A : alphabets)
    for (const auto& t : testutil::skew_tableaux(A, 3, 2)) {
      Json j = to_json(t);
      CHECK(tableau_from_json(j) == t);
      CHECK(to_json(tableau_from_json(Json::parse(j.dump()))).dump() == j.dump());
    }
  for (const auto& t : testutil::straight_tableaux(Alphabet::natural(), 3, 3)) {
    Tableau d = dual_tableau(t);
    CHECK(tableau_from_json(to_json(d)) == d);
  }
  Json bad = to_json(testutil::rows_of({"2 1"}));
  CHECK_THROWS_AS(tableau_from_json(bad), std::invalid_argument);
  Json extra = to_json(testutil::rows_of({"1"}));
  extra["colour"] = "red";
  CHECK_THROWS_AS(tableau_from_json(extra), std::invalid_argument);
}

TEST_CASE("matrix JSON round trip") {
  for (const auto& A : testutil::small_alphabets())
    for (const auto& B : {Alphabet::natural(), Alphabet::natural_dual(), Alphabet::finite("01")})
      for (const auto& m : enumerate_matrices(A, B, 2, 2)) {
        Json j = to_json(m);
        CHECK(matrix_from_json(Json::parse(j.dump())) == m);
      }
  Json j = Json::parse(R"({"rows":"[1]","cols":"N","entries":[["b:1","1",2]]})");
  CHECK_THROWS(matrix_from_json(j));
}

TEST_CASE("coefficients and reports") {
  LaurentPoly p = LaurentPoly::t(2) - LaurentPoly(mpq_class(1, 3), -1);
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"([{"den":"3","exp":-1,"num":"-1"},{"den":"1","exp":2,"num":"1"}])");
  Report r;
  r.name = "x";
  r.check(false, "broken");
  Json j = to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["failures"].size() == 1);
  CHECK(j["stats"].contains("domain_size"));
  auto x = PlacticElement::of_word(parse_word("1v 1"));
  Json px = to_json(x);
  REQUIRE(px.size() == 1);
  CHECK(px[0]["pair"]["S"]["rows"] == Json::parse(R"([["2"]])"));
  auto sa = SAlgebraElement::basis({1}, {1});
  CHECK(to_json(sa)[0]["mu"] == Json::parse("[1]"));
}
