#include <doctest.h>

#include "placto/alphabet.hpp"

using namespace placto;

TEST_CASE("natural and dual natural orders") {
  auto N = Alphabet::natural();
  CHECK(N.less(Letter::positive(1), Letter::positive(2)));
  auto Nv = Alphabet::natural_dual();
  // 2^v < 1^v
  CHECK(Nv.less(Letter::negative(2), Letter::negative(1)));
  CHECK_FALSE(Nv.contains(Letter::positive(1)));
  CHECK(N.dual() == Nv);
  CHECK(N.dual_of(Letter::positive(3)) == Letter::negative(3));
}

TEST_CASE("finite graded alphabets") {
  auto A = Alphabet::finite("011");
  CHECK(A.size() == 3);
  CHECK(A.degree(Letter::positive(1)) == 0);
  CHECK(A.degree(Letter::positive(3)) == 1);
  CHECK(A.degree_counts() == std::make_pair(1, 2));
  CHECK_FALSE(A.contains(Letter::positive(4)));
  auto Av = A.dual();
  auto letters = Av.letters();
  REQUIRE(letters.size() == 3);
  for (std::size_t k = 1; k < letters.size(); ++k) CHECK(Av.less(letters[k - 1], letters[k]));
  CHECK(Av.dual() == A);
}

TEST_CASE("gluing puts the left alphabet below") {
  auto A = Alphabet::finite("0");
  auto G = A.glue(Alphabet::natural());
  auto b = A.glued_right(Letter::positive(1));
  CHECK(G.less(Letter::positive(1), b));
  CHECK(G.contains(b));
}

TEST_CASE("alphabet and letter text round trips") {
  for (const char* s : {"N", "Nv", "[01]", "[10]v", "[0]*N"}) {
    auto A = Alphabet::parse(s);
    CHECK(A.to_string() == s);
  }
  auto A = Alphabet::parse("[01]*N");
  for (const auto& a : A.letters_capped(3)) CHECK(letter_from_string(letter_to_string(a, A), A) == a);
  CHECK(parse_letter_token("4v") == Letter::negative(4));
  CHECK(letter_token(Letter::positive(7)) == "7");
  CHECK_THROWS(Alphabet::parse("[012]"));
}
