#include <doctest.h>

#include "placto/tableau.hpp"

using namespace placto;

TEST_CASE("highest and lowest tableaux") {
  auto h = highest_tableau(Partition{3, 1});
  CHECK(is_semistandard(h));
  CHECK(to_string(column_word(h)) == "1 1 1 2");
  CHECK(to_string(row_word(h)) == "1 1 1 2");
  auto l = lowest_bar_tableau(Partition{2, 1});
  CHECK(is_semistandard(l));
  // L_(2,1) = [[-2,-1],[-1]]
  CHECK(l.at(1, 1) == Letter::negative(2));
  CHECK(l.at(1, 2) == Letter::negative(1));
  CHECK(l.at(2, 1) == Letter::negative(1));
}

TEST_CASE("reading words of a straight tableau") {
  auto t = Tableau::straight(Alphabet::natural(), {parse_word("1 2 4"), parse_word("3 5")});
  CHECK(is_semistandard(t));
  CHECK(to_string(column_word(t)) == "4 2 5 1 3");
  CHECK(to_string(row_word(t)) == "4 2 1 5 3");
}

TEST_CASE("super semistandardness") {
  auto A = Alphabet::finite("01");
  Letter a = Letter::positive(1), b = Letter::positive(2);
  // even letters repeat along rows, odd letters down columns
  CHECK(is_semistandard(Tableau::straight(A, {{a, a}})));
  CHECK_FALSE(is_semistandard(Tableau::straight(A, {{a}, {a}})));
  CHECK_FALSE(is_semistandard(Tableau::straight(A, {{b, b}})));
  CHECK(is_semistandard(Tableau::straight(A, {{b}, {b}})));
  CHECK(is_semistandard(Tableau::straight(A, {{a, b}, {b}})));
}

TEST_CASE("dual tableau is a rotation with dualized letters") {
  auto t = Tableau::straight(Alphabet::natural(), {parse_word("1 1 2"), parse_word("2")});
  auto d = dual_tableau(t);
  CHECK(d.rotated());
  CHECK(is_semistandard(d));
  auto rows = d.display_rows();
  REQUIRE(rows.size() == 2);
  CHECK(to_string(rows[0]) == "2v");
  CHECK(to_string(rows[1]) == "2v 1v 1v");
  CHECK(dual_tableau(d) == t);
  // w_col(T^v) is the dualized reverse of w_col(T)
  auto wc = column_word(t);
  auto wd = column_word(d);
  REQUIRE(wc.size() == wd.size());
  for (std::size_t k = 0; k < wc.size(); ++k) CHECK(wd[k] == wc[wc.size() - 1 - k].dualized());
}

TEST_CASE("gluing a straight and a skew tableau") {
  auto A = Alphabet::finite("0");
  auto s = Tableau::straight(A, {{Letter::positive(1)}});
  auto t = Tableau(Alphabet::natural(), SkewShape(Partition{2, 1}, Partition{1}), {parse_word("1"), parse_word("1")});
  auto g = glue(s, t);
  CHECK(g.shape().outer == Partition({2, 1}));
  CHECK(is_semistandard(g));
}
