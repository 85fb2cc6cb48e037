#include <doctest.h>

#include <algorithm>

#include "placto/knuth.hpp"
#include "util.hpp"

using namespace placto;
using testutil::rows_of;

TEST_CASE("single insertions") {
  auto N = Alphabet::natural();
  auto r = column_insert(Letter::positive(1), Tableau::empty(N));
  CHECK(r.result == rows_of({"1"}));
  CHECK(row_insert(rows_of({"1 1"}), Letter::positive(1)).result == rows_of({"1 1 1"}));
  // column insertion appends on the right of w_col: 1 2 is a column, 2 1 a row
  CHECK(column_tableau(parse_word("1 2"), N) == rows_of({"1", "2"}));
  CHECK(column_tableau(parse_word("2 1"), N) == rows_of({"1 2"}));
}

TEST_CASE("column insertion of a column word reproduces the tableau") {
  auto V = rows_of({"1 1 2", "2 2 3", "3 4"});
  CHECK(to_string(column_word(V)) == "2 3 1 2 4 1 2 3");
  CHECK(column_tableau(column_word(V), Alphabet::natural()) == V);
  for (const auto& A : testutil::small_alphabets())
    for (const auto& t : testutil::straight_tableaux(A, 5, 2)) {
      CHECK(column_tableau(column_word(t), A) == t);
      Word w = row_word(t);
      std::reverse(w.begin(), w.end());
      CHECK(row_insert_word(Tableau::empty(A), w) == t);
    }
}

TEST_CASE("insertions stay semistandard and reverse exactly") {
  for (const auto& A : testutil::small_alphabets())
    for (const auto& t : testutil::straight_tableaux(A, 4, 2))
      for (const auto& a : A.letters()) {
        auto c = column_insert(a, t);
        CHECK(is_semistandard(c.result));
        CHECK(c.result.size() == t.size() + 1);
        auto [t1, a1] = reverse_column_insert(c.result, c.added);
        CHECK(t1 == t);
        CHECK(a1 == a);
        auto r = row_insert(t, a);
        CHECK(is_semistandard(r.result));
        auto [t2, a2] = reverse_row_insert(r.result, r.added);
        CHECK(t2 == t);
        CHECK(a2 == a);
      }
}

TEST_CASE("S <- T agrees with S -> T") {
  for (const auto& A : testutil::small_alphabets()) {
    auto ts = testutil::straight_tableaux(A, 3, 2);
    for (const auto& s : ts)
      for (const auto& t : ts) CHECK(row_insert_tableau(s, t) == insert_tableau(s, t).result);
  }
}

TEST_CASE("jeu de taquin after removal from the first column") {
  CHECK(jdt_remove_first_column(rows_of({"1"}), 1).empty());
  CHECK(jdt_remove_first_column(rows_of({"1 2", "2"}), 2) == rows_of({"1 2"}));
  CHECK(jdt_remove_first_column(rows_of({"1 1", "2"}), 1) == rows_of({"1", "2"}));
  // oracle: rectification preserves the Knuth class of the remaining word
  auto N = Alphabet::natural();
  for (const auto& s : testutil::straight_tableaux(N, 6, 4))
    for (int r = 1; r <= s.shape().outer.column(1); ++r) {
      auto got = jdt_remove_first_column(s, r);
      CHECK(is_semistandard(got));
      Word w = column_word(s);
      // column 1 is read last, top to bottom
      std::size_t pos = w.size() - static_cast<std::size_t>(s.shape().outer.column(1)) + static_cast<std::size_t>(r - 1);
      w.erase(w.begin() + static_cast<long>(pos));
      CHECK(got == column_tableau(w, N));
    }
}

TEST_CASE("reverse slides undo forward slides") {
  auto N = Alphabet::natural();
  for (const auto& s : testutil::straight_tableaux(N, 5, 3))
    for (int r = 1; r <= s.shape().outer.column(1); ++r) {
      Rows rows = s.rows();
      Letter removed = rows[static_cast<std::size_t>(r - 1)][0];
      Cell end = jdt_forward_slide(rows, N, Cell{r, 1});
      if (end.row > static_cast<int>(rows.size())) rows.emplace_back();
      rows[static_cast<std::size_t>(end.row - 1)].push_back(removed);
      Cell hole = end;
      while (!(hole.col == 1 && hole.row == r)) REQUIRE(jdt_reverse_step(rows, N, hole));
      rows[static_cast<std::size_t>(r - 1)][0] = removed;
      CHECK(Tableau::straight(N, rows) == s);
    }
}
