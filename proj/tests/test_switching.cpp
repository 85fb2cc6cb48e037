#include <doctest.h>

#include "placto/knuth.hpp"
#include "util.hpp"

using namespace placto;

TEST_CASE("switching a single box") {
  auto N = Alphabet::natural();
  Tableau t(N, SkewShape(Partition{2}, Partition{1}), {parse_word("1")});
  auto [j, r] = switch_rectify(t);
  CHECK(j == testutil::rows_of({"1"}));
  CHECK(r == t);
  auto [j0, r0] = switch_rectify(testutil::rows_of({"1 2"}));
  CHECK(j0 == testutil::rows_of({"1 2"}));
  CHECK(r0.empty());
}

TEST_CASE("switching is schedule independent and invertible") {
  std::vector<Alphabet> alphabets = testutil::small_alphabets();
  alphabets.push_back(Alphabet::natural());
  for (const auto& A : alphabets)
    for (const auto& t : testutil::skew_tableaux(A, 4, 2)) {
      auto a = switch_rectify(t, SwitchOrder::ColumnMajor);
      auto b = switch_rectify(t, SwitchOrder::RowMajor);
      auto c = switch_rectify(t, SwitchOrder::Reverse);
      CHECK(a == b);
      CHECK(a == c);
      CHECK(is_semistandard(a.first));
      CHECK(a.first.shape().straight());
      CHECK(is_lr_tableau(a.second));
      CHECK(lr_content(a.second) == t.shape().inner);
      CHECK(switch_rectify_inverse(a.first, a.second) == t);
      // rectification preserves the Knuth class for ordinary alphabets
      if (A.degree_counts().second == 0) CHECK(a.first == column_tableau(column_word(t), A));
    }
}

TEST_CASE("j restricts to LR tableaux and sends bar LR to LR") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_inside(lam))
        for (const auto& nu : partitions_of(n - mu.size()))
          for (const auto& q : enumerate_lr(lam, mu, nu)) {
            auto [j, r] = switch_rectify(q);
            CHECK(j == highest_tableau(nu));
            CHECK(is_lr_tableau(r));
            CHECK(r.shape() == SkewShape(lam, nu));
          }
  auto Nv = Alphabet::natural_dual();
  for (const auto& u : testutil::skew_tableaux(Nv, 4, 3)) {
    if (!is_lr_bar_tableau(u)) continue;
    auto [j, r] = switch_rectify(u);
    CHECK(j == lowest_bar_tableau(j.shape().outer));
    CHECK(is_lr_tableau(r));
  }
}
