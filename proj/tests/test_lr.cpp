#include <doctest.h>

#include <set>

#include "placto/knuth.hpp"
#include "util.hpp"

using namespace placto;
using testutil::rows_of;

namespace {

Tableau worked_iota_image() {
  // shape (5,4,2,1)/(3,1)
  Rows r{parse_word("1 1"), parse_word("1 2 2"), parse_word("2 3"), parse_word("3")};
  return Tableau(Alphabet::natural(), SkewShape(Partition{5, 4, 2, 1}, Partition{3, 1}), r);
}

}  // namespace

TEST_CASE("highest tableaux are LR tableaux") {
  for (const auto& nu : partitions_up_to(6)) {
    CHECK(is_lr_tableau(highest_tableau(nu)));
    CHECK(is_lr_bar_tableau(lowest_bar_tableau(nu)));
  }
  CHECK(is_lr_tableau(worked_iota_image()));
}

TEST_CASE("LR condition is Knuth equivalence to H_nu") {
  auto N = Alphabet::natural();
  for (const auto& u : testutil::skew_tableaux(N, 5, 3)) {
    auto p = column_tableau(column_word(u), N);
    bool knuth_highest = p == highest_tableau(p.shape().outer);
    CHECK(is_lr_tableau(u) == knuth_highest);
  }
}

TEST_CASE("bar LR condition is Knuth equivalence to L_nu") {
  auto Nv = Alphabet::natural_dual();
  for (const auto& nu : partitions_up_to(5)) CHECK(column_tableau(column_word(lowest_bar_tableau(nu)), Nv) == lowest_bar_tableau(nu));
  for (const auto& u : testutil::skew_tableaux(Nv, 4, 3)) {
    auto p = column_tableau(column_word(u), Nv);
    bool knuth_lowest = p == lowest_bar_tableau(p.shape().outer);
    CHECK(is_lr_bar_tableau(u) == knuth_lowest);
  }
}

TEST_CASE("LR coefficients") {
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coefficient(Partition{5, 4, 2, 1}, Partition{3, 1}, Partition{3, 3, 2}) >= 1);
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2}) == 0);
  // brute force: filter all semistandard fillings by content and lattice word
  auto N = Alphabet::natural();
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_inside(lam))
        for (const auto& nu : partitions_of(n - mu.size())) {
          long brute = 0;
          for (const auto& u : enumerate_sst(SkewShape(lam, mu), N, std::max(1, nu.length()))) {
            Weight w = weight(u);
            bool content = true;
            for (int i = 1; i <= nu.length(); ++i) content = content && w[Letter::positive(i)] == nu.row(i);
            if (content && is_lr_tableau(u)) ++brute;
          }
          CHECK(lr_coefficient(lam, mu, nu) == brute);
          CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
        }
}

TEST_CASE("iota on the worked example") {
  auto V = rows_of({"1 1 2", "2 2 3", "3 4"});
  CHECK(weight(V) == weight(parse_word("1 1 2 2 2 3 3 4")));
  auto u = iota(V, Partition{3, 1});
  CHECK(u == worked_iota_image());
  CHECK(iota_inverse(u) == V);
  auto g = glue(highest_tableau(Partition{3, 1}), u);
  CHECK(g.shape().outer == Partition({5, 4, 2, 1}));
  CHECK(iota(highest_tableau(Partition{2, 1}), Partition{}) == highest_tableau(Partition{2, 1}));
  CHECK_THROWS(iota(rows_of({"2"}), Partition{}));
}

TEST_CASE("iota round trip") {
  auto N = Alphabet::natural();
  int hits = 0;
  for (const auto& v : testutil::straight_tableaux(N, 3, 4))
    for (const auto& mu : partitions_up_to(3)) {
      auto ins = insert_tableau(v, highest_tableau(mu)).result;
      if (!(ins == highest_tableau(ins.shape().outer))) {
        CHECK_THROWS(iota(v, mu));
        continue;
      }
      ++hits;
      auto u = iota(v, mu);
      CHECK(is_lr_tableau(u));
      CHECK(u.shape().inner == mu);
      CHECK(iota_inverse(u) == v);
    }
  CHECK(hits > 10);
}

TEST_CASE("lr bijection") {
  auto N = Alphabet::natural();
  auto one = rows_of({"1"});
  auto r = lr_bijection(one, one);
  CHECK(r.result == rows_of({"1 1"}));
  CHECK(r.recording == Tableau(N, SkewShape(Partition{2}, Partition{1}), {parse_word("1")}));
  for (const auto& A : testutil::small_alphabets()) {
    auto ts = testutil::straight_tableaux(A, 2, 2);
    for (const auto& s : ts)
      for (const auto& t : ts) {
        auto b = lr_bijection(s, t);
        CHECK(is_semistandard(b.result));
        CHECK(is_lr_tableau(b.recording));
        CHECK(b.recording.shape().inner == s.shape().outer);
        CHECK(lr_content(b.recording) == t.shape().outer);
        auto [s2, t2] = lr_bijection_inverse(b.result, b.recording);
        CHECK(s2 == s);
        CHECK(t2 == t);
      }
  }
}
