#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "placto/plactic.hpp"
#include "util.hpp"

using namespace placto;
using testutil::rows_of;

namespace {

Word W(const std::string& s) { return parse_word(s); }

RationalPair pair_of(const std::vector<std::string>& s, const std::vector<std::string>& tv) {
  Tableau S = s.empty() ? Tableau::empty(Alphabet::natural()) : rows_of(s);
  Tableau Tv = tv.empty() ? Tableau::empty(Alphabet::natural()) : rows_of(tv);
  return pair_from_duals(S, Tv);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

TEST_CASE("laurent polynomials") {
  LaurentPoly a = LaurentPoly::t(2) + LaurentPoly(mpq_class(1, 3));
  LaurentPoly b = LaurentPoly::t(-1) - LaurentPoly(1);
  CHECK((a * b).to_string() == "-t^2 + t - 1/3 + 1/3*t^-1");
  CHECK((a - a).is_zero());
  CHECK((a * LaurentPoly(0)).is_zero());
  CHECK((a * b).at_one() == 0);
  CHECK(a * (b + a) == a * b + a * a);
  CHECK(LaurentPoly::t(3).shifted(-3) == LaurentPoly(1));
  CHECK((-b).to_string() == "1 - t^-1");
}

TEST_CASE("normalize_word examples") {
  NormalForm e = normalize_word({});
  CHECK(e.epsilon == 0);
  CHECK(e.pair == RationalPair{});

  NormalForm c = normalize_word(W("1 1v"));
  CHECK(c.epsilon == 1);
  CHECK(c.pair == RationalPair{});

  NormalForm x = normalize_word(W("1v 1"));
  CHECK(x.epsilon == 0);
  CHECK(x.pair == pair_of({"2"}, {"2"}));
  CHECK(to_string(canonical_word(x)) == "2 2v");
  CHECK(canonical_word(e).empty());
}

TEST_CASE("canonical words are normalization fixpoints") {
  for (const auto& p : testutil::rational_pairs(3, 4)) {
    NormalForm nf = normalize_word(canonical_word(p));
    CHECK(nf.pair == p);
    CHECK(nf.epsilon == 0);
  }
}

TEST_CASE("multiplication") {
  auto u1 = PlacticElement::basis(pair_of({"1"}, {}));
  auto u1v = PlacticElement::basis(pair_of({}, {"1"}));
  CHECK(multiply(u1, u1v) == PlacticElement::one().scaled(LaurentPoly::t()));
  CHECK(multiply(u1v, u1) == PlacticElement::basis(pair_of({"2"}, {"2"})));

  auto basis = testutil::rational_pairs(2, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = PlacticElement::basis(basis[pick(rng)], LaurentPoly(mpq_class(trial + 1, 3)));
    auto y = PlacticElement::basis(basis[pick(rng)]) + PlacticElement::basis(basis[pick(rng)], LaurentPoly::t(-1));
    auto z = PlacticElement::basis(basis[pick(rng)], LaurentPoly::t(2));
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(multiply(PlacticElement::one(), x) == x);
    CHECK(multiply(x, PlacticElement::one()) == x);
    CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));
  }
}

TEST_CASE("of_word agrees with products of letters") {
  for (const auto& w : mixed_words(4, 2)) {
    PlacticElement prod = PlacticElement::one();
    for (const auto& a : w) prod = prod * PlacticElement::of_word({a});
    CHECK(prod == PlacticElement::of_word(w));
  }
}

TEST_CASE("defining relations") {
  CHECK(normalize_word(W("1 1 2")) == normalize_word(W("1 2 1")));
  CHECK(normalize_word(W("2 1v")) == normalize_word(W("1v 2")));
  CHECK(normalize_word(W("1 3 2")) == normalize_word(W("3 1 2")));
  CHECK(normalize_word(W("2v 3v 1v")) == normalize_word(W("2v 1v 3v")));
  // the relation with the first two letters swapped does not hold
  CHECK_FALSE(normalize_word(W("2 1 3")) == normalize_word(W("1 2 3")));
  for (int n = 2; n <= 4; ++n) {
    Report r = verify_defining_relations(n, 50, 11);
    CHECK(r.ok());
    for (const auto& f : r.failures) MESSAGE(f);
  }
}

TEST_CASE("crystal operators") {
  CHECK(crystal_f(W("1"), 1) == W("2"));
  CHECK(crystal_e(W("2"), 1) == W("1"));
  CHECK(crystal_f(W("2v"), 1) == W("1v"));
  CHECK(crystal_e(W("1v"), 1) == W("2v"));
  for (int i = 1; i <= 3; ++i) {
    CHECK_FALSE(crystal_f(W("1 1v"), i).has_value());
    CHECK_FALSE(crystal_e(W("1 1v"), i).has_value());
  }
  CHECK(crystal_wt(W("1 1v")).empty());
  CHECK(crystal_wt(W("1 2")) == std::map<int, long>{{1, 1}, {2, 1}});
  CHECK(crystal_wt(W("2v")) == std::map<int, long>{{2, -1}});

  // Two-fold tensor rule, checked letterwise against the signature rule.
  for (const auto& w : mixed_words(2, 3)) {
    if (w.size() != 2) continue;
    for (int i = 1; i <= 3; ++i) {
      Word b1{w[0]}, b2{w[1]};
      std::optional<Word> f, e;
      if (crystal_phi(b1, i) > crystal_epsilon(b2, i)) {
        if (auto x = crystal_f(b1, i)) f = Word{(*x)[0], w[1]};
      } else if (auto x = crystal_f(b2, i)) {
        f = Word{w[0], (*x)[0]};
      }
      if (crystal_phi(b1, i) >= crystal_epsilon(b2, i)) {
        if (auto x = crystal_e(b1, i)) e = Word{(*x)[0], w[1]};
      } else if (auto x = crystal_e(b2, i)) {
        e = Word{w[0], (*x)[0]};
      }
      CHECK(crystal_f(w, i) == f);
      CHECK(crystal_e(w, i) == e);
    }
  }

  for (const auto& w : mixed_words(4, 3)) {
    for (int i = 1; i <= 3; ++i) {
      if (auto f = crystal_f(w, i)) {
        CHECK(crystal_e(*f, i) == w);
        auto wt = crystal_wt(w), wf = crystal_wt(*f);
        CHECK(wf[i] == wt[i] - 1);
        CHECK(wf[i + 1] == wt[i + 1] + 1);
      }
      if (auto e = crystal_e(w, i)) CHECK(crystal_f(*e, i) == w);
      // phi - epsilon = <wt, h_i>
      auto wt = crystal_wt(w);
      CHECK(crystal_phi(w, i) - crystal_epsilon(w, i) == wt[i] - wt[i + 1]);
    }
  }
}

TEST_CASE("crystal operators commute with normalization") {
  for (const auto& w : mixed_words(4, 3)) {
    Word c = canonical_word(normalize_word(w));
    for (int i = 1; i <= 3; ++i) {
      for (bool raise : {false, true}) {
        auto a = raise ? crystal_e(w, i) : crystal_f(w, i);
        auto b = raise ? crystal_e(c, i) : crystal_f(c, i);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(normalize_word(*a).pair == normalize_word(*b).pair);
      }
    }
  }
}

TEST_CASE("crystal equivalence") {
  for (const auto& w : mixed_words(5, 3)) CHECK(crystal_equivalent(w, canonical_word(normalize_word(w))));
  CHECK(crystal_equivalent(W("1 1v"), {}));
  CHECK_FALSE(crystal_equivalent(W("1"), W("2")));
  auto a = W("1 2"), b = W("2 1v");
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  auto wa = crystal_wt(a), wb = crystal_wt(b), wab = crystal_wt(ab);
  for (const auto& [k, v] : wb) wa[k] += v;
  std::erase_if(wa, [](const auto& kv) { return kv.second == 0; });
  CHECK(wa == wab);
}

TEST_CASE("normal forms coincide with rewrite classes") {
  // Every word of length <= 5 over letters <= 3; edges are single relation
  // applications (deleting a factor 1 1v counts as one).
  auto words = mixed_words(5, 3);
  std::map<Word, std::size_t, WordKeyLess> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);
  UnionFind uf(words.size());
  auto rels = defining_relations(3);
  std::set<std::pair<std::size_t, std::size_t>> checked_edges;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Word& w = words[k];
    for (const auto& rel : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? rel.lhs : rel.rhs;
        const Word& to = dir == 0 ? rel.rhs : rel.lhs;
        if (from.size() > w.size()) continue;
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
          Word v(w.begin(), w.begin() + pos);
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), w.begin() + pos + from.size(), w.end());
          auto it = index.find(v);
          if (it == index.end()) continue;
          uf.unite(k, it->second);
          // each application preserves the normal form up to its t-power
          NormalForm a = normalize_word(w), b = normalize_word(v);
          b.epsilon += dir == 0 ? rel.t_power : -rel.t_power;
          CHECK(a == b);
        }
      }
    }
  }
  std::map<Word, std::set<std::size_t>, WordKeyLess> classes;
  for (std::size_t k = 0; k < words.size(); ++k) classes[canonical_word(normalize_word(words[k]))].insert(uf.find(k));
  std::size_t split = 0;
  for (const auto& [c, roots] : classes)
    if (roots.size() != 1) ++split;
  CHECK(split == 0);
}
