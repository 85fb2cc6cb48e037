#pragma once

#include <string>
#include <vector>

#include "placto/enumerate.hpp"
#include "placto/rational.hpp"
#include "placto/tableau.hpp"

namespace testutil {

using namespace placto;

// Every alphabet [1] and [2] with every degree signature.
inline std::vector<Alphabet> small_alphabets() {
  return {Alphabet::finite("0"), Alphabet::finite("1"), Alphabet::finite("00"),
          Alphabet::finite("01"), Alphabet::finite("10"), Alphabet::finite("11")};
}

// Straight tableau over N or N^v from rows like {"1 1 2", "2 3"}.
inline Tableau rows_of(const std::vector<std::string>& rows, const Alphabet& A = Alphabet::natural()) {
  Rows r;
  for (const auto& s : rows) r.push_back(parse_word(s));
  return Tableau::straight(A, r);
}

// All semistandard straight tableaux over A with at most n cells.
inline std::vector<Tableau> straight_tableaux(const Alphabet& A, int n, int cap) {
  std::vector<Tableau> out;
  for (const auto& lam : partitions_up_to(n))
    for (auto& t : enumerate_sst(SkewShape(lam), A, cap)) out.push_back(std::move(t));
  return out;
}

// All semistandard skew tableaux over A with at most n cells.
inline std::vector<Tableau> skew_tableaux(const Alphabet& A, int n, int cap) {
  std::vector<Tableau> out;
  for (int s = 0; s <= n + 2; ++s)
    for (const auto& outer : partitions_of(s))
      for (const auto& inner : partitions_inside(outer)) {
        if (outer.size() - inner.size() > n) continue;
        for (auto& t : enumerate_sst(SkewShape(outer, inner), A, cap)) out.push_back(std::move(t));
      }
  return out;
}

// All rational pairs with |mu| + |nu| <= n over letters <= cap.
inline std::vector<RationalPair> rational_pairs(int n, int cap) {
  std::vector<RationalPair> out;
  for (const auto& s : straight_tableaux(Alphabet::natural(), n, cap))
    for (const auto& tv : straight_tableaux(Alphabet::natural(), n - s.size(), cap)) {
      Tableau t = dual_tableau(tv);
      if (check_pair_condition(s, t)) out.push_back(RationalPair{s, t});
    }
  return out;
}

}  // namespace testutil
