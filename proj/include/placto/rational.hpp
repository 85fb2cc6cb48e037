#pragma once

#include <tuple>
#include <utility>

#include "placto/knuth.hpp"
#include "placto/tableau.hpp"

namespace placto {

/// A rational semistandard pair (S,T): S straight over N, T over N^v of a
/// rotated straight shape nu^v.
struct RationalPair {
  Tableau S = Tableau::empty(Alphabet::natural());
  Tableau T = Tableau::empty(Alphabet::natural_dual(), {}, true);

  const Partition& mu() const { return S.shape().outer; }
  const Partition& nu() const { return T.shape().outer; }
  /// T^v, a straight tableau over N.
  Tableau t_dual() const { return dual_tableau(T); }

  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

/// Builds a pair from S over N and T^v over N (both straight); validates.
RationalPair pair_from_duals(const Tableau& s, const Tableau& t_dual);
/// Builds and validates a pair.
RationalPair make_rational_pair(const Tableau& s, const Tableau& t);

/// The column condition: for all k >= 1,
/// #{i : S(i,1) <= k} + #{i : T^v(i,1) <= k} <= k.
bool check_pair_condition(const Tableau& s, const Tableau& t);
bool is_rational_pair(const RationalPair& p);

/// a -> (S,T); `row` receives the row of S that grew.
RationalPair insert_positive(const Letter& a, const RationalPair& p, int* row = nullptr);
/// Undoes insert_positive given the row of S that grew.
std::pair<RationalPair, Letter> insert_positive_inverse(const RationalPair& p, int row);

struct DualInsertion {
  RationalPair pair;
  int epsilon = 0;  // 1 when a box of S was cancelled
  int row = 0;      // row of S that shrank (epsilon 1) or row of T^v that grew
};
/// (S,T) <- a^v for a letter a^v of N^v.
DualInsertion insert_dual(const RationalPair& p, const Letter& a);
/// Undoes insert_dual given its outcome (epsilon and row). Returns the
/// previous pair and the inserted letter a^v.
std::pair<RationalPair, Letter> insert_dual_inverse(const RationalPair& p, int epsilon, int row);

/// Folds a word over N u N^v into (empty, empty) from the left; returns the
/// pair and the number of cancellations.
std::pair<RationalPair, int> insert_word(const Word& w, const RationalPair& start = {});

/// (T over N^v of shape nu^v, S over N of shape mu) ->
/// (w_col(S) -> (empty, T)).
RationalPair bijection_31(const Tableau& t_dual, const Tableau& s_pos);
/// Inverse of bijection_31: (T, S).
std::pair<Tableau, Tableau> bijection_31_inverse(const RationalPair& p);

struct Bijection32 {
  RationalPair pair;
  Tableau lr_plus;   // iota(U_+) in LR^mu_{sigma lambda}
  Tableau lr_minus;  // j(U_-)_R in LR^nu_{tau lambda}
};
/// (S in B_mu, T in B^v_nu) -> ((S,empty) <- w_col(T), iota(U_+), j(U_-)_R).
Bijection32 bijection_32(const Tableau& s, const Tableau& t);
/// Inverse of bijection_32: (S, T).
std::pair<Tableau, Tableau> bijection_32_inverse(const RationalPair& p, const Tableau& lr_plus, const Tableau& lr_minus);

struct ExtLR {
  Partition lambda;
  Tableau tv;  // in B^v_{nu/lambda}
  Tableau u;   // in B_{mu/lambda}
};
/// B_mu x B^v_nu -> union over lambda of B^v_{nu/lambda} x B_{mu/lambda}.
ExtLR ext_lr(const Tableau& s, const Tableau& t);
std::pair<Tableau, Tableau> ext_lr_inverse(const ExtLR& x);

}  // namespace placto
