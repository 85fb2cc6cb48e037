#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "placto/matrix.hpp"
#include "placto/rational.hpp"
#include "placto/report.hpp"
#include "placto/schur.hpp"

namespace placto {

// ---- main bijection --------------------------------------------------------

/// Straight tableau over N^v -> the element of B^v_nu in the same plactic
/// class (via the anti-automorphism reversing words and exchanging i, i^v).
Tableau straight_dual_to_bar(const Tableau& p);
/// Inverse of straight_dual_to_bar.
Tableau bar_to_straight_dual(const Tableau& k);
/// Reverses a word and toggles i <-> i^v.
Word reverse_dual(const Word& w);

/// Intermediate values of the main bijection.
struct MainTrace {
  Tableau px, qx;  // rsk(X): P over N, Q over A
  Tableau ky, qy;  // Y: element of B^v_nu and its recording tableau over B
  ExtLR ext;       // (lambda, V in B^v_{nu/lambda}, W in B_{mu/lambda})
  Tableau t0a;     // SST_A(lambda)
  Tableau t0b;     // SST_B(lambda)

  std::vector<std::string> lines() const;
};

struct BijectionResult {
  GeneralizedMatrix Yp;  // in M_{B,N^v}
  GeneralizedMatrix Xp;  // in M_{A,N}
  GeneralizedMatrix Z;   // in M_{A,B}
  std::optional<MainTrace> trace;
};

/// M_{A,N} x M_{B,N^v} -> M_{B,N^v} x M_{A,N} x M_{A,B}.
BijectionResult main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y, bool trace = false);
/// Recovers (X, Y).
std::pair<GeneralizedMatrix, GeneralizedMatrix> main_bijection_inverse(const GeneralizedMatrix& Yp,
                                                                      const GeneralizedMatrix& Xp,
                                                                      const GeneralizedMatrix& Z);
/// Weight additivity and u_X u_Y = t^|Z| u_Y' u_X', recomputed from scratch.
Report verify_main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y, const BijectionResult& r);
Report verify_main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y);

// ---- Cauchy products -------------------------------------------------------

/// Exponent vector over the letters of A followed by the letters of B.
using XMonomial = std::vector<int>;

struct CauchySeriesTerm {
  XMonomial monomial;
  SAlgebraElement coeff;
};

/// lambda admits a semistandard filling over A (hook condition).
bool in_partition_set(const Partition& lambda, const Alphabet& A);
/// Exponent vector of the weight of a tableau over a finite alphabet.
XMonomial monomial_of(const Tableau& t, const Alphabet& A);

/// Q(x_A) = sum_lambda s_lambda(u) s_lambda(x_A), terms of degree <= D.
std::vector<CauchySeriesTerm> cauchy_product_Q(const Alphabet& A, int D);
/// P(x_B) = sum_lambda s^v_lambda(u) s_lambda(x_B), terms of degree <= D.
std::vector<CauchySeriesTerm> cauchy_product_P(const Alphabet& B, int D);

/// Commutative kernel prod_{|a|!=|b|}(1 + t x_a x_b) / prod_{|a|=|b|}(1 - t x_a x_b)
/// over x_A followed by x_B, truncated at degree D.
std::map<XMonomial, LaurentPoly> cauchy_kernel(const Alphabet& A, const Alphabet& B, int D);

/// Q(x_A) P(x_B) = P(x_B) Q(x_A) * kernel, coefficientwise up to degree D.
Report verify_cauchy_identity(const Alphabet& A, const Alphabet& B, int D);

/// The same identity for the Schur-operator images, applied to every s_gamma
/// with |gamma| <= G. The operator series are built from their factor
/// products and cross-checked against the Schur-function closed forms; the
/// t = 1 specialization is checked against the skew Cauchy identity.
Report verify_operator_cauchy(const Alphabet& A, const Alphabet& B, int D, int G);

/// sum_lambda s_{lambda/alpha}(x_A) s_{lambda/beta}(x_B) =
/// sum_eta s_{beta/eta}(x_A) s_{alpha/eta}(x_B) * kernel(t=1), by tableau
/// enumeration, up to degree D.
Report verify_skew_cauchy(const Alphabet& A, const Alphabet& B, const Partition& alpha, const Partition& beta, int D);

// ---- LR words and the skew restriction --------------------------------------

/// Every prefix inserted into (H_alpha, empty) gives some (H_kappa, empty),
/// ending at H_beta.
bool is_lr_word_by_insertion(const Word& w, const Partition& alpha, const Partition& beta);
/// H_alpha (x) w is crystal equivalent to H_beta.
bool is_lr_word_by_crystal(const Word& w, const Partition& alpha, const Partition& beta);
/// Both characterizations; throws std::logic_error if they disagree.
bool is_lr_word(const Word& w, const Partition& alpha, const Partition& beta);

/// The concatenated bottom words u_X u_Y.
Word matrix_pair_word(const GeneralizedMatrix& first, const GeneralizedMatrix& second);

/// (P1, P2) in SST_A(lambda/alpha) x SST_B(lambda/beta) -> (X, Y) whose word
/// is an LR word of shape (alpha, beta).
std::pair<GeneralizedMatrix, GeneralizedMatrix> ss_encode(const Partition& alpha, const Partition& beta,
                                                          const Tableau& p1, const Tableau& p2);
std::pair<Tableau, Tableau> ss_encode_inverse(const Partition& alpha, const Partition& beta,
                                              const GeneralizedMatrix& X, const GeneralizedMatrix& Y);
/// (Y', X') with LR word of shape (alpha, beta) -> (Q1 in SST_A(beta/eta), Q2 in SST_B(alpha/eta)).
std::pair<Tableau, Tableau> ss_decode(const Partition& alpha, const Partition& beta, const GeneralizedMatrix& Yp,
                                      const GeneralizedMatrix& Xp);
std::pair<GeneralizedMatrix, GeneralizedMatrix> ss_decode_inverse(const Partition& alpha, const Partition& beta,
                                                                  const Tableau& q1, const Tableau& q2);

struct SaganStanleyResult {
  Tableau q1;           // SST_A(beta/eta)
  Tableau q2;           // SST_B(alpha/eta)
  GeneralizedMatrix z;  // M_{A,B}
  std::vector<Word> stage_words;  // words of every stage, each an LR word of shape (alpha, beta)
};

/// Skew Knuth correspondence as the restriction of the main bijection.
SaganStanleyResult sagan_stanley(const Partition& alpha, const Partition& beta, const Tableau& p1, const Tableau& p2);
std::pair<Tableau, Tableau> sagan_stanley_inverse(const Partition& alpha, const Partition& beta, const Tableau& q1,
                                                  const Tableau& q2, const GeneralizedMatrix& z);

/// Quadruple (LR^alpha_{eta tau}, LR^beta_{eta sigma}, LR^mu_{sigma zeta}, LR^nu_{tau zeta}).
struct LRQuadruple {
  Tableau a;  // LR^alpha_{eta tau}
  Tableau b;  // LR^beta_{eta sigma}
  Tableau c;  // LR^mu_{sigma zeta}
  Tableau d;  // LR^nu_{tau zeta}

  friend bool operator==(const LRQuadruple&, const LRQuadruple&) = default;
};
/// Restriction of bijection_32 to pairs whose word is an LR word of shape
/// (alpha, beta): (R1 in LR^lambda_{alpha mu}, R2 in LR^lambda_{beta nu}) -> quadruple.
LRQuadruple restricted_32(const Partition& alpha, const Partition& beta, const Tableau& r1, const Tableau& r2);
std::pair<Tableau, Tableau> restricted_32_inverse(const Partition& alpha, const Partition& beta, const LRQuadruple& q);

}  // namespace placto
