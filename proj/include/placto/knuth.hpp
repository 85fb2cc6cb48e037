#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "placto/matrix.hpp"
#include "placto/tableau.hpp"

namespace placto {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Result of a single insertion and the cell it created.
struct InsertionRecord {
  Tableau result;
  Cell added;
};

/// a -> T (super column insertion into a straight tableau).
InsertionRecord column_insert(const Letter& a, const Tableau& t);
/// T <- a (super row insertion into a straight tableau).
InsertionRecord row_insert(const Tableau& t, const Letter& a);

/// Removes the corner `cell` by reverse column bumping and returns the letter
/// expelled from the first column.
std::pair<Tableau, Letter> reverse_column_insert(const Tableau& t, Cell cell);
/// Removes the corner `cell` by reverse row bumping and returns the letter
/// expelled from the first row.
std::pair<Tableau, Letter> reverse_row_insert(const Tableau& t, Cell cell);

/// (w -> T): w_1 is inserted first.
Tableau column_insert_word(const Word& w, const Tableau& t);
/// (T <- w): w_1 is inserted first.
Tableau row_insert_word(const Tableau& t, const Word& w);
/// (w -> empty) over A.
Tableau column_tableau(const Word& w, const Alphabet& A);

/// ((T -> S), (T -> S)_R) where the recording tableau over N has shape
/// sh(T -> S)/sh(S) and records the row of T each inserted letter came from.
struct TableauInsertion {
  Tableau result;
  Tableau recording;
};
TableauInsertion insert_tableau(const Tableau& t, const Tableau& s);
/// S <- (w_row(T))^rev.
Tableau row_insert_tableau(const Tableau& s, const Tableau& t);

/// The bijection (S,T) -> ((T -> S), (T -> S)_R).
TableauInsertion lr_bijection(const Tableau& s, const Tableau& t);
/// Inverse of lr_bijection: recovers (S,T) from the product and an LR
/// recording tableau. S lives over the alphabet of `product`.
std::pair<Tableau, Tableau> lr_bijection_inverse(const Tableau& product, const Tableau& recording);

/// Empties the cell (row, 1) of a straight tableau and slides the hole out
/// by forward jeu de taquin. Returns the tableau with one cell fewer.
Tableau jdt_remove_first_column(const Tableau& s, int row);
/// Forward slide of a hole at `hole` inside the filled cells of a straight
/// shape; returns the vacated outer corner.
Cell jdt_forward_slide(Rows& rows, const Alphabet& A, Cell hole);
/// Reverse slide one step: moves the larger of the left and upper neighbours
/// into the hole. Returns false when the hole has neither.
bool jdt_reverse_step(Rows& rows, const Alphabet& A, Cell& hole);

/// Lattice condition on w_col (prefix counts of i dominate i+1).
bool is_lr_tableau(const Tableau& u);
/// Suffix lattice condition for tableaux over -N encoded as N^v.
bool is_lr_bar_tableau(const Tableau& u);
/// Content of an LR tableau as a partition; throws if not a partition.
Partition lr_content(const Tableau& u);
/// All tableaux in LR^lambda_{mu nu}, ordered by column word.
std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu, const Partition& nu);
/// c^lambda_{mu nu}; 0 when sizes or containment do not match. Memoized,
/// safe for concurrent use.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// iota: V in SST_N(nu) with (V -> H_mu) = H_lambda to LR^lambda_{mu nu}.
Tableau iota(const Tableau& v, const Partition& mu);
Tableau iota_inverse(const Tableau& u);

/// Visiting order of the switching scan.
enum class SwitchOrder { ColumnMajor, RowMajor, Reverse };

/// Tableau switching of X (straight, alphabet of X) and Y (shape
/// lambda/sh(X)): whenever an X-entry lies directly above or left of a
/// Y-entry and exchanging them keeps conditions (S1)-(S3), exchange them,
/// until no switch applies. Returns (Y' straight, X' of shape lambda/sh(Y')).
/// The operation is an involution.
std::pair<Tableau, Tableau> switch_tableaux(const Tableau& x, const Tableau& y,
                                            SwitchOrder order = SwitchOrder::ColumnMajor);

/// j-map: T in SST_A(lambda/mu) -> (j(T) in SST_A(nu), j(T)_R in LR^lambda_{nu mu}).
std::pair<Tableau, Tableau> switch_rectify(const Tableau& t, SwitchOrder order = SwitchOrder::ColumnMajor);
/// Inverse of switch_rectify; throws if the recovered inner tableau is not H_mu.
Tableau switch_rectify_inverse(const Tableau& j, const Tableau& r);

/// Super RSK: A -> (P(A) over cols, Q(A) over rows).
std::pair<Tableau, Tableau> rsk(const GeneralizedMatrix& m);
GeneralizedMatrix rsk_inverse(const Tableau& p, const Tableau& q);

/// A -> (P(A')^v, Q(A')) with A' in M_{A, B^v}.
std::pair<Tableau, Tableau> dual_rsk(const GeneralizedMatrix& m);
GeneralizedMatrix dual_rsk_inverse(const Tableau& pv, const Tableau& q);

/// SST_B(mu) x M_{A,B} -> SST_B(lambda) x SST_A(lambda/mu).
std::pair<Tableau, Tableau> skew_rsk(const Tableau& t0, const GeneralizedMatrix& m);
/// Inverse of skew_rsk; the matrix alphabets are those of u and t1.
std::pair<Tableau, GeneralizedMatrix> skew_rsk_inverse(const Tableau& t1, const Tableau& u);

}  // namespace placto
