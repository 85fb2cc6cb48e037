#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "placto/alphabet.hpp"
#include "placto/partition.hpp"

namespace placto {

using Word = std::vector<Letter>;
using Rows = std::vector<std::vector<Letter>>;

/// Sparse content vector: letter -> multiplicity (may be negative in crystal
/// contexts).
using Weight = std::map<Letter, long, LetterKeyLess>;

/// A filling of a skew shape by letters of an alphabet.
///
/// Entries are stored in the coordinates of the unrotated skew shape
/// outer/inner: `rows()[i-1]` holds the cells (i, inner_i+1 .. outer_i).
/// A rotated tableau is displayed turned by 180 degrees; it has shape
/// (outer/inner)^v, and dual() of a straight-oriented tableau is the rotated
/// one with every letter dualized in place.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Alphabet alphabet, SkewShape shape, Rows rows, bool rotated = false);
  /// Straight shape deduced from the row lengths.
  static Tableau straight(Alphabet alphabet, Rows rows);
  static Tableau empty(Alphabet alphabet, Partition inner = {}, bool rotated = false);

  const Alphabet& alphabet() const { return alphabet_; }
  const SkewShape& shape() const { return shape_; }
  bool rotated() const { return rotated_; }
  const Rows& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  bool empty() const { return size() == 0; }

  /// Entry at a cell of outer/inner (stored coordinates).
  const Letter& at(int i, int j) const;
  /// Column j top to bottom (stored coordinates).
  std::vector<Letter> column(int j) const;

  struct DisplayCell {
    int row;
    int col;
    Letter letter;
  };
  /// Cells in the displayed orientation, row-major.
  std::vector<DisplayCell> display_cells() const;
  /// Displayed rows, top to bottom, each listed left to right.
  Rows display_rows() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Alphabet alphabet_;
  SkewShape shape_;
  Rows rows_;
  bool rotated_ = false;
};

/// H_nu: row i filled with i.
Tableau highest_tableau(const Partition& nu);
/// L_nu over -N (encoded as N^v, -m <-> m^v): L_nu(i,j) = -nu'_j + i - 1.
Tableau lowest_bar_tableau(const Partition& nu);

bool is_semistandard(const Tableau& t);

/// Columns right to left, each top to bottom (displayed orientation).
Word column_word(const Tableau& t);
/// Rows top to bottom, each right to left (displayed orientation).
Word row_word(const Tableau& t);

Weight weight(const Word& w);
Weight weight(const Tableau& t);
Weight& operator+=(Weight& a, const Weight& b);

/// 180-degree rotation with every letter replaced by its dual.
Tableau dual_tableau(const Tableau& t);
/// S * T over alphabet(S).glue(alphabet(T)); sh(S) = mu straight, sh(T) = lambda/mu.
Tableau glue(const Tableau& s, const Tableau& t);

std::string to_string(const Tableau& t);
std::string to_string(const Word& w);
/// Parses "1 2v 3" style words over N u N^v.
Word parse_word(const std::string& text);

}  // namespace placto
