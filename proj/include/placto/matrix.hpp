#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "placto/alphabet.hpp"
#include "placto/tableau.hpp"

namespace placto {

struct LetterPairLess {
  bool operator()(const std::pair<Letter, Letter>& a, const std::pair<Letter, Letter>& b) const {
    LetterKeyLess k;
    if (k(a.first, b.first)) return true;
    if (k(b.first, a.first)) return false;
    return k(a.second, b.second);
  }
};

/// Sparse nonnegative integer matrix with rows indexed by one graded
/// alphabet and columns by another. Entries at (i,j) with |i| != |j| are 0
/// or 1.
class GeneralizedMatrix {
 public:
  using Entries = std::map<std::pair<Letter, Letter>, long, LetterPairLess>;

  GeneralizedMatrix() = default;
  GeneralizedMatrix(Alphabet rows, Alphabet cols) : rows_(std::move(rows)), cols_(std::move(cols)) {}

  const Alphabet& row_alphabet() const { return rows_; }
  const Alphabet& col_alphabet() const { return cols_; }
  const Entries& entries() const { return entries_; }

  long at(const Letter& i, const Letter& j) const;
  /// Validates membership and the degree constraint.
  void set(const Letter& i, const Letter& j, long value);
  void add(const Letter& i, const Letter& j, long value = 1);
  long total() const;
  bool is_zero() const { return entries_.empty(); }

  Weight row_weight() const;
  Weight col_weight() const;

  /// Same entries indexed by (j, i).
  GeneralizedMatrix transpose() const;

  friend bool operator==(const GeneralizedMatrix&, const GeneralizedMatrix&) = default;

 private:
  Alphabet rows_;
  Alphabet cols_;
  Entries entries_;
};

struct Biword {
  Word top;
  Word bottom;
  friend bool operator==(const Biword&, const Biword&) = default;
};

/// Strict biword order on pairs (i,j) in A x B.
bool biword_less(const Alphabet& A, const Alphabet& B, const std::pair<Letter, Letter>& x,
                 const std::pair<Letter, Letter>& y);

Biword matrix_to_biword(const GeneralizedMatrix& m);
/// Throws std::invalid_argument if the pairs are out of order or a mixed
/// degree pair repeats.
GeneralizedMatrix biword_to_matrix(const Biword& bw, const Alphabet& A, const Alphabet& B);

/// All matrices with total at most total_cap, letters of natural alphabets
/// restricted to 1..col_cap. Deterministic order.
std::vector<GeneralizedMatrix> enumerate_matrices(const Alphabet& A, const Alphabet& B, int total_cap, int col_cap);

/// Matrices whose total is exactly n.
std::vector<GeneralizedMatrix> enumerate_matrices_exact(const Alphabet& A, const Alphabet& B, int n, int col_cap);

std::string to_string(const GeneralizedMatrix& m);

}  // namespace placto
