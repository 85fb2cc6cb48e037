#pragma once

#include <vector>

#include "placto/tableau.hpp"

namespace placto {

/// All semistandard fillings of a skew shape over A, natural components
/// restricted to letters 1..cap. With rotated = true the fillings are of the
/// rotated shape (shape)^v, A being the alphabet of the rotated tableau.
/// Ordered lexicographically by column reading word.
std::vector<Tableau> enumerate_sst(const SkewShape& shape, const Alphabet& A, int cap, bool rotated = false);

/// Lexicographic comparison of words by the order of A (shorter prefix first).
bool word_less(const Alphabet& A, const Word& a, const Word& b);

/// All words of length n over the letters `letters`, lexicographic.
std::vector<Word> enumerate_words(const std::vector<Letter>& letters, int n);

}  // namespace placto
