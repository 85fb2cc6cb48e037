#include "placto/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace placto {

bool word_less(const Alphabet& A, const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const Letter& x, const Letter& y) { return A.less(x, y); });
}

std::vector<Tableau> enumerate_sst(const SkewShape& shape, const Alphabet& A, int cap, bool rotated) {
  if (rotated) {
    auto base = enumerate_sst(shape, A.dual(), cap, false);
    std::vector<Tableau> out;
    out.reserve(base.size());
    for (const auto& t : base) out.push_back(dual_tableau(t));
    std::sort(out.begin(), out.end(),
              [&](const Tableau& x, const Tableau& y) { return word_less(A, column_word(x), column_word(y)); });
    return out;
  }
  const auto letters = A.letters_capped(cap);
  const auto cells = shape.cells();
  const int L = shape.outer.length();
  Rows rows(static_cast<std::size_t>(L));
  for (int i = 1; i <= L; ++i)
    rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(shape.outer.row(i) - shape.inner.row(i)));
  auto ref = [&](int i, int j) -> Letter& {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape.inner.row(i) - 1)];
  };
  auto fits = [&](const Letter& a, const Letter& b, bool along_row) {
    if (A.less(b, a)) return false;
    if (a == b) return along_row ? A.degree(a) == 0 : A.degree(a) == 1;
    return true;
  };
  std::vector<Tableau> out;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      out.emplace_back(A, shape, rows);
      return;
    }
    auto [i, j] = cells[c];
    for (const auto& x : letters) {
      if (shape.has_cell(i, j - 1) && !fits(ref(i, j - 1), x, true)) continue;
      if (i > 1 && shape.has_cell(i - 1, j) && !fits(ref(i - 1, j), x, false)) continue;
      ref(i, j) = x;
      rec(c + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [&](const Tableau& x, const Tableau& y) { return word_less(A, column_word(x), column_word(y)); });
  return out;
}

std::vector<Word> enumerate_words(const std::vector<Letter>& letters, int n) {
  std::vector<Word> out{Word{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (const auto& a : letters) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace placto
