#include <algorithm>
#include <stdexcept>

#include "placto/knuth.hpp"

namespace placto {

namespace {

struct Entry {
  bool y = false;  // belongs to the Y tableau
  Letter letter;
};

class Mixed {
 public:
  Mixed(const Tableau& x, const Tableau& y) : ax_(x.alphabet()), ay_(y.alphabet()), lambda_(y.shape().outer) {
    grid_.resize(static_cast<std::size_t>(lambda_.length()));
    for (int i = 1; i <= lambda_.length(); ++i) {
      auto& row = grid_[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= lambda_.row(i); ++j)
        row.push_back(j <= x.shape().outer.row(i) ? Entry{false, x.at(i, j)} : Entry{true, y.at(i, j)});
    }
  }

  Entry& at(int i, int j) { return grid_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  bool has(int i, int j) const { return i >= 1 && i <= lambda_.length() && j >= 1 && j <= lambda_.row(i); }

  // Exchanges an X-entry at p with a Y-entry at q (q right of or below p)
  // when the result satisfies (S1)-(S3).
  bool try_switch(int pi, int pj, int qi, int qj) {
    if (!has(qi, qj)) return false;
    Entry& p = at(pi, pj);
    Entry& q = at(qi, qj);
    if (p.y || !q.y) return false;
    std::swap(p, q);
    if (consistent(pi, pj) && consistent(qi, qj)) return true;
    std::swap(p, q);
    return false;
  }

  bool scan(SwitchOrder order) {
    bool changed = false;
    std::vector<Cell> cells;
    if (order == SwitchOrder::RowMajor) {
      for (int i = 1; i <= lambda_.length(); ++i)
        for (int j = 1; j <= lambda_.row(i); ++j) cells.push_back({i, j});
    } else {
      for (int j = 1; j <= lambda_.row(1); ++j)
        for (int i = 1; i <= lambda_.column(j); ++i) cells.push_back({i, j});
      if (order == SwitchOrder::Reverse) std::reverse(cells.begin(), cells.end());
    }
    for (const auto& c : cells) {
      if (at(c.row, c.col).y) continue;
      bool done = order == SwitchOrder::RowMajor
                      ? (try_switch(c.row, c.col, c.row, c.col + 1) || try_switch(c.row, c.col, c.row + 1, c.col))
                      : (try_switch(c.row, c.col, c.row + 1, c.col) || try_switch(c.row, c.col, c.row, c.col + 1));
      changed = changed || done;
    }
    return changed;
  }

  std::pair<Tableau, Tableau> split() const {
    Rows yrows, xrows;
    std::vector<int> nu;
    for (int i = 1; i <= lambda_.length(); ++i) {
      const auto& row = grid_[static_cast<std::size_t>(i - 1)];
      std::vector<Letter> yr, xr;
      bool seen_x = false;
      for (const auto& e : row) {
        if (e.y) {
          if (seen_x) throw std::logic_error("switching did not produce a straight shape");
          yr.push_back(e.letter);
        } else {
          seen_x = true;
          xr.push_back(e.letter);
        }
      }
      nu.push_back(static_cast<int>(yr.size()));
      yrows.push_back(std::move(yr));
      xrows.push_back(std::move(xr));
    }
    Partition inner(nu);
    while (static_cast<int>(yrows.size()) > inner.length()) yrows.pop_back();
    return {Tableau(ay_, SkewShape(inner), std::move(yrows)), Tableau(ax_, SkewShape(lambda_, inner), std::move(xrows))};
  }

 private:
  // Checks (S1)-(S3) between the cell (i,j) and all cells of the same tableau.
  bool consistent(int i, int j) {
    const Entry& e = at(i, j);
    const Alphabet& A = e.y ? ay_ : ax_;
    const int deg = A.degree(e.letter);
    for (int a = 1; a <= lambda_.length(); ++a)
      for (int b = 1; b <= lambda_.row(a); ++b) {
        if (a == i && b == j) continue;
        const Entry& f = at(a, b);
        if (f.y != e.y) continue;
        if (a <= i && b <= j) {
          if (A.less(e.letter, f.letter)) return false;
        } else if (a >= i && b >= j) {
          if (A.less(f.letter, e.letter)) return false;
        } else {
          continue;
        }
        if (f.letter == e.letter) {
          if (b == j && deg == 0) return false;
          if (a == i && deg == 1) return false;
        }
      }
    return true;
  }

  Alphabet ax_, ay_;
  Partition lambda_;
  std::vector<std::vector<Entry>> grid_;
};

}  // namespace

std::pair<Tableau, Tableau> switch_tableaux(const Tableau& x, const Tableau& y, SwitchOrder order) {
  if (x.rotated() || y.rotated() || !x.shape().straight() || !(y.shape().inner == x.shape().outer))
    throw std::invalid_argument("switch_tableaux: need X straight and Y of shape lambda/sh(X)");
  Mixed m(x, y);
  while (m.scan(order)) {
  }
  return m.split();
}

std::pair<Tableau, Tableau> switch_rectify(const Tableau& t, SwitchOrder order) {
  return switch_tableaux(highest_tableau(t.shape().inner), t, order);
}

Tableau switch_rectify_inverse(const Tableau& j, const Tableau& r) {
  auto [h, t] = switch_tableaux(j, r);
  if (!(h == highest_tableau(h.shape().outer))) throw std::invalid_argument("switch_rectify_inverse: recording is not an LR tableau");
  return t;
}

}  // namespace placto
