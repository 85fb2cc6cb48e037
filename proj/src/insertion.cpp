#include <algorithm>
#include <map>
#include <stdexcept>

#include "placto/knuth.hpp"

namespace placto {

namespace {

void require_straight(const Tableau& t, const char* what) {
  if (t.rotated() || !t.shape().straight()) throw std::invalid_argument(std::string(what) + ": straight tableau required");
}

int column_length(const Rows& r, int c) {
  int n = 0;
  while (n < static_cast<int>(r.size()) && static_cast<int>(r[static_cast<std::size_t>(n)].size()) >= c) ++n;
  return n;
}

Letter& ref(Rows& r, int i, int j) { return r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

// x entering a column replaces the topmost y with col_bumps(x, y)
bool col_bumps(const Alphabet& A, const Letter& x, const Letter& y) {
  return A.degree(x) == 0 ? !A.less(y, x) : A.less(x, y);
}

// x entering a row replaces the leftmost y with row_bumps(x, y)
bool row_bumps(const Alphabet& A, const Letter& x, const Letter& y) {
  return A.degree(x) == 0 ? A.less(x, y) : !A.less(y, x);
}

void trim(Rows& r) {
  while (!r.empty() && r.back().empty()) r.pop_back();
}

void check_corner(const Rows& r, Cell c) {
  if (c.row < 1 || c.row > static_cast<int>(r.size()) || static_cast<int>(r[static_cast<std::size_t>(c.row - 1)].size()) != c.col ||
      column_length(r, c.col) != c.row)
    throw std::invalid_argument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not a corner");
}

}  // namespace

InsertionRecord column_insert(const Letter& a, const Tableau& t) {
  require_straight(t, "column_insert");
  const auto& A = t.alphabet();
  if (!A.contains(a)) throw std::invalid_argument("column_insert: letter outside alphabet");
  Rows r = t.rows();
  Letter x = a;
  for (int c = 1;; ++c) {
    int len = column_length(r, c);
    int hit = 0;
    for (int i = 1; i <= len; ++i)
      if (col_bumps(A, x, ref(r, i, c))) {
        hit = i;
        break;
      }
    if (hit == 0) {
      if (len == static_cast<int>(r.size())) r.emplace_back();
      r[static_cast<std::size_t>(len)].push_back(x);
      return {Tableau::straight(A, std::move(r)), Cell{len + 1, c}};
    }
    std::swap(x, ref(r, hit, c));
  }
}

InsertionRecord row_insert(const Tableau& t, const Letter& a) {
  require_straight(t, "row_insert");
  const auto& A = t.alphabet();
  if (!A.contains(a)) throw std::invalid_argument("row_insert: letter outside alphabet");
  Rows r = t.rows();
  Letter x = a;
  for (std::size_t i = 0;; ++i) {
    if (i == r.size()) r.emplace_back();
    auto& row = r[i];
    auto it = std::find_if(row.begin(), row.end(), [&](const Letter& y) { return row_bumps(A, x, y); });
    if (it == row.end()) {
      row.push_back(x);
      return {Tableau::straight(A, std::move(r)), Cell{static_cast<int>(i) + 1, static_cast<int>(row.size())}};
    }
    std::swap(x, *it);
  }
}

std::pair<Tableau, Letter> reverse_column_insert(const Tableau& t, Cell cell) {
  require_straight(t, "reverse_column_insert");
  const auto& A = t.alphabet();
  Rows r = t.rows();
  check_corner(r, cell);
  Letter y = ref(r, cell.row, cell.col);
  r[static_cast<std::size_t>(cell.row - 1)].pop_back();
  for (int c = cell.col - 1; c >= 1; --c) {
    int len = column_length(r, c);
    int hit = 0;
    for (int i = len; i >= 1; --i)
      if (col_bumps(A, ref(r, i, c), y)) {
        hit = i;
        break;
      }
    if (hit == 0) throw std::logic_error("reverse_column_insert: no bumping entry");
    std::swap(y, ref(r, hit, c));
  }
  trim(r);
  return {Tableau::straight(A, std::move(r)), y};
}

std::pair<Tableau, Letter> reverse_row_insert(const Tableau& t, Cell cell) {
  require_straight(t, "reverse_row_insert");
  const auto& A = t.alphabet();
  Rows r = t.rows();
  check_corner(r, cell);
  Letter y = ref(r, cell.row, cell.col);
  r[static_cast<std::size_t>(cell.row - 1)].pop_back();
  for (int i = cell.row - 1; i >= 1; --i) {
    auto& row = r[static_cast<std::size_t>(i - 1)];
    auto it = std::find_if(row.rbegin(), row.rend(), [&](const Letter& x) { return row_bumps(A, x, y); });
    if (it == row.rend()) throw std::logic_error("reverse_row_insert: no bumping entry");
    std::swap(y, *it);
  }
  trim(r);
  return {Tableau::straight(A, std::move(r)), y};
}

Tableau column_insert_word(const Word& w, const Tableau& t) {
  Tableau cur = t;
  for (const auto& a : w) cur = column_insert(a, cur).result;
  return cur;
}

Tableau row_insert_word(const Tableau& t, const Word& w) {
  Tableau cur = t;
  for (const auto& a : w) cur = row_insert(cur, a).result;
  return cur;
}

Tableau column_tableau(const Word& w, const Alphabet& A) { return column_insert_word(w, Tableau::empty(A)); }

namespace {

// Cells of a straight shape in column reading order with their rows.
std::vector<Cell> column_order(const Partition& nu) {
  std::vector<Cell> out;
  for (int j = nu.row(1); j >= 1; --j)
    for (int i = 1; i <= nu.column(j); ++i) out.push_back({i, j});
  return out;
}

Tableau recording_tableau(const Partition& outer, const Partition& inner, const std::map<std::pair<int, int>, int>& marks) {
  Rows rows(static_cast<std::size_t>(outer.length()));
  for (int i = 1; i <= outer.length(); ++i)
    for (int j = inner.row(i) + 1; j <= outer.row(i); ++j)
      rows[static_cast<std::size_t>(i - 1)].push_back(Letter::positive(marks.at({i, j})));
  return Tableau(Alphabet::natural(), SkewShape(outer, inner), std::move(rows));
}

}  // namespace

TableauInsertion insert_tableau(const Tableau& t, const Tableau& s) {
  require_straight(t, "insert_tableau");
  require_straight(s, "insert_tableau");
  if (!(t.alphabet() == s.alphabet())) throw std::invalid_argument("insert_tableau: alphabet mismatch");
  Tableau cur = s;
  std::map<std::pair<int, int>, int> marks;
  for (const auto& c : column_order(t.shape().outer)) {
    auto rec = column_insert(t.at(c.row, c.col), cur);
    marks[{rec.added.row, rec.added.col}] = c.row;
    cur = std::move(rec.result);
  }
  Tableau recording = recording_tableau(cur.shape().outer, s.shape().outer, marks);
  return {std::move(cur), std::move(recording)};
}

Tableau row_insert_tableau(const Tableau& s, const Tableau& t) {
  Word w = row_word(t);
  std::reverse(w.begin(), w.end());
  return row_insert_word(s, w);
}

TableauInsertion lr_bijection(const Tableau& s, const Tableau& t) { return insert_tableau(t, s); }

std::pair<Tableau, Tableau> lr_bijection_inverse(const Tableau& product, const Tableau& recording) {
  require_straight(product, "lr_bijection_inverse");
  if (!(recording.shape().outer == product.shape().outer))
    throw std::invalid_argument("lr_bijection_inverse: recording shape does not match product");
  if (!is_lr_tableau(recording)) throw std::invalid_argument("lr_bijection_inverse: recording is not an LR tableau");
  Partition nu = lr_content(recording);
  // remaining cells of each recorded value, ordered by column
  std::map<int, std::vector<Cell>> by_value;
  for (auto [i, j] : recording.shape().cells()) by_value[recording.at(i, j).index].push_back({i, j});
  for (auto& [v, cells] : by_value)
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.col < b.col; });
  auto order = column_order(nu);
  Rows trows(static_cast<std::size_t>(nu.length()));
  for (int i = 1; i <= nu.length(); ++i) trows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(nu.row(i)));
  Tableau cur = product;
  for (auto k = order.size(); k-- > 0;) {
    const Cell pos = order[k];
    auto& cells = by_value[pos.row];
    if (cells.empty()) throw std::invalid_argument("lr_bijection_inverse: malformed recording");
    Cell c = cells.back();
    cells.pop_back();
    auto [next, letter] = reverse_column_insert(cur, c);
    trows[static_cast<std::size_t>(pos.row - 1)][static_cast<std::size_t>(pos.col - 1)] = letter;
    cur = std::move(next);
  }
  return {std::move(cur), Tableau::straight(product.alphabet(), std::move(trows))};
}

Tableau jdt_remove_first_column(const Tableau& s, int row) {
  require_straight(s, "jdt_remove_first_column");
  if (row < 1 || row > s.shape().outer.column(1)) throw std::invalid_argument("jdt_remove_first_column: no such cell");
  Rows r = s.rows();
  jdt_forward_slide(r, s.alphabet(), Cell{row, 1});
  return Tableau::straight(s.alphabet(), std::move(r));
}

Cell jdt_forward_slide(Rows& rows, const Alphabet& A, Cell hole) {
  for (;;) {
    const auto i = static_cast<std::size_t>(hole.row - 1);
    const auto j = static_cast<std::size_t>(hole.col - 1);
    bool has_right = rows[i].size() > j + 1;
    bool has_below = i + 1 < rows.size() && rows[i + 1].size() > j;
    if (!has_right && !has_below) break;
    bool take_below;
    if (has_right && has_below) {
      const Letter& R = rows[i][j + 1];
      const Letter& D = rows[i + 1][j];
      if (R == D)
        take_below = A.degree(R) == 0;
      else
        take_below = A.less(D, R);
    } else {
      take_below = has_below;
    }
    if (take_below) {
      rows[i][j] = rows[i + 1][j];
      ++hole.row;
    } else {
      rows[i][j] = rows[i][j + 1];
      ++hole.col;
    }
  }
  rows[static_cast<std::size_t>(hole.row - 1)].pop_back();
  trim(rows);
  return hole;
}

bool jdt_reverse_step(Rows& rows, const Alphabet& A, Cell& hole) {
  const auto i = static_cast<std::size_t>(hole.row - 1);
  const auto j = static_cast<std::size_t>(hole.col - 1);
  bool has_left = j > 0;
  bool has_above = i > 0;
  if (!has_left && !has_above) return false;
  bool take_above;
  if (has_left && has_above) {
    const Letter& L = rows[i][j - 1];
    const Letter& U = rows[i - 1][j];
    if (L == U)
      take_above = A.degree(L) == 0;
    else
      take_above = A.less(L, U);
  } else {
    take_above = has_above;
  }
  if (take_above) {
    rows[i][j] = rows[i - 1][j];
    --hole.row;
  } else {
    rows[i][j] = rows[i][j - 1];
    --hole.col;
  }
  return true;
}

}  // namespace placto
