#include "placto/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace placto {

Tableau::Tableau(Alphabet alphabet, SkewShape shape, Rows rows, bool rotated)
    : alphabet_(std::move(alphabet)), shape_(std::move(shape)), rows_(std::move(rows)), rotated_(rotated) {
  while (!rows_.empty() && rows_.back().empty() && static_cast<int>(rows_.size()) > shape_.outer.length())
    rows_.pop_back();
  if (static_cast<int>(rows_.size()) != shape_.outer.length())
    throw std::invalid_argument("tableau row count does not match shape");
  for (int i = 1; i <= shape_.outer.length(); ++i) {
    const auto& r = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != shape_.outer.row(i) - shape_.inner.row(i))
      throw std::invalid_argument("tableau row " + std::to_string(i) + " has wrong length");
    for (const auto& a : r)
      if (!alphabet_.contains(a)) throw std::invalid_argument("tableau entry outside alphabet " + alphabet_.to_string());
  }
}

Tableau Tableau::straight(Alphabet alphabet, Rows rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Tableau(std::move(alphabet), SkewShape(Partition(parts)), std::move(rows));
}

Tableau Tableau::empty(Alphabet alphabet, Partition inner, bool rotated) {
  Rows rows(static_cast<std::size_t>(inner.length()));
  return Tableau(std::move(alphabet), SkewShape(inner, inner), std::move(rows), rotated);
}

const Letter& Tableau::at(int i, int j) const {
  if (!shape_.has_cell(i, j)) throw std::out_of_range("no cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape_.inner.row(i) - 1)];
}

std::vector<Letter> Tableau::column(int j) const {
  std::vector<Letter> out;
  for (int i = 1; i <= shape_.outer.length(); ++i)
    if (shape_.has_cell(i, j)) out.push_back(at(i, j));
  return out;
}

std::vector<Tableau::DisplayCell> Tableau::display_cells() const {
  std::vector<DisplayCell> out;
  const int rowsn = shape_.outer.length();
  const int cols = shape_.outer.row(1);
  if (!rotated_) {
    for (auto [i, j] : shape_.cells()) out.push_back({i, j, at(i, j)});
  } else {
    for (int i = rowsn; i >= 1; --i)
      for (int j = shape_.outer.row(i); j > shape_.inner.row(i); --j)
        out.push_back({rowsn + 1 - i, cols + 1 - j, at(i, j)});
  }
  return out;
}

Rows Tableau::display_rows() const {
  Rows out(static_cast<std::size_t>(shape_.outer.length()));
  for (const auto& c : display_cells()) out[static_cast<std::size_t>(c.row - 1)].push_back(c.letter);
  return out;
}

Tableau highest_tableau(const Partition& nu) {
  Rows rows;
  for (int i = 1; i <= nu.length(); ++i) rows.emplace_back(static_cast<std::size_t>(nu.row(i)), Letter::positive(i));
  return Tableau(Alphabet::natural(), SkewShape(nu), std::move(rows));
}

Tableau lowest_bar_tableau(const Partition& nu) {
  Partition c = conjugate(nu);
  Rows rows;
  for (int i = 1; i <= nu.length(); ++i) {
    std::vector<Letter> r;
    for (int j = 1; j <= nu.row(i); ++j) r.push_back(Letter::negative(c.row(j) - i + 1));
    rows.push_back(std::move(r));
  }
  return Tableau(Alphabet::natural_dual(), SkewShape(nu), std::move(rows));
}

bool is_semistandard(const Tableau& t) {
  const auto& alpha = t.alphabet();
  std::map<std::pair<int, int>, Letter> grid;
  for (const auto& c : t.display_cells()) grid.emplace(std::make_pair(c.row, c.col), c.letter);
  auto ok = [&](const Letter& a, const Letter& b, bool along_row) {
    if (alpha.less(b, a)) return false;
    if (a == b) {
      int d = alpha.degree(a);
      if (along_row && d == 1) return false;
      if (!along_row && d == 0) return false;
    }
    return true;
  };
  for (const auto& [pos, a] : grid) {
    auto right = grid.find({pos.first, pos.second + 1});
    if (right != grid.end() && !ok(a, right->second, true)) return false;
    auto below = grid.find({pos.first + 1, pos.second});
    if (below != grid.end() && !ok(a, below->second, false)) return false;
  }
  return true;
}

Word column_word(const Tableau& t) {
  const auto& sh = t.shape();
  Word w;
  if (!t.rotated()) {
    for (int j = sh.outer.row(1); j >= 1; --j)
      for (const auto& a : t.column(j)) w.push_back(a);
  } else {
    for (int j = 1; j <= sh.outer.row(1); ++j) {
      auto col = t.column(j);
      w.insert(w.end(), col.rbegin(), col.rend());
    }
  }
  return w;
}

Word row_word(const Tableau& t) {
  Word w;
  for (const auto& r : t.display_rows()) w.insert(w.end(), r.rbegin(), r.rend());
  return w;
}

Weight weight(const Word& w) {
  Weight out;
  for (const auto& a : w) ++out[a];
  return out;
}

Weight weight(const Tableau& t) {
  Weight out;
  for (const auto& r : t.rows())
    for (const auto& a : r) ++out[a];
  return out;
}

Weight& operator+=(Weight& a, const Weight& b) {
  for (const auto& [k, v] : b) {
    long& x = a[k];
    x += v;
    if (x == 0) a.erase(k);
  }
  return a;
}

Tableau dual_tableau(const Tableau& t) {
  Rows rows = t.rows();
  for (auto& r : rows)
    for (auto& a : r) a = t.alphabet().dual_of(a);
  return Tableau(t.alphabet().dual(), t.shape(), std::move(rows), !t.rotated());
}

Tableau glue(const Tableau& s, const Tableau& t) {
  if (s.rotated() || t.rotated()) throw std::invalid_argument("glue: rotated tableaux are not supported");
  if (!s.shape().straight() || !(s.shape().outer == t.shape().inner))
    throw std::invalid_argument("glue: shape mismatch, need sh(S)=mu and sh(T)=lambda/mu");
  const auto& A = s.alphabet();
  Alphabet glued = A.glue(t.alphabet());
  const auto& lam = t.shape().outer;
  Rows rows(static_cast<std::size_t>(lam.length()));
  for (int i = 1; i <= lam.length(); ++i) {
    auto& r = rows[static_cast<std::size_t>(i - 1)];
    if (i <= s.shape().outer.length()) r = s.rows()[static_cast<std::size_t>(i - 1)];
    for (const auto& a : t.rows()[static_cast<std::size_t>(i - 1)]) r.push_back(A.glued_right(a));
  }
  return Tableau(std::move(glued), SkewShape(lam), std::move(rows));
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    s += letter_token(w[k]);
  }
  return s;
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  const int cols = t.shape().outer.row(1);
  std::map<std::pair<int, int>, std::string> grid;
  std::size_t width = 1;
  for (const auto& c : t.display_cells()) {
    auto s = letter_to_string(c.letter, t.alphabet());
    width = std::max(width, s.size());
    grid[{c.row, c.col}] = s;
  }
  for (int i = 1; i <= t.shape().outer.length(); ++i) {
    for (int j = 1; j <= cols; ++j) {
      auto it = grid.find({i, j});
      std::string s = it == grid.end() ? "." : it->second;
      os << std::string(width - s.size() + (j > 1 ? 1 : 0), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  std::istringstream is(text);
  Word w;
  std::string tok;
  while (is >> tok) w.push_back(parse_letter_token(tok));
  return w;
}

}  // namespace placto
