#include "placto/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace placto {

long GeneralizedMatrix::at(const Letter& i, const Letter& j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void GeneralizedMatrix::set(const Letter& i, const Letter& j, long value) {
  if (!rows_.contains(i) || !cols_.contains(j)) throw std::invalid_argument("matrix index outside alphabets");
  if (value < 0) throw std::invalid_argument("matrix entries must be nonnegative");
  if (value > 1 && rows_.degree(i) != cols_.degree(j))
    throw std::invalid_argument("matrix entry > 1 at mixed degree (" + letter_to_string(i, rows_) + "," +
                                letter_to_string(j, cols_) + ")");
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

void GeneralizedMatrix::add(const Letter& i, const Letter& j, long value) { set(i, j, at(i, j) + value); }

long GeneralizedMatrix::total() const {
  long s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

Weight GeneralizedMatrix::row_weight() const {
  Weight w;
  for (const auto& [k, v] : entries_) w[k.first] += v;
  return w;
}

Weight GeneralizedMatrix::col_weight() const {
  Weight w;
  for (const auto& [k, v] : entries_) w[k.second] += v;
  return w;
}

GeneralizedMatrix GeneralizedMatrix::transpose() const {
  GeneralizedMatrix t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_[{k.second, k.first}] = v;
  return t;
}

bool biword_less(const Alphabet& A, const Alphabet& B, const std::pair<Letter, Letter>& x,
                 const std::pair<Letter, Letter>& y) {
  if (A.less(x.first, y.first)) return true;
  if (A.less(y.first, x.first)) return false;
  if (A.degree(x.first) == 0) return B.less(y.second, x.second);
  return B.less(x.second, y.second);
}

Biword matrix_to_biword(const GeneralizedMatrix& m) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (const auto& [k, v] : m.entries())
    for (long c = 0; c < v; ++c) pairs.push_back(k);
  const auto& A = m.row_alphabet();
  const auto& B = m.col_alphabet();
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) { return biword_less(A, B, x, y); });
  Biword bw;
  for (const auto& [i, j] : pairs) {
    bw.top.push_back(i);
    bw.bottom.push_back(j);
  }
  return bw;
}

GeneralizedMatrix biword_to_matrix(const Biword& bw, const Alphabet& A, const Alphabet& B) {
  if (bw.top.size() != bw.bottom.size()) throw std::invalid_argument("biword rows differ in length");
  GeneralizedMatrix m(A, B);
  for (std::size_t k = 0; k < bw.top.size(); ++k) {
    std::pair<Letter, Letter> cur{bw.top[k], bw.bottom[k]};
    if (k > 0) {
      std::pair<Letter, Letter> prev{bw.top[k - 1], bw.bottom[k - 1]};
      bool ok = biword_less(A, B, prev, cur) || (prev == cur && A.degree(cur.first) == B.degree(cur.second));
      if (!ok) throw std::invalid_argument("biword pairs out of order at position " + std::to_string(k + 1));
    }
    m.add(cur.first, cur.second);
  }
  return m;
}

namespace {

std::vector<GeneralizedMatrix> enumerate_impl(const Alphabet& A, const Alphabet& B, int lo, int hi, int col_cap) {
  std::vector<std::pair<Letter, Letter>> cells;
  for (const auto& i : A.letters_capped(col_cap))
    for (const auto& j : B.letters_capped(col_cap)) cells.emplace_back(i, j);
  std::vector<GeneralizedMatrix> out;
  GeneralizedMatrix cur(A, B);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int used) {
    if (c == cells.size()) {
      if (used >= lo) out.push_back(cur);
      return;
    }
    const auto& [i, j] = cells[c];
    int maxv = hi - used;
    if (A.degree(i) != B.degree(j)) maxv = std::min(maxv, 1);
    for (int v = 0; v <= maxv; ++v) {
      cur.set(i, j, v);
      rec(c + 1, used + v);
    }
    cur.set(i, j, 0);
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<GeneralizedMatrix> enumerate_matrices(const Alphabet& A, const Alphabet& B, int total_cap, int col_cap) {
  return enumerate_impl(A, B, 0, total_cap, col_cap);
}

std::vector<GeneralizedMatrix> enumerate_matrices_exact(const Alphabet& A, const Alphabet& B, int n, int col_cap) {
  return enumerate_impl(A, B, n, n, col_cap);
}

std::string to_string(const GeneralizedMatrix& m) {
  std::ostringstream os;
  os << "{" << m.row_alphabet().to_string() << " x " << m.col_alphabet().to_string() << ":";
  for (const auto& [k, v] : m.entries())
    os << " (" << letter_to_string(k.first, m.row_alphabet()) << "," << letter_to_string(k.second, m.col_alphabet())
       << ")=" << v;
  os << "}";
  return os.str();
}

}  // namespace placto
