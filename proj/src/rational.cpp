#include "placto/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace placto {

namespace {

std::vector<int> first_column(const Rows& rows) {
  std::vector<int> out;
  for (const auto& r : rows)
    if (!r.empty()) out.push_back(r.front().index);
  return out;
}

int max_entry(const Rows& rows) {
  int m = 0;
  for (const auto& r : rows)
    for (const auto& a : r) m = std::max(m, a.index);
  return m;
}

bool condition(const std::vector<int>& s1, const std::vector<int>& t1) {
  int top = static_cast<int>(s1.size() + t1.size());
  for (int v : s1) top = std::max(top, v);
  for (int v : t1) top = std::max(top, v);
  for (int k = 1; k <= top; ++k) {
    long c = std::count_if(s1.begin(), s1.end(), [k](int v) { return v <= k; }) +
             std::count_if(t1.begin(), t1.end(), [k](int v) { return v <= k; });
    if (c > k) return false;
  }
  return true;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Tableau straight_n(Rows rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau::straight(Alphabet::natural(), std::move(rows));
}

// Stored cells of a rotated tableau of shape nu^v in column reading order.
std::vector<Cell> rotated_column_order(const Partition& nu) {
  std::vector<Cell> out;
  for (int j = 1; j <= nu.row(1); ++j)
    for (int i = nu.column(j); i >= 1; --i) out.push_back({i, j});
  return out;
}

std::vector<Cell> straight_column_order(const Partition& mu) {
  std::vector<Cell> out;
  for (int j = mu.row(1); j >= 1; --j)
    for (int i = 1; i <= mu.column(j); ++i) out.push_back({i, j});
  return out;
}

Rows empty_rows(const Partition& p) {
  Rows r(static_cast<std::size_t>(p.length()));
  for (int i = 1; i <= p.length(); ++i) r[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(p.row(i)));
  return r;
}

}  // namespace

bool check_pair_condition(const Tableau& s, const Tableau& t) {
  return condition(first_column(s.rows()), first_column(dual_tableau(t).rows()));
}

bool is_rational_pair(const RationalPair& p) {
  return p.S.alphabet().is_natural() && !p.S.rotated() && p.S.shape().straight() && is_semistandard(p.S) &&
         p.T.alphabet().is_natural_dual() && p.T.rotated() && p.T.shape().straight() && is_semistandard(p.T) &&
         check_pair_condition(p.S, p.T);
}

RationalPair make_rational_pair(const Tableau& s, const Tableau& t) {
  RationalPair p{s, t};
  require(is_rational_pair(p), "not a rational semistandard pair");
  return p;
}

RationalPair pair_from_duals(const Tableau& s, const Tableau& t_dual) { return make_rational_pair(s, dual_tableau(t_dual)); }

RationalPair insert_positive(const Letter& a, const RationalPair& p, int* row) {
  require(!a.dual && a.part == 0, "insert_positive: letter must lie in N");
  Rows tv = p.t_dual().rows();
  int x = a.index;
  const int C = p.nu().row(1);
  for (int j = C; j >= 1; --j) {
    std::vector<Letter*> col;
    for (auto& r : tv)
      if (static_cast<int>(r.size()) >= j) col.push_back(&r[static_cast<std::size_t>(j - 1)]);
    auto has = [&](int v) { return std::any_of(col.begin(), col.end(), [v](Letter* e) { return e->index == v; }); };
    if (!has(x)) continue;
    int b = x;
    while (has(b)) ++b;
    for (Letter* e : col)
      if (e->index >= x && e->index < b) ++e->index;
    x = b;
  }
  auto rec = column_insert(Letter::positive(x), p.S);
  if (row) *row = rec.added.row;
  return RationalPair{std::move(rec.result), dual_tableau(straight_n(std::move(tv)))};
}

std::pair<RationalPair, Letter> insert_positive_inverse(const RationalPair& p, int row) {
  require(row >= 1 && row <= p.mu().length(), "insert_positive_inverse: no such row");
  auto [s, letter] = reverse_column_insert(p.S, Cell{row, p.mu().row(row)});
  Rows tv = p.t_dual().rows();
  int b = letter.index;
  const int C = p.nu().row(1);
  for (int j = 1; j <= C; ++j) {
    std::vector<Letter*> col;
    for (auto& r : tv)
      if (static_cast<int>(r.size()) >= j) col.push_back(&r[static_cast<std::size_t>(j - 1)]);
    auto has = [&](int v) { return std::any_of(col.begin(), col.end(), [v](Letter* e) { return e->index == v; }); };
    if (!has(b)) continue;
    int a = b;
    while (has(a)) --a;
    for (Letter* e : col)
      if (e->index > a && e->index <= b) --e->index;
    b = a;
  }
  if (b < 1) throw std::invalid_argument("insert_positive_inverse: not an image of insert_positive");
  return {RationalPair{std::move(s), dual_tableau(straight_n(std::move(tv)))}, Letter::positive(b)};
}

DualInsertion insert_dual(const RationalPair& p, const Letter& a) {
  require(a.dual && a.part == 0, "insert_dual: letter must lie in N^v");
  const Tableau tv = p.t_dual();
  const auto s1 = first_column(p.S.rows());
  auto full = row_insert(tv, Letter::positive(a.index));
  if (condition(s1, first_column(full.result.rows())))
    return {RationalPair{p.S, dual_tableau(full.result)}, 0, full.added.row};

  Rows rows = tv.rows();
  Letter x = Letter::positive(a.index);
  for (std::size_t k = 0;; ++k) {
    Rows trial = rows;
    if (k == trial.size()) trial.emplace_back();
    auto& r = trial[k];
    auto it = std::find_if(r.begin(), r.end(), [&](const Letter& y) { return y.index > x.index; });
    bool appended = it == r.end();
    Letter bumped = x;
    if (appended)
      r.push_back(x);
    else
      std::swap(bumped, *it);
    if (!condition(s1, first_column(trial))) break;
    if (appended) throw std::logic_error("insert_dual: full insertion both violates and satisfies the condition");
    rows = std::move(trial);
    x = bumped;
  }
  // cancel x against the first column of S
  int r = 0;
  for (int i = 1; i <= p.mu().column(1); ++i)
    if (p.S.at(i, 1) == x) r = i;
  if (r == 0) throw std::logic_error("insert_dual: cancelled letter missing from the first column of S");
  Tableau s = jdt_remove_first_column(p.S, r);
  int shrunk = 0;
  for (int i = 1; i <= p.mu().length(); ++i)
    if (s.shape().outer.row(i) != p.mu().row(i)) shrunk = i;
  return {RationalPair{std::move(s), dual_tableau(straight_n(std::move(rows)))}, 1, shrunk};
}

std::pair<RationalPair, Letter> insert_dual_inverse(const RationalPair& p, int epsilon, int row) {
  if (epsilon == 0) {
    require(row >= 1 && row <= p.nu().length(), "insert_dual_inverse: no such row");
    auto [tv, x] = reverse_row_insert(p.t_dual(), Cell{row, p.nu().row(row)});
    return {RationalPair{p.S, dual_tableau(tv)}, Letter::negative(x.index)};
  }
  require(p.mu().can_add(row), "insert_dual_inverse: cannot add a box in that row");
  const Alphabet N = Alphabet::natural();
  const Rows tprime = p.t_dual().rows();
  const int bound =
      std::max({max_entry(p.S.rows()), max_entry(tprime), p.mu().length() + p.nu().length() + 2}) + 1;

  // reverse slide from the new outer corner; every first-column position the
  // hole passes through is a candidate for the cancelled cell
  Rows srows = p.S.rows();
  if (row > static_cast<int>(srows.size())) srows.emplace_back();
  srows[static_cast<std::size_t>(row - 1)].push_back(Letter::positive(1));
  Cell hole{row, p.mu().row(row) + 1};
  std::vector<std::pair<int, Rows>> stops;
  for (;;) {
    if (hole.col == 1) stops.emplace_back(hole.row, srows);
    if (!jdt_reverse_step(srows, N, hole)) break;
  }

  std::vector<std::pair<RationalPair, Letter>> found;
  for (auto& [r, base] : stops)
    for (int x = 1; x <= bound; ++x) {
      Rows sr = base;
      sr[static_cast<std::size_t>(r - 1)][0] = Letter::positive(x);
      Tableau s = Tableau::straight(N, sr);
      if (!is_semistandard(s)) continue;
      for (std::size_t k = 0; k <= tprime.size(); ++k) {
        Rows tr = tprime;
        int y = x;
        bool ok = true;
        for (std::size_t q = k; q-- > 0;) {
          auto& rr = tr[q];
          auto it = std::find_if(rr.rbegin(), rr.rend(), [y](const Letter& z) { return z.index < y; });
          if (it == rr.rend()) {
            ok = false;
            break;
          }
          std::swap(y, it->index);
        }
        if (!ok) continue;
        Tableau tv = straight_n(tr);
        if (!is_semistandard(tv)) continue;
        RationalPair cand{s, dual_tableau(tv)};
        if (!check_pair_condition(cand.S, cand.T)) continue;
        auto fwd = insert_dual(cand, Letter::negative(y));
        if (fwd.epsilon == 1 && fwd.row == row && fwd.pair == p) found.emplace_back(std::move(cand), Letter::negative(y));
      }
    }
  if (found.size() != 1)
    throw std::invalid_argument("insert_dual_inverse: " + std::to_string(found.size()) + " preimages found");
  return std::move(found.front());
}

std::pair<RationalPair, int> insert_word(const Word& w, const RationalPair& start) {
  RationalPair p = start;
  int eps = 0;
  for (const auto& a : w) {
    if (a.dual) {
      auto r = insert_dual(p, a);
      p = std::move(r.pair);
      eps += r.epsilon;
    } else {
      p = insert_positive(a, p);
    }
  }
  return {std::move(p), eps};
}

RationalPair bijection_31(const Tableau& t_dual, const Tableau& s_pos) {
  require(t_dual.alphabet().is_natural_dual() && t_dual.rotated() && t_dual.shape().straight() && is_semistandard(t_dual),
          "bijection_31: first argument must lie in B^v_nu");
  require(s_pos.alphabet().is_natural() && !s_pos.rotated() && s_pos.shape().straight() && is_semistandard(s_pos),
          "bijection_31: second argument must lie in B_mu");
  RationalPair p{Tableau::empty(Alphabet::natural()), t_dual};
  for (const auto& a : column_word(s_pos)) p = insert_positive(a, p);
  return p;
}

std::pair<Tableau, Tableau> bijection_31_inverse(const RationalPair& p) {
  require(is_rational_pair(p), "bijection_31_inverse: not a rational pair");
  const Partition mu = p.mu();
  auto order = straight_column_order(mu);
  Rows srows = empty_rows(mu);
  RationalPair cur = p;
  for (auto k = order.size(); k-- > 0;) {
    auto [prev, letter] = insert_positive_inverse(cur, order[k].row);
    srows[static_cast<std::size_t>(order[k].row - 1)][static_cast<std::size_t>(order[k].col - 1)] = letter;
    cur = std::move(prev);
  }
  return {cur.T, straight_n(std::move(srows))};
}

Bijection32 bijection_32(const Tableau& s, const Tableau& t) {
  require(s.alphabet().is_natural() && !s.rotated() && s.shape().straight() && is_semistandard(s),
          "bijection_32: S must lie in B_mu");
  require(t.alphabet().is_natural_dual() && t.rotated() && t.shape().straight() && is_semistandard(t),
          "bijection_32: T must lie in B^v_nu");
  const Partition nu = t.shape().outer;
  RationalPair p{s, Tableau::empty(Alphabet::natural_dual(), {}, true)};
  std::map<std::pair<int, int>, int> u;
  for (const auto& c : rotated_column_order(nu)) {
    auto r = insert_dual(p, t.at(c.row, c.col));
    u[{c.row, c.col}] = r.epsilon ? r.row : -r.row;
    p = std::move(r.pair);
  }
  // U = U_+ * U_-
  Rows plus, minus;
  std::vector<int> lam;
  for (int i = 1; i <= nu.length(); ++i) {
    std::vector<Letter> pr, mr;
    for (int j = 1; j <= nu.row(i); ++j) {
      int v = u.at({i, j});
      if (v > 0) {
        if (!mr.empty()) throw std::logic_error("bijection_32: U_+ is not a straight shape");
        pr.push_back(Letter::positive(v));
      } else {
        mr.push_back(Letter::negative(-v));
      }
    }
    lam.push_back(static_cast<int>(pr.size()));
    plus.push_back(std::move(pr));
    minus.push_back(std::move(mr));
  }
  Partition lambda(lam);
  Tableau uplus = straight_n(std::move(plus));
  Tableau uminus(Alphabet::natural_dual(), SkewShape(nu, lambda), std::move(minus));
  Tableau lr_plus = iota(uplus, p.mu());
  auto [jm, lr_minus] = switch_rectify(uminus);
  return {std::move(p), std::move(lr_plus), std::move(lr_minus)};
}

std::pair<Tableau, Tableau> bijection_32_inverse(const RationalPair& p, const Tableau& lr_plus, const Tableau& lr_minus) {
  require(is_rational_pair(p), "bijection_32_inverse: not a rational pair");
  require(lr_plus.shape().inner == p.mu() && is_lr_tableau(lr_plus), "bijection_32_inverse: bad first LR tableau");
  require(lr_minus.shape().inner == p.nu() && is_lr_tableau(lr_minus), "bijection_32_inverse: bad second LR tableau");
  Tableau uplus = iota_inverse(lr_plus);
  Tableau uminus = switch_rectify_inverse(lowest_bar_tableau(p.nu()), lr_minus);
  require(uminus.shape().inner == uplus.shape().outer, "bijection_32_inverse: LR contents differ");
  const Partition nu = lr_minus.shape().outer;
  std::map<std::pair<int, int>, int> u;
  for (auto [i, j] : uplus.shape().cells()) u[{i, j}] = uplus.at(i, j).index;
  for (auto [i, j] : uminus.shape().cells()) u[{i, j}] = -uminus.at(i, j).index;
  auto order = rotated_column_order(nu);
  Rows trows = empty_rows(nu);
  RationalPair cur = p;
  for (auto k = order.size(); k-- > 0;) {
    const Cell c = order[k];
    int v = u.at({c.row, c.col});
    auto [prev, letter] = insert_dual_inverse(cur, v > 0 ? 1 : 0, v > 0 ? v : -v);
    trows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = letter;
    cur = std::move(prev);
  }
  require(cur.T.empty(), "bijection_32_inverse: dual part not exhausted");
  return {cur.S, Tableau(Alphabet::natural_dual(), SkewShape(nu), std::move(trows), true)};
}

ExtLR ext_lr(const Tableau& s, const Tableau& t) {
  auto b = bijection_32(s, t);
  auto [t2, s2] = bijection_31_inverse(b.pair);
  Tableau u = switch_rectify_inverse(s2, b.lr_plus);
  Tableau v = switch_rectify_inverse(dual_tableau(t2), b.lr_minus);
  Partition lambda = u.shape().inner;
  return {std::move(lambda), dual_tableau(v), std::move(u)};
}

std::pair<Tableau, Tableau> ext_lr_inverse(const ExtLR& x) {
  require(x.u.alphabet().is_natural() && !x.u.rotated() && x.u.shape().inner == x.lambda, "ext_lr_inverse: bad U");
  require(x.tv.alphabet().is_natural_dual() && x.tv.rotated() && x.tv.shape().inner == x.lambda, "ext_lr_inverse: bad T");
  auto [s2, lr_plus] = switch_rectify(x.u);
  auto [t2v, lr_minus] = switch_rectify(dual_tableau(x.tv));
  RationalPair p = bijection_31(dual_tableau(t2v), s2);
  return bijection_32_inverse(p, lr_plus, lr_minus);
}

}  // namespace placto
