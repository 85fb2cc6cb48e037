#include <stdexcept>

#include "placto/knuth.hpp"

namespace placto {

std::pair<Tableau, Tableau> rsk(const GeneralizedMatrix& m) {
  const auto bw = matrix_to_biword(m);
  Tableau p = Tableau::empty(m.col_alphabet());
  Rows q;
  for (std::size_t k = 0; k < bw.top.size(); ++k) {
    auto rec = column_insert(bw.bottom[k], p);
    p = std::move(rec.result);
    if (rec.added.row > static_cast<int>(q.size())) q.emplace_back();
    q[static_cast<std::size_t>(rec.added.row - 1)].push_back(bw.top[k]);
  }
  return {std::move(p), Tableau::straight(m.row_alphabet(), std::move(q))};
}

GeneralizedMatrix rsk_inverse(const Tableau& p, const Tableau& q) {
  if (!(p.shape() == q.shape()) || !p.shape().straight() || p.rotated() || q.rotated())
    throw std::invalid_argument("rsk_inverse: P and Q must have the same straight shape");
  if (!is_semistandard(p) || !is_semistandard(q)) throw std::invalid_argument("rsk_inverse: tableaux must be semistandard");
  const auto& A = q.alphabet();
  GeneralizedMatrix m(A, p.alphabet());
  Tableau cur = p;
  Rows qr = q.rows();
  while (!qr.empty()) {
    // largest entry of Q; its last occurrence in insertion order
    Cell best{};
    Letter top{};
    bool found = false;
    for (int i = 1; i <= static_cast<int>(qr.size()); ++i) {
      const auto& row = qr[static_cast<std::size_t>(i - 1)];
      if (row.empty()) continue;
      const Letter& a = row.back();
      int j = static_cast<int>(row.size());
      bool better = !found || A.less(top, a) ||
                    (a == top && (A.degree(a) == 0 ? j > best.col : i > best.row));
      if (better) {
        best = {i, j};
        top = a;
        found = true;
      }
    }
    auto [next, letter] = reverse_column_insert(cur, best);
    cur = std::move(next);
    qr[static_cast<std::size_t>(best.row - 1)].pop_back();
    while (!qr.empty() && qr.back().empty()) qr.pop_back();
    m.add(top, letter);
  }
  return m;
}

std::pair<Tableau, Tableau> dual_rsk(const GeneralizedMatrix& m) {
  const Alphabet& B = m.col_alphabet();
  GeneralizedMatrix md(m.row_alphabet(), B.dual());
  for (const auto& [k, v] : m.entries()) md.set(k.first, B.dual_of(k.second), v);
  auto [p, q] = rsk(md);
  return {dual_tableau(p), std::move(q)};
}

GeneralizedMatrix dual_rsk_inverse(const Tableau& pv, const Tableau& q) {
  Tableau p = dual_tableau(pv);
  GeneralizedMatrix md = rsk_inverse(p, q);
  const Alphabet& Bd = md.col_alphabet();
  GeneralizedMatrix m(md.row_alphabet(), Bd.dual());
  for (const auto& [k, v] : md.entries()) m.set(k.first, Bd.dual_of(k.second), v);
  return m;
}

std::pair<Tableau, Tableau> skew_rsk(const Tableau& t0, const GeneralizedMatrix& m) {
  if (!(t0.alphabet() == m.col_alphabet())) throw std::invalid_argument("skew_rsk: T0 must be over the column alphabet");
  auto [p, q] = rsk(m);
  auto ins = insert_tableau(t0, p);
  auto [h, u] = switch_tableaux(q, ins.recording);
  if (!(h == highest_tableau(t0.shape().outer))) throw std::logic_error("skew_rsk: switching did not recover H_mu");
  return {std::move(ins.result), std::move(u)};
}

std::pair<Tableau, GeneralizedMatrix> skew_rsk_inverse(const Tableau& t1, const Tableau& u) {
  auto [q, r] = switch_rectify(u);
  auto [p, t0] = lr_bijection_inverse(t1, r);
  return {std::move(t0), rsk_inverse(p, q)};
}

}  // namespace placto
