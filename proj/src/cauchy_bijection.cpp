#include <algorithm>
#include <stdexcept>

#include "placto/cauchy.hpp"
#include "placto/knuth.hpp"
#include "placto/plactic.hpp"

namespace placto {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

RationalPair positive_pair(const Tableau& s) { return RationalPair{s, Tableau::empty(Alphabet::natural_dual(), {}, true)}; }

bool is_highest(const Tableau& t) { return t == highest_tableau(t.shape().outer); }

/// The unique element of LR^nu_{empty nu}.
Tableau trivial_lr(const Partition& nu) { return enumerate_lr(nu, {}, nu).front(); }

Weight without_zeros(Weight w) {
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

}  // namespace

Word reverse_dual(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& a : r) a.dual = !a.dual;
  return r;
}

Tableau straight_dual_to_bar(const Tableau& p) {
  require(p.alphabet().is_natural_dual() && !p.rotated() && p.shape().straight(),
          "straight_dual_to_bar: expected a straight tableau over N^v");
  return dual_tableau(column_tableau(reverse_dual(column_word(p)), Alphabet::natural()));
}

Tableau bar_to_straight_dual(const Tableau& k) {
  require(k.alphabet().is_natural_dual() && k.rotated() && k.shape().straight(),
          "bar_to_straight_dual: expected an element of B^v_nu");
  return column_tableau(column_word(k), Alphabet::natural_dual());
}

std::vector<std::string> MainTrace::lines() const {
  return {
      "P(X) = " + to_string(px),
      "Q(X) = " + to_string(qx),
      "K(Y) = " + to_string(ky),
      "Q(Y) = " + to_string(qy),
      "lambda = " + ext.lambda.to_string(),
      "V = " + to_string(ext.tv),
      "W = " + to_string(ext.u),
      "T0(A) = " + to_string(t0a),
      "T0(B) = " + to_string(t0b),
  };
}

BijectionResult main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y, bool trace) {
  require(X.col_alphabet().is_natural(), "main_bijection: X must have columns indexed by N");
  require(Y.col_alphabet().is_natural_dual(), "main_bijection: Y must have columns indexed by N^v");
  MainTrace tr;
  std::tie(tr.px, tr.qx) = rsk(X);
  Tableau py;
  std::tie(py, tr.qy) = rsk(Y);
  tr.ky = straight_dual_to_bar(py);
  tr.ext = ext_lr(tr.px, tr.ky);

  BijectionResult out;
  {
    auto [j, r] = switch_rectify(tr.ext.u);
    auto [s, t0] = lr_bijection_inverse(tr.qx, r);
    tr.t0a = t0;
    out.Xp = rsk_inverse(j, s);
  }
  {
    auto [jh, r] = switch_rectify(dual_tableau(tr.ext.tv));
    Tableau j = column_tableau(reverse_dual(column_word(jh)), Alphabet::natural_dual());
    auto [s, t0] = lr_bijection_inverse(tr.qy, r);
    tr.t0b = t0;
    out.Yp = rsk_inverse(j, s);
  }
  out.Z = rsk_inverse(tr.t0b, tr.t0a);
  if (trace) out.trace = std::move(tr);
  return out;
}

std::pair<GeneralizedMatrix, GeneralizedMatrix> main_bijection_inverse(const GeneralizedMatrix& Yp,
                                                                      const GeneralizedMatrix& Xp,
                                                                      const GeneralizedMatrix& Z) {
  require(Xp.col_alphabet().is_natural(), "main_bijection_inverse: X' must have columns indexed by N");
  require(Yp.col_alphabet().is_natural_dual(), "main_bijection_inverse: Y' must have columns indexed by N^v");
  require(Z.row_alphabet() == Xp.row_alphabet() && Z.col_alphabet() == Yp.row_alphabet(),
          "main_bijection_inverse: Z must lie in M_{A,B}");
  auto [t0b, t0a] = rsk(Z);
  const Partition lambda = t0a.shape().outer;

  auto [jx, sx] = rsk(Xp);
  auto ix = lr_bijection(sx, t0a);
  Tableau u = switch_rectify_inverse(jx, ix.recording);

  auto [jy, sy] = rsk(Yp);
  Tableau jh = column_tableau(reverse_dual(column_word(jy)), Alphabet::natural());
  auto iy = lr_bijection(sy, t0b);
  Tableau tv = dual_tableau(switch_rectify_inverse(jh, iy.recording));

  auto [px, ky] = ext_lr_inverse(ExtLR{lambda, tv, u});
  return {rsk_inverse(px, ix.result), rsk_inverse(bar_to_straight_dual(ky), iy.result)};
}

Report verify_main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y, const BijectionResult& r) {
  Report rep;
  rep.name = "main-bijection";
  const std::string tag = " for X=" + to_string(X) + " Y=" + to_string(Y);
  rep.check(r.Xp.row_alphabet() == X.row_alphabet() && r.Xp.col_alphabet().is_natural(), "X' alphabets" + tag);
  rep.check(r.Yp.row_alphabet() == Y.row_alphabet() && r.Yp.col_alphabet().is_natural_dual(), "Y' alphabets" + tag);
  rep.check(r.Z.row_alphabet() == X.row_alphabet() && r.Z.col_alphabet() == Y.row_alphabet(), "Z alphabets" + tag);

  Weight wa = r.Xp.row_weight();
  wa += r.Z.row_weight();
  rep.check(without_zeros(X.row_weight()) == without_zeros(wa), "wt_A additivity" + tag);
  Weight wb = r.Yp.row_weight();
  wb += r.Z.col_weight();
  rep.check(without_zeros(Y.row_weight()) == without_zeros(wb), "wt_B additivity" + tag);

  PlacticElement lhs = PlacticElement::of_word(matrix_to_biword(X).bottom) * PlacticElement::of_word(matrix_to_biword(Y).bottom);
  PlacticElement rhs = PlacticElement::of_word(matrix_to_biword(r.Yp).bottom) * PlacticElement::of_word(matrix_to_biword(r.Xp).bottom);
  rep.check(lhs == rhs.scaled(LaurentPoly::t(static_cast<int>(r.Z.total()))), "u_X u_Y = t^|Z| u_Y' u_X'" + tag);

  auto back = main_bijection_inverse(r.Yp, r.Xp, r.Z);
  rep.check(back.first == X && back.second == Y, "inverse" + tag);
  return rep;
}

Report verify_main_bijection(const GeneralizedMatrix& X, const GeneralizedMatrix& Y) {
  return verify_main_bijection(X, Y, main_bijection(X, Y));
}

bool is_lr_word_by_insertion(const Word& w, const Partition& alpha, const Partition& beta) {
  RationalPair p = positive_pair(highest_tableau(alpha));
  for (const auto& a : w) {
    if (a.part != 0) return false;
    if (a.dual)
      p = insert_dual(p, a).pair;
    else
      p = insert_positive(a, p);
    if (!p.T.empty() || !is_highest(p.S)) return false;
  }
  return p.mu() == beta;
}

bool is_lr_word_by_crystal(const Word& w, const Partition& alpha, const Partition& beta) {
  Word full = concat(column_word(highest_tableau(alpha)), w);
  return normalize_word(full).pair == positive_pair(highest_tableau(beta));
}

bool is_lr_word(const Word& w, const Partition& alpha, const Partition& beta) {
  bool a = is_lr_word_by_insertion(w, alpha, beta);
  if (a != is_lr_word_by_crystal(w, alpha, beta))
    throw std::logic_error("is_lr_word: characterizations disagree on " + to_string(w));
  return a;
}

Word matrix_pair_word(const GeneralizedMatrix& first, const GeneralizedMatrix& second) {
  return concat(matrix_to_biword(first).bottom, matrix_to_biword(second).bottom);
}

std::pair<GeneralizedMatrix, GeneralizedMatrix> ss_encode(const Partition& alpha, const Partition& beta,
                                                          const Tableau& p1, const Tableau& p2) {
  require(!p1.rotated() && !p2.rotated(), "ss_encode: tableaux must not be rotated");
  require(p1.shape().inner == alpha && p2.shape().inner == beta && p1.shape().outer == p2.shape().outer,
          "ss_encode: expected P1 of shape lambda/alpha and P2 of shape lambda/beta");
  require(is_semistandard(p1) && is_semistandard(p2), "ss_encode: tableaux must be semistandard");
  const Partition lambda = p1.shape().outer;
  auto [qx, r1] = switch_rectify(p1);
  auto [qy, r2] = switch_rectify(p2);
  auto [h1, r1p] = switch_rectify(r1);
  auto [h2, r2p] = switch_rectify(r2);
  require(h1 == highest_tableau(alpha) && h2 == highest_tableau(beta), "ss_encode: LR swap failed");
  auto [ha, s] = lr_bijection_inverse(highest_tableau(lambda), r1p);
  require(ha == highest_tableau(alpha), "ss_encode: positive part is not an LR word");
  const Partition nu = qy.shape().outer;
  auto [hl, t] = bijection_32_inverse(positive_pair(highest_tableau(beta)), r2p, trivial_lr(nu));
  require(hl == highest_tableau(lambda), "ss_encode: dual part is not an LR word");
  return {rsk_inverse(s, qx), rsk_inverse(bar_to_straight_dual(t), qy)};
}

std::pair<Tableau, Tableau> ss_encode_inverse(const Partition& alpha, const Partition& beta,
                                              const GeneralizedMatrix& X, const GeneralizedMatrix& Y) {
  auto [s, qx] = rsk(X);
  auto [py, qy] = rsk(Y);
  Tableau t = straight_dual_to_bar(py);
  auto lb = lr_bijection(highest_tableau(alpha), s);
  require(is_highest(lb.result), "ss_encode_inverse: u_X is not an LR word");
  auto b = bijection_32(lb.result, t);
  require(b.pair == positive_pair(highest_tableau(beta)), "ss_encode_inverse: u_X u_Y is not an LR word");
  Tableau r1 = switch_rectify_inverse(highest_tableau(alpha), lb.recording);
  Tableau r2 = switch_rectify_inverse(highest_tableau(beta), b.lr_plus);
  return {switch_rectify_inverse(qx, r1), switch_rectify_inverse(qy, r2)};
}

std::pair<Tableau, Tableau> ss_decode(const Partition& alpha, const Partition& beta, const GeneralizedMatrix& Yp,
                                      const GeneralizedMatrix& Xp) {
  auto [py, qyp] = rsk(Yp);
  Tableau tp = straight_dual_to_bar(py);
  auto [sp, qxp] = rsk(Xp);
  auto b = bijection_32(highest_tableau(alpha), tp);
  require(b.pair.T.empty() && is_highest(b.pair.S), "ss_decode: u_Y' is not an LR word");
  const Tableau h_eta = b.pair.S;
  auto lb = lr_bijection(h_eta, sp);
  require(lb.result == highest_tableau(beta), "ss_decode: u_Y' u_X' is not an LR word");
  auto [h_tau, ra] = switch_rectify(b.lr_plus);
  auto [h_sigma, rb] = switch_rectify(lb.recording);
  require(is_highest(h_tau) && is_highest(h_sigma), "ss_decode: LR swap failed");
  return {switch_rectify_inverse(qxp, rb), switch_rectify_inverse(qyp, ra)};
}

std::pair<GeneralizedMatrix, GeneralizedMatrix> ss_decode_inverse(const Partition& alpha, const Partition& beta,
                                                                  const Tableau& q1, const Tableau& q2) {
  const Partition eta = q1.shape().inner;
  require(q2.shape().inner == eta && q1.shape().outer == beta && q2.shape().outer == alpha,
          "ss_decode_inverse: expected Q1 of shape beta/eta and Q2 of shape alpha/eta");
  require(is_semistandard(q1) && is_semistandard(q2), "ss_decode_inverse: tableaux must be semistandard");
  auto [qxp, rb] = switch_rectify(q1);
  auto [qyp, ra] = switch_rectify(q2);
  const Partition sigma = qxp.shape().outer, tau = qyp.shape().outer;
  Tableau rec = switch_rectify_inverse(highest_tableau(sigma), rb);
  Tableau lra = switch_rectify_inverse(highest_tableau(tau), ra);
  auto [h_eta, sp] = lr_bijection_inverse(highest_tableau(beta), rec);
  require(h_eta == highest_tableau(eta), "ss_decode_inverse: inconsistent LR data");
  auto [h_alpha, tp] = bijection_32_inverse(positive_pair(highest_tableau(eta)), lra, trivial_lr(tau));
  require(h_alpha == highest_tableau(alpha), "ss_decode_inverse: inconsistent LR data");
  return {rsk_inverse(bar_to_straight_dual(tp), qyp), rsk_inverse(sp, qxp)};
}

SaganStanleyResult sagan_stanley(const Partition& alpha, const Partition& beta, const Tableau& p1, const Tableau& p2) {
  auto [X, Y] = ss_encode(alpha, beta, p1, p2);
  BijectionResult r = main_bijection(X, Y, true);
  auto [q1, q2] = ss_decode(alpha, beta, r.Yp, r.Xp);
  const MainTrace& tr = *r.trace;
  SaganStanleyResult out{q1, q2, r.Z, {}};
  out.stage_words = {
      matrix_pair_word(X, Y),
      concat(column_word(tr.px), column_word(tr.ky)),
      concat(column_word(tr.ext.tv), column_word(tr.ext.u)),
      matrix_pair_word(r.Yp, r.Xp),
  };
  return out;
}

std::pair<Tableau, Tableau> sagan_stanley_inverse(const Partition& alpha, const Partition& beta, const Tableau& q1,
                                                  const Tableau& q2, const GeneralizedMatrix& z) {
  auto [Yp, Xp] = ss_decode_inverse(alpha, beta, q1, q2);
  auto [X, Y] = main_bijection_inverse(Yp, Xp, z);
  return ss_encode_inverse(alpha, beta, X, Y);
}

LRQuadruple restricted_32(const Partition& alpha, const Partition& beta, const Tableau& r1, const Tableau& r2) {
  require(r1.shape().inner == alpha && r2.shape().inner == beta && r1.shape().outer == r2.shape().outer,
          "restricted_32: expected R1 in LR^lambda_{alpha mu} and R2 in LR^lambda_{beta nu}");
  require(is_lr_tableau(r1) && is_lr_tableau(r2), "restricted_32: inputs must be LR tableaux");
  const Partition lambda = r1.shape().outer;
  auto [ha, s] = lr_bijection_inverse(highest_tableau(lambda), r1);
  require(ha == highest_tableau(alpha), "restricted_32: bad R1");
  const Partition nu = lr_content(r2);
  auto [hl, t] = bijection_32_inverse(positive_pair(highest_tableau(beta)), r2, trivial_lr(nu));
  require(hl == highest_tableau(lambda), "restricted_32: bad R2");

  auto b = bijection_32(s, t);
  auto [t2, s2] = bijection_31_inverse(b.pair);
  auto b2 = bijection_32(highest_tableau(alpha), t2);
  require(b2.pair.T.empty() && is_highest(b2.pair.S), "restricted_32: word is not an LR word");
  auto lb = lr_bijection(b2.pair.S, s2);
  require(lb.result == highest_tableau(beta), "restricted_32: word is not an LR word");
  return {b2.lr_plus, lb.recording, b.lr_plus, b.lr_minus};
}

std::pair<Tableau, Tableau> restricted_32_inverse(const Partition& alpha, const Partition& beta, const LRQuadruple& q) {
  const Partition eta = q.a.shape().inner;
  const Partition tau = lr_content(q.a);
  auto [h_alpha, t2] = bijection_32_inverse(positive_pair(highest_tableau(eta)), q.a, trivial_lr(tau));
  require(h_alpha == highest_tableau(alpha), "restricted_32_inverse: bad first component");
  auto [h_eta, s2] = lr_bijection_inverse(highest_tableau(beta), q.b);
  require(h_eta == highest_tableau(eta), "restricted_32_inverse: bad second component");
  RationalPair pair = bijection_31(t2, s2);
  auto [s, t] = bijection_32_inverse(pair, q.c, q.d);
  auto lb = lr_bijection(highest_tableau(alpha), s);
  require(is_highest(lb.result), "restricted_32_inverse: not an LR word");
  auto b = bijection_32(lb.result, t);
  require(b.pair == positive_pair(highest_tableau(beta)), "restricted_32_inverse: not an LR word");
  return {lb.recording, b.lr_plus};
}

}  // namespace placto
