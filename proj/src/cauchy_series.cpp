#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "placto/cauchy.hpp"
#include "placto/enumerate.hpp"

namespace placto {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

template <class C>
using Series = std::map<XMonomial, C>;

int degree(const XMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

XMonomial join(const XMonomial& a, const XMonomial& b) {
  XMonomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Embeds an exponent vector of A (offset 0) or B (offset |A|) into A + B.
XMonomial embed(const XMonomial& m, int offset, int total) {
  XMonomial out(total, 0);
  std::copy(m.begin(), m.end(), out.begin() + offset);
  return out;
}

template <class C>
void add_to(Series<C>& s, const XMonomial& m, const C& c) {
  if (c.is_zero()) return;
  auto it = s.find(m);
  if (it == s.end()) {
    s.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

/// Coefficientwise product of a series by the commutative kernel, truncated at D.
LaurentPoly scale(const LaurentPoly& c, const LaurentPoly& p) { return c * p; }
template <class C>
C scale(const C& c, const LaurentPoly& p) {
  return c.scaled(p);
}

template <class C>
Series<C> times_kernel(const Series<C>& s, const Series<LaurentPoly>& kernel, int D) {
  Series<C> out;
  for (const auto& [m, c] : s)
    for (const auto& [k, p] : kernel)
      if (degree(m) + degree(k) <= D) add_to(out, join(m, k), scale(c, p));
  return out;
}

/// All x-monomials s_{shape}(x_A) of SST_A(shape), as exponent vectors.
Series<LaurentPoly> skew_schur_series(const SkewShape& shape, const Alphabet& A) {
  Series<LaurentPoly> out;
  for (const auto& t : enumerate_sst(shape, A, 0)) add_to(out, monomial_of(t, A), LaurentPoly(1));
  return out;
}

std::vector<Partition> shapes_for(const Alphabet& A, int D) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(D))
    if (in_partition_set(p, A)) out.push_back(p);
  return out;
}

/// Words of one factor: positive letters i_1 >= ... >= i_k (weakly) or
/// i_1 < ... < i_k (strictly); dual letters i_1 <= ... <= i_k or i_1 > ... > i_k.
void factor_words(int k, int bound, bool dual, bool strict, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = 1; i <= bound; ++i) {
    if (!cur.empty()) {
      int prev = cur.back().index;
      bool increasing = dual ? !strict : strict;
      if (increasing && (strict ? i <= prev : i < prev)) continue;
      if (!increasing && (strict ? i >= prev : i > prev)) continue;
    }
    cur.push_back(Letter{i, dual, 0});
    factor_words(k, bound, dual, strict, cur, out);
    cur.pop_back();
  }
}

int max_length(const SymmetricFunctionElement& f) {
  int l = 0;
  for (const auto& [p, c] : f.terms()) l = std::max(l, p.length());
  return l;
}

/// Applies the factor of x_pos (Q-type if !dual, P-type if dual) to every
/// coefficient of the series.
Series<SymmetricFunctionElement> apply_factor(const Series<SymmetricFunctionElement>& s, int pos, bool dual,
                                              bool odd, int D) {
  Series<SymmetricFunctionElement> out;
  for (const auto& [m, f] : s) {
    for (int k = 0; degree(m) + k <= D; ++k) {
      std::vector<Word> words;
      Word cur;
      factor_words(k, max_length(f) + k, dual, odd, cur, words);
      SymmetricFunctionElement g;
      for (const auto& w : words) g += psi_apply(w, f);
      XMonomial m2 = m;
      m2[pos] += k;
      add_to(out, m2, g);
    }
  }
  return out;
}

Series<SymmetricFunctionElement> apply_Q(const Alphabet& A, int offset, const Series<SymmetricFunctionElement>& s,
                                         int D) {
  auto letters = A.letters();
  Series<SymmetricFunctionElement> cur = s;
  for (int i = static_cast<int>(letters.size()) - 1; i >= 0; --i)
    cur = apply_factor(cur, offset + i, false, A.degree(letters[i]) == 1, D);
  return cur;
}

Series<SymmetricFunctionElement> apply_P(const Alphabet& B, int offset, const Series<SymmetricFunctionElement>& s,
                                         int D) {
  auto letters = B.letters();
  Series<SymmetricFunctionElement> cur = s;
  for (int i = static_cast<int>(letters.size()) - 1; i >= 0; --i)
    cur = apply_factor(cur, offset + i, true, B.degree(letters[i]) == 1, D);
  return cur;
}

/// sum_lambda psi(s_{lambda,0} or s_{0,lambda}) f s_lambda(x), from the closed forms.
Series<SymmetricFunctionElement> apply_closed(const std::vector<CauchySeriesTerm>& series, int offset, int total,
                                              const Series<SymmetricFunctionElement>& s, int D) {
  Series<SymmetricFunctionElement> out;
  for (const auto& [m, f] : s)
    for (const auto& term : series)
      if (degree(m) + degree(term.monomial) <= D)
        add_to(out, join(m, embed(term.monomial, offset, total)), psi_apply(term.coeff, f));
  return out;
}

std::string monomial_string(const XMonomial& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "]";
}

template <class C>
void compare(Report& rep, const Series<C>& lhs, const Series<C>& rhs, const std::string& what) {
  std::set<XMonomial> keys;
  for (const auto& [m, c] : lhs) keys.insert(m);
  for (const auto& [m, c] : rhs) keys.insert(m);
  for (const auto& m : keys) {
    auto a = lhs.find(m), b = rhs.find(m);
    bool same = a != lhs.end() && b != rhs.end() ? a->second == b->second : false;
    rep.check(same, what + " at x^" + monomial_string(m) + ": " + (a == lhs.end() ? "0" : a->second.to_string()) +
                        " vs " + (b == rhs.end() ? "0" : b->second.to_string()));
  }
}

}  // namespace

bool in_partition_set(const Partition& lambda, const Alphabet& A) {
  auto [p, q] = A.degree_counts();
  if (p < 0 || q < 0) return true;
  return lambda.row(p + 1) <= q;
}

XMonomial monomial_of(const Tableau& t, const Alphabet& A) {
  auto letters = A.letters();
  XMonomial out(letters.size(), 0);
  for (const auto& [a, n] : weight(t)) {
    auto it = std::find(letters.begin(), letters.end(), a);
    require(it != letters.end(), "monomial_of: letter outside the alphabet");
    out[it - letters.begin()] += static_cast<int>(n);
  }
  return out;
}

std::vector<CauchySeriesTerm> cauchy_product_Q(const Alphabet& A, int D) {
  require(A.is_finite(), "cauchy_product_Q: the alphabet must be finite");
  std::vector<CauchySeriesTerm> out;
  for (const auto& lambda : shapes_for(A, D))
    for (const auto& [m, c] : skew_schur_series(SkewShape{lambda, {}}, A))
      out.push_back({m, SAlgebraElement::basis(lambda, {}, c)});
  return out;
}

std::vector<CauchySeriesTerm> cauchy_product_P(const Alphabet& B, int D) {
  require(B.is_finite(), "cauchy_product_P: the alphabet must be finite");
  std::vector<CauchySeriesTerm> out;
  for (const auto& lambda : shapes_for(B, D))
    for (const auto& [m, c] : skew_schur_series(SkewShape{lambda, {}}, B))
      out.push_back({m, SAlgebraElement::basis({}, lambda, c)});
  return out;
}

std::map<XMonomial, LaurentPoly> cauchy_kernel(const Alphabet& A, const Alphabet& B, int D) {
  require(A.is_finite() && B.is_finite(), "cauchy_kernel: alphabets must be finite");
  const auto la = A.letters(), lb = B.letters();
  const int n = static_cast<int>(la.size() + lb.size());
  Series<LaurentPoly> out{{XMonomial(n, 0), LaurentPoly(1)}};
  for (std::size_t i = 0; i < la.size(); ++i) {
    for (std::size_t j = 0; j < lb.size(); ++j) {
      const bool same = A.degree(la[i]) == B.degree(lb[j]);
      Series<LaurentPoly> factor;
      for (int k = 0; 2 * k <= D && (same || k <= 1); ++k) {
        XMonomial m(n, 0);
        m[i] = k;
        m[la.size() + j] = k;
        factor[m] = LaurentPoly::t(k);
      }
      Series<LaurentPoly> next;
      for (const auto& [m1, c1] : out)
        for (const auto& [m2, c2] : factor)
          if (degree(m1) + degree(m2) <= D) add_to(next, join(m1, m2), c1 * c2);
      out = std::move(next);
    }
  }
  return out;
}

Report verify_cauchy_identity(const Alphabet& A, const Alphabet& B, int D) {
  Report rep;
  rep.name = "cauchy";
  const int na = A.size(), n = na + B.size();
  const auto Q = cauchy_product_Q(A, D), P = cauchy_product_P(B, D);
  Series<SAlgebraElement> lhs, rhs;
  for (const auto& q : Q)
    for (const auto& p : P) {
      XMonomial m = join(embed(q.monomial, 0, n), embed(p.monomial, na, n));
      if (degree(m) > D) continue;
      add_to(lhs, m, q.coeff * p.coeff);
      add_to(rhs, m, p.coeff * q.coeff);
    }
  rhs = times_kernel(rhs, cauchy_kernel(A, B, D), D);
  compare(rep, lhs, rhs, "Q(x_A) P(x_B) = P(x_B) Q(x_A) K for A=" + A.to_string() + " B=" + B.to_string());
  return rep;
}

Report verify_operator_cauchy(const Alphabet& A, const Alphabet& B, int D, int G) {
  Report rep;
  rep.name = "operator-cauchy";
  const int na = A.size(), n = na + B.size();
  const std::string tag = " for A=" + A.to_string() + " B=" + B.to_string();
  const auto kernel = cauchy_kernel(A, B, D);
  const auto Q = cauchy_product_Q(A, D), P = cauchy_product_P(B, D);
  for (const auto& gamma : partitions_up_to(G)) {
    Series<SymmetricFunctionElement> start{{XMonomial(n, 0), SymmetricFunctionElement::schur(gamma)}};
    const std::string at = tag + " on s_" + gamma.to_string();

    auto q_factors = apply_Q(A, 0, start, D);
    compare(rep, q_factors, apply_closed(Q, 0, n, start, D), "Q-bar factors = closed form" + at);
    auto p_factors = apply_P(B, na, start, D);
    compare(rep, p_factors, apply_closed(P, na, n, start, D), "P-bar factors = closed form" + at);

    auto lhs = apply_Q(A, 0, p_factors, D);
    auto rhs = times_kernel(apply_P(B, na, q_factors, D), kernel, D);
    compare(rep, lhs, rhs, "Q-bar P-bar = P-bar Q-bar K" + at);
  }
  for (const auto& alpha : partitions_inside(Partition{2, 1}))
    for (const auto& beta : partitions_inside(Partition{2, 1})) rep.merge(verify_skew_cauchy(A, B, alpha, beta, D));
  return rep;
}

Report verify_skew_cauchy(const Alphabet& A, const Alphabet& B, const Partition& alpha, const Partition& beta, int D) {
  Report rep;
  rep.name = "skew-cauchy";
  const int na = A.size(), n = na + B.size();
  auto product = [&](const SkewShape& sa, const SkewShape& sb, Series<LaurentPoly>& into) {
    for (const auto& [ma, ca] : skew_schur_series(sa, A))
      for (const auto& [mb, cb] : skew_schur_series(sb, B)) {
        XMonomial m = join(embed(ma, 0, n), embed(mb, na, n));
        if (degree(m) <= D) add_to(into, m, ca * cb);
      }
  };
  Series<LaurentPoly> lhs, rhs;
  const int base = std::max(alpha.size(), beta.size());
  for (const auto& lambda : partitions_up_to(base + D))
    if (lambda.contains(alpha) && lambda.contains(beta) && 2 * lambda.size() - alpha.size() - beta.size() <= D)
      product(SkewShape{lambda, alpha}, SkewShape{lambda, beta}, lhs);
  for (const auto& eta : partitions_inside(alpha))
    if (beta.contains(eta)) product(SkewShape{beta, eta}, SkewShape{alpha, eta}, rhs);
  Series<LaurentPoly> kernel1;
  for (const auto& [m, c] : cauchy_kernel(A, B, D)) kernel1[m] = LaurentPoly(c.at_one(), 0);
  rhs = times_kernel(rhs, kernel1, D);
  compare(rep, lhs, rhs,
          "skew Cauchy at t=1 for A=" + A.to_string() + " B=" + B.to_string() + " alpha=" + alpha.to_string() +
              " beta=" + beta.to_string());
  return rep;
}

}  // namespace placto
