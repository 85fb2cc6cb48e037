#pragma once

#include <map>
#include <string>
#include <utility>

#include "placto/laurent.hpp"
#include "placto/partition.hpp"
#include "placto/plactic.hpp"
#include "placto/report.hpp"

namespace placto {

/// Q[t,t^-1]-combination of s_{mu,nu}(u) = s^v_nu(u) s_mu(u).
class SAlgebraElement {
 public:
  using Key = std::pair<Partition, Partition>;  // (mu, nu)
  using Terms = std::map<Key, LaurentPoly>;

  SAlgebraElement() = default;
  static SAlgebraElement one() { return basis({}, {}); }
  static SAlgebraElement basis(const Partition& mu, const Partition& nu, const LaurentPoly& c = 1);
  /// h_k(u) = s_{(k)}(u) and h^v_k(u) = s^v_{(k)}(u); h_0 = 1.
  static SAlgebraElement h(int k);
  static SAlgebraElement h_dual(int k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& mu, const Partition& nu) const;

  void add(const Key& k, const LaurentPoly& c);
  SAlgebraElement& operator+=(const SAlgebraElement& o);
  SAlgebraElement& operator-=(const SAlgebraElement& o);
  friend SAlgebraElement operator+(SAlgebraElement a, const SAlgebraElement& b) { return a += b; }
  friend SAlgebraElement operator-(SAlgebraElement a, const SAlgebraElement& b) { return a -= b; }
  SAlgebraElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const SAlgebraElement&, const SAlgebraElement&) = default;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product of Schur functions s_a s_b in the Schur basis.
std::map<Partition, long> schur_product(const Partition& a, const Partition& b);
/// s_{lambda/mu} in the Schur basis.
std::map<Partition, long> skew_schur(const Partition& lambda, const Partition& mu);

/// s_{mu,nu}(u) s_{sigma,tau}(u).
SAlgebraElement s_basis_mult(const SAlgebraElement::Key& a, const SAlgebraElement::Key& b);
SAlgebraElement multiply(const SAlgebraElement& x, const SAlgebraElement& y);
inline SAlgebraElement operator*(const SAlgebraElement& x, const SAlgebraElement& y) { return multiply(x, y); }

/// p_k(u) (dual = false) or p^v_k(u) (dual = true) from Newton's identity
/// k h_k = sum_{i=1}^k p_i h_{k-i}.
SAlgebraElement power_sum(int k, bool dual);
/// p_k(u) p^v_l(u) - p^v_l(u) p_k(u).
SAlgebraElement heisenberg_commutator(int k, int l);
/// h_s h^v_r = sum_{i=0}^{min(r,s)} t^i h^v_{r-i} h_{s-i}.
bool defining_rel_check(int r, int s);

/// Schur-basis expansion of an element of Lambda(t).
class SymmetricFunctionElement {
 public:
  using Terms = std::map<Partition, LaurentPoly>;

  SymmetricFunctionElement() = default;
  static SymmetricFunctionElement schur(const Partition& lambda, const LaurentPoly& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& lambda) const;

  void add(const Partition& lambda, const LaurentPoly& c);
  SymmetricFunctionElement& operator+=(const SymmetricFunctionElement& o);
  SymmetricFunctionElement& operator-=(const SymmetricFunctionElement& o);
  friend SymmetricFunctionElement operator+(SymmetricFunctionElement a, const SymmetricFunctionElement& b) {
    return a += b;
  }
  friend SymmetricFunctionElement operator-(SymmetricFunctionElement a, const SymmetricFunctionElement& b) {
    return a -= b;
  }
  SymmetricFunctionElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const SymmetricFunctionElement&, const SymmetricFunctionElement&) = default;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// The Schur operator of a letter: i^v adds a box to row i, i removes a box
/// from row i and multiplies by t.
SymmetricFunctionElement schur_operator_apply(const Letter& gen, const SymmetricFunctionElement& f);
/// psi(u_w) f, rightmost letter acting first.
SymmetricFunctionElement psi_apply(const Word& w, const SymmetricFunctionElement& f);
SymmetricFunctionElement psi_apply(const PlacticElement& x, const SymmetricFunctionElement& f);
/// s_{mu,nu}(u-bar) acts by f -> s^v_nu(u-bar)(s_mu(u-bar) f), where
/// s_mu(u-bar) s_lambda = t^|mu| s_{lambda/mu} and s^v_nu(u-bar) s_lambda = s_lambda s_nu.
SymmetricFunctionElement psi_apply(const SAlgebraElement& x, const SymmetricFunctionElement& f);
/// Every relation with indices <= n annihilates each s_gamma, |gamma| <= n + 2.
Report verify_psi_relations(int n);

}  // namespace placto
