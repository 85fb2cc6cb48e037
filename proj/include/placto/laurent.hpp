#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace placto {

/// Element of Q[t, t^{-1}]: sparse exponent -> rational coefficient, with no
/// zero coefficients stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(0, mpq_class(c)); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c, int exp = 0) { add_term(exp, c); }

  /// c * t^exp
  static LaurentPoly monomial(int exp, const mpq_class& c = 1) { return LaurentPoly(c, exp); }
  static LaurentPoly t(int exp = 1) { return monomial(exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(int exp) const;
  void add_term(int exp, const mpq_class& c);

  /// Value at t = 1.
  mpq_class at_one() const;
  /// Shifted by t^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. "2*t^2 - 1/3 + t^-1"
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace placto
