#include "placto/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "placto/knuth.hpp"

namespace placto {

namespace {

template <class Map, class Key>
void add_term(Map& terms, const Key& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

SAlgebraElement SAlgebraElement::basis(const Partition& mu, const Partition& nu, const LaurentPoly& c) {
  SAlgebraElement x;
  x.add({mu, nu}, c);
  return x;
}

SAlgebraElement SAlgebraElement::h(int k) {
  if (k < 0) throw std::invalid_argument("h: negative degree");
  return k == 0 ? one() : basis(Partition{k}, {});
}

SAlgebraElement SAlgebraElement::h_dual(int k) {
  if (k < 0) throw std::invalid_argument("h_dual: negative degree");
  return k == 0 ? one() : basis({}, Partition{k});
}

LaurentPoly SAlgebraElement::coeff(const Partition& mu, const Partition& nu) const {
  auto it = terms_.find({mu, nu});
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SAlgebraElement::add(const Key& k, const LaurentPoly& c) { add_term(terms_, k, c); }

SAlgebraElement& SAlgebraElement::operator+=(const SAlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SAlgebraElement& SAlgebraElement::operator-=(const SAlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SAlgebraElement SAlgebraElement::scaled(const LaurentPoly& c) const {
  SAlgebraElement r;
  for (const auto& [k, d] : terms_) r.add(k, d * c);
  return r;
}

std::string SAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*s[" + k.first.to_string() + "," + k.second.to_string() + "]";
  }
  return s;
}

std::map<Partition, long> schur_product(const Partition& a, const Partition& b) {
  std::map<Partition, long> r;
  for (const auto& z : partitions_of(a.size() + b.size())) {
    if (!z.contains(a) || !z.contains(b)) continue;
    if (long c = lr_coefficient(z, a, b)) r[z] = c;
  }
  return r;
}

std::map<Partition, long> skew_schur(const Partition& lambda, const Partition& mu) {
  std::map<Partition, long> r;
  if (!lambda.contains(mu)) return r;
  for (const auto& k : partitions_of(lambda.size() - mu.size())) {
    if (!lambda.contains(k)) continue;
    if (long c = lr_coefficient(lambda, mu, k)) r[k] = c;
  }
  return r;
}

SAlgebraElement s_basis_mult(const SAlgebraElement::Key& a, const SAlgebraElement::Key& b) {
  // s^v_nu s_mu s^v_tau s_sigma, with s_mu s^v_tau = sum t^|l| c^mu_{l x} c^tau_{l y} s^v_y s_x.
  const auto& [mu, nu] = a;
  const auto& [sigma, tau] = b;
  SAlgebraElement r;
  for (const auto& lam : partitions_inside(mu)) {
    if (!tau.contains(lam)) continue;
    const LaurentPoly tl = LaurentPoly::t(lam.size());
    for (const auto& [x, cx] : skew_schur(mu, lam))
      for (const auto& [y, cy] : skew_schur(tau, lam))
        for (const auto& [zeta, cz] : schur_product(x, sigma))
          for (const auto& [eta, ce] : schur_product(nu, y)) r.add({zeta, eta}, tl * LaurentPoly(cx * cy * cz * ce));
  }
  return r;
}

SAlgebraElement multiply(const SAlgebraElement& x, const SAlgebraElement& y) {
  SAlgebraElement r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += s_basis_mult(a, b).scaled(ca * cb);
  return r;
}

SAlgebraElement power_sum(int k, bool dual) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
  auto h = [dual](int d) { return dual ? SAlgebraElement::h_dual(d) : SAlgebraElement::h(d); };
  std::vector<SAlgebraElement> p(k + 1);
  for (int m = 1; m <= k; ++m) {
    SAlgebraElement acc = h(m).scaled(LaurentPoly(m));
    for (int i = 1; i < m; ++i) acc -= multiply(p[i], h(m - i));
    p[m] = acc;
  }
  return p[k];
}

SAlgebraElement heisenberg_commutator(int k, int l) {
  SAlgebraElement pk = power_sum(k, false), pl = power_sum(l, true);
  return multiply(pk, pl) - multiply(pl, pk);
}

bool defining_rel_check(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("defining_rel_check: r, s must be positive");
  SAlgebraElement lhs = multiply(SAlgebraElement::h(s), SAlgebraElement::h_dual(r));
  SAlgebraElement rhs;
  for (int i = 0; i <= std::min(r, s); ++i)
    rhs += multiply(SAlgebraElement::h_dual(r - i), SAlgebraElement::h(s - i)).scaled(LaurentPoly::t(i));
  return lhs == rhs;
}

SymmetricFunctionElement SymmetricFunctionElement::schur(const Partition& lambda, const LaurentPoly& c) {
  SymmetricFunctionElement f;
  f.add(lambda, c);
  return f;
}

LaurentPoly SymmetricFunctionElement::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SymmetricFunctionElement::add(const Partition& lambda, const LaurentPoly& c) { add_term(terms_, lambda, c); }

SymmetricFunctionElement& SymmetricFunctionElement::operator+=(const SymmetricFunctionElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

SymmetricFunctionElement& SymmetricFunctionElement::operator-=(const SymmetricFunctionElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

SymmetricFunctionElement SymmetricFunctionElement::scaled(const LaurentPoly& c) const {
  SymmetricFunctionElement r;
  for (const auto& [k, d] : terms_) r.add(k, d * c);
  return r;
}

std::string SymmetricFunctionElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*s" + k.to_string();
  }
  return s;
}

SymmetricFunctionElement schur_operator_apply(const Letter& gen, const SymmetricFunctionElement& f) {
  if (gen.part != 0 || gen.index < 1) throw std::invalid_argument("schur_operator_apply: letter must lie in N or N^v");
  const int i = gen.index;
  SymmetricFunctionElement r;
  for (const auto& [lam, c] : f.terms()) {
    if (gen.dual) {
      if (lam.can_add(i)) r.add(lam.add_box(i), c);
    } else if (lam.can_remove(i)) {
      r.add(lam.remove_box(i), c.shifted(1));
    }
  }
  return r;
}

SymmetricFunctionElement psi_apply(const Word& w, const SymmetricFunctionElement& f) {
  SymmetricFunctionElement r = f;
  for (auto it = w.rbegin(); it != w.rend() && !r.is_zero(); ++it) r = schur_operator_apply(*it, r);
  return r;
}

SymmetricFunctionElement psi_apply(const PlacticElement& x, const SymmetricFunctionElement& f) {
  SymmetricFunctionElement r;
  for (const auto& [w, c] : x.terms()) r += psi_apply(w, f).scaled(c);
  return r;
}

SymmetricFunctionElement psi_apply(const SAlgebraElement& x, const SymmetricFunctionElement& f) {
  SymmetricFunctionElement r;
  for (const auto& [key, c] : x.terms()) {
    const auto& [mu, nu] = key;
    const LaurentPoly cm = c * LaurentPoly::t(mu.size());
    for (const auto& [lam, d] : f.terms())
      for (const auto& [kappa, ck] : skew_schur(lam, mu))
        for (const auto& [rho, cr] : schur_product(kappa, nu)) r.add(rho, cm * d * LaurentPoly(ck * cr));
  }
  return r;
}

Report verify_psi_relations(int n) {
  if (n < 2) throw std::invalid_argument("verify_psi_relations: n must be at least 2");
  Report rep;
  rep.name = "psi-relations";
  for (const auto& rel : defining_relations(n)) {
    for (const auto& gamma : partitions_up_to(n + 2)) {
      auto f = SymmetricFunctionElement::schur(gamma);
      auto l = psi_apply(rel.lhs, f);
      auto r = psi_apply(rel.rhs, f).scaled(LaurentPoly::t(rel.t_power));
      rep.check(l == r, rel.family + " " + to_string(rel.lhs) + " on s" + gamma.to_string());
    }
  }
  return rep;
}

}  // namespace placto
