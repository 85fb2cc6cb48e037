#include "placto/laurent.hpp"

namespace placto {

mpq_class LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int exp, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpq_class LaurentPoly::at_one() const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  *this = std::move(r);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str() + "*";
    s += "t";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace placto
