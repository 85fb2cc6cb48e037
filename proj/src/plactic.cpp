#include "placto/plactic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "placto/enumerate.hpp"

namespace placto {

namespace {

void require_mixed_word(const Word& w) {
  for (const auto& a : w)
    if (a.part != 0 || a.index < 1) throw std::invalid_argument("word must lie over N u N^v");
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Unmatched signs of the i-signature: positions carrying an unmatched -
/// (left to right) and an unmatched + (left to right).
struct Signature {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> plus;
};

Signature signature(const Word& w, int i) {
  Signature s;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Letter& a = w[p];
    bool eps = a.dual ? a.index == i : a.index == i + 1;
    bool phi = a.dual ? a.index == i + 1 : a.index == i;
    if (eps) {
      if (!s.plus.empty())
        s.plus.pop_back();
      else
        s.minus.push_back(p);
    }
    if (phi) s.plus.push_back(p);
  }
  return s;
}

}  // namespace

NormalForm normalize_word(const Word& w) {
  require_mixed_word(w);
  auto [pair, eps] = insert_word(w);
  const long size = pair.mu().size() + pair.nu().size();
  if (2L * eps != static_cast<long>(w.size()) - size)
    throw std::logic_error("normalize_word: cancellation count mismatch");
  return NormalForm{eps, std::move(pair)};
}

Word canonical_word(const RationalPair& p) { return concat(column_word(p.S), column_word(p.T)); }

bool WordKeyLess::operator()(const Word& a, const Word& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LetterKeyLess{});
}

PlacticElement PlacticElement::basis(const RationalPair& p, const LaurentPoly& c) {
  PlacticElement x;
  x.add(canonical_word(p), c);
  return x;
}

PlacticElement PlacticElement::of_word(const Word& w, const LaurentPoly& c) {
  NormalForm nf = normalize_word(w);
  return basis(nf.pair, c * LaurentPoly::t(nf.epsilon));
}

LaurentPoly PlacticElement::coeff(const RationalPair& p) const {
  auto it = terms_.find(canonical_word(p));
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<RationalPair, LaurentPoly>> PlacticElement::expand() const {
  std::vector<std::pair<RationalPair, LaurentPoly>> r;
  for (const auto& [w, c] : terms_) r.emplace_back(normalize_word(w).pair, c);
  return r;
}

void PlacticElement::add(const Word& canonical, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(canonical, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PlacticElement& PlacticElement::operator+=(const PlacticElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PlacticElement& PlacticElement::operator-=(const PlacticElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PlacticElement PlacticElement::scaled(const LaurentPoly& c) const {
  PlacticElement r;
  for (const auto& [w, d] : terms_) r.add(w, d * c);
  return r;
}

std::string PlacticElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*u[" + placto::to_string(w) + "]";
  }
  return s;
}

PlacticElement multiply(const PlacticElement& x, const PlacticElement& y) {
  PlacticElement r;
  for (const auto& [w1, c1] : x.terms()) {
    for (const auto& [w2, c2] : y.terms()) {
      NormalForm nf = normalize_word(concat(w1, w2));
      r.add(canonical_word(nf.pair), (c1 * c2).shifted(nf.epsilon));
    }
  }
  return r;
}

std::vector<Relation> defining_relations(int n) {
  auto P = [](int i) { return Letter::positive(i); };
  auto D = [](int i) { return Letter::negative(i); };
  std::vector<Relation> rels;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (j <= i && i < k) {
          rels.push_back({"knuth-1", {P(i), P(j), P(k)}, {P(i), P(k), P(j)}, 0});
          rels.push_back({"knuth-1-dual", {D(k), D(j), D(i)}, {D(j), D(k), D(i)}, 0});
        }
        if (j < i && i <= k) {
          rels.push_back({"knuth-2", {P(j), P(k), P(i)}, {P(k), P(j), P(i)}, 0});
          rels.push_back({"knuth-2-dual", {D(i), D(k), D(j)}, {D(i), D(j), D(k)}, 0});
        }
      }
    }
  }
  rels.push_back({"cancel", {P(1), D(1)}, {}, 1});
  for (int i = 1; i < n; ++i) rels.push_back({"exchange", {P(i + 1), D(i + 1)}, {D(i), P(i)}, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) rels.push_back({"commute", {P(i), D(j)}, {D(j), P(i)}, 0});
  return rels;
}

Report verify_defining_relations(int n, int contexts, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("verify_defining_relations: n must be at least 2");
  Report rep;
  rep.name = "relations";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, 4), letter_dist(1, n + 1), dual_dist(0, 1);
  auto random_word = [&](int len) {
    Word w;
    for (int q = 0; q < len; ++q) w.push_back(Letter{letter_dist(rng), dual_dist(rng) == 1, 0});
    return w;
  };
  for (const auto& rel : defining_relations(n)) {
    for (int c = 0; c <= contexts; ++c) {
      Word pre, suf;
      if (c > 0) {
        int total = len_dist(rng);
        std::uniform_int_distribution<int> split(0, total);
        int a = split(rng);
        pre = random_word(a);
        suf = random_word(total - a);
      }
      NormalForm l = normalize_word(concat(concat(pre, rel.lhs), suf));
      NormalForm r = normalize_word(concat(concat(pre, rel.rhs), suf));
      r.epsilon += rel.t_power;
      rep.check(l == r, rel.family + ": " + to_string(pre) + " | " + to_string(rel.lhs) + " = t^" +
                            std::to_string(rel.t_power) + " " + to_string(rel.rhs) + " | " + to_string(suf));
    }
  }
  return rep;
}

std::map<int, long> crystal_wt(const Word& w) {
  std::map<int, long> wt;
  for (const auto& a : w) {
    long& v = wt[a.index];
    v += a.dual ? -1 : 1;
    if (v == 0) wt.erase(a.index);
  }
  return wt;
}

std::optional<Word> crystal_f(const Word& w, int i) {
  require_mixed_word(w);
  Signature s = signature(w, i);
  if (s.plus.empty()) return std::nullopt;
  Word r = w;
  Letter& a = r[s.plus.front()];
  a.index = a.dual ? i : i + 1;
  return r;
}

std::optional<Word> crystal_e(const Word& w, int i) {
  require_mixed_word(w);
  Signature s = signature(w, i);
  if (s.minus.empty()) return std::nullopt;
  Word r = w;
  Letter& a = r[s.minus.back()];
  a.index = a.dual ? i + 1 : i;
  return r;
}

int crystal_epsilon(const Word& w, int i) { return static_cast<int>(signature(w, i).minus.size()); }
int crystal_phi(const Word& w, int i) { return static_cast<int>(signature(w, i).plus.size()); }

bool crystal_equivalent(const Word& w, const Word& w2) { return normalize_word(w).pair == normalize_word(w2).pair; }

std::vector<Word> mixed_words(int max_len, int cap) {
  std::vector<Letter> letters;
  for (int i = 1; i <= cap; ++i) letters.push_back(Letter::positive(i));
  for (int i = 1; i <= cap; ++i) letters.push_back(Letter::negative(i));
  std::vector<Word> all;
  for (int len = 0; len <= max_len; ++len)
    for (auto& w : enumerate_words(letters, len)) all.push_back(std::move(w));
  return all;
}

}  // namespace placto
