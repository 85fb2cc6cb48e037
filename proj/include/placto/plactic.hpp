#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "placto/laurent.hpp"
#include "placto/rational.hpp"
#include "placto/report.hpp"

namespace placto {

/// u_w = t^epsilon u_{(S,T)}.
struct NormalForm {
  int epsilon = 0;
  RationalPair pair;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Folds the word into (empty, empty); 2 epsilon = len(w) - |mu| - |nu|.
NormalForm normalize_word(const Word& w);
/// w_col(S) followed by w_col(T).
Word canonical_word(const RationalPair& p);
inline Word canonical_word(const NormalForm& nf) { return canonical_word(nf.pair); }

/// Lexicographic order on words by structural letter keys.
struct WordKeyLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// Finite Q[t,t^-1]-combination of basis elements u_{(S,T)}, keyed by the
/// canonical word of the pair.
class PlacticElement {
 public:
  using Terms = std::map<Word, LaurentPoly, WordKeyLess>;

  PlacticElement() = default;
  static PlacticElement one() { return basis(RationalPair{}); }
  static PlacticElement basis(const RationalPair& p, const LaurentPoly& c = 1);
  /// u_w = t^eps u_{(S,T)}.
  static PlacticElement of_word(const Word& w, const LaurentPoly& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const RationalPair& p) const;
  /// Pairs in key order, rebuilt from the canonical words.
  std::vector<std::pair<RationalPair, LaurentPoly>> expand() const;

  void add(const Word& canonical, const LaurentPoly& c);
  PlacticElement& operator+=(const PlacticElement& o);
  PlacticElement& operator-=(const PlacticElement& o);
  friend PlacticElement operator+(PlacticElement a, const PlacticElement& b) { return a += b; }
  friend PlacticElement operator-(PlacticElement a, const PlacticElement& b) { return a -= b; }
  PlacticElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const PlacticElement&, const PlacticElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Bilinear product: concatenate canonical words and renormalize.
PlacticElement multiply(const PlacticElement& x, const PlacticElement& y);
inline PlacticElement operator*(const PlacticElement& x, const PlacticElement& y) { return multiply(x, y); }

/// One instance of a defining relation: u_lhs = t^t_power u_rhs.
struct Relation {
  std::string family;
  Word lhs;
  Word rhs;
  int t_power = 0;
};
/// Every relation instance with indices <= n.
std::vector<Relation> defining_relations(int n);
/// Checks each instance bare and inside `contexts` random (prefix, suffix)
/// pairs of total length <= 4 over letters <= n+1.
Report verify_defining_relations(int n, int contexts = 200, std::uint64_t seed = 1);

/// Signed content: +e_i per letter i, -e_i per letter i^v.
std::map<int, long> crystal_wt(const Word& w);
std::optional<Word> crystal_e(const Word& w, int i);
std::optional<Word> crystal_f(const Word& w, int i);
/// epsilon_i and phi_i of a word.
int crystal_epsilon(const Word& w, int i);
int crystal_phi(const Word& w, int i);
/// Equality of normalized pairs (ignores epsilon).
bool crystal_equivalent(const Word& w, const Word& w2);

/// Words of length <= max_len over 1..cap and 1v..capv.
std::vector<Word> mixed_words(int max_len, int cap);

}  // namespace placto
