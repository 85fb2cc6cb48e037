#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace placto {

/// A letter of a graded alphabet. `index` is the position inside its
/// component (1-based), `dual` marks i^v, and `part` selects the component
/// of a glued alphabet.
struct Letter {
  int index = 1;
  bool dual = false;
  int part = 0;

  static Letter positive(int i) { return Letter{i, false, 0}; }
  static Letter negative(int i) { return Letter{i, true, 0}; }

  Letter dualized() const { return Letter{index, !dual, part}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Structural order for use as a container key. It is not the alphabet order.
struct LetterKeyLess {
  bool operator()(const Letter& a, const Letter& b) const {
    if (a.part != b.part) return a.part < b.part;
    if (a.dual != b.dual) return a.dual < b.dual;
    return a.index < b.index;
  }
};

/// A linearly ordered Z2-graded set: a concatenation (gluing) of components,
/// each either the natural numbers or a finite graded interval [n], possibly
/// dualized. Natural alphabets are never materialized.
class Alphabet {
 public:
  struct Component {
    bool finite = false;
    bool dual = false;
    std::vector<int> degrees;  // finite only, degrees[i-1] in {0,1}

    int size() const { return static_cast<int>(degrees.size()); }
    friend bool operator==(const Component&, const Component&) = default;
  };

  Alphabet() : Alphabet(natural()) {}

  static Alphabet natural();
  static Alphabet natural_dual();
  /// [n] with degree signature, e.g. "01" is {1 < 2} with |1|=0, |2|=1.
  static Alphabet finite(const std::string& signature);
  static Alphabet finite(std::vector<int> degrees);

  const std::vector<Component>& components() const { return comps_; }

  bool contains(const Letter& a) const;
  int degree(const Letter& a) const;
  /// Strict alphabet order. Throws std::invalid_argument for foreign letters.
  bool less(const Letter& a, const Letter& b) const;
  /// Order-preserving integer key of a letter of this alphabet.
  std::int64_t key(const Letter& a) const;

  bool is_natural() const { return comps_.size() == 1 && !comps_[0].finite && !comps_[0].dual; }
  bool is_natural_dual() const { return comps_.size() == 1 && !comps_[0].finite && comps_[0].dual; }
  bool is_finite() const;
  /// Number of letters; only for finite alphabets.
  int size() const;
  /// Letters in increasing order; only for finite alphabets.
  std::vector<Letter> letters() const;
  /// Letters 1..cap of a natural component (or all letters of finite ones),
  /// in increasing order.
  std::vector<Letter> letters_capped(int cap) const;

  /// (counts of degree-0 letters, degree-1 letters); -1 means infinite.
  std::pair<int, int> degree_counts() const;

  Alphabet dual() const;
  /// The letter a^v of dual(), for a letter a of this alphabet.
  Letter dual_of(const Letter& a) const;
  /// Every letter of *this is below every letter of other.
  Alphabet glue(const Alphabet& other) const;
  /// Re-tags a letter of `other` as a letter of this->glue(other).
  Letter glued_right(const Letter& a) const;

  std::string to_string() const;
  static Alphabet parse(const std::string& text);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::vector<Component> comps) : comps_(std::move(comps)) {}
  const Component& component_of(const Letter& a) const;

  std::vector<Component> comps_;
};

/// Text form of a letter relative to an alphabet: "3", "3v" for natural
/// components, "b:2", "b:2v" for finite ones, prefixed by "g<part>:" for
/// glued alphabets with more than one component.
std::string letter_to_string(const Letter& a, const Alphabet& alphabet);
Letter letter_from_string(const std::string& text, const Alphabet& alphabet);

/// Tokens for N u N^v words: "3" and "3v".
std::string letter_token(const Letter& a);
Letter parse_letter_token(const std::string& tok);

}  // namespace placto

template <>
struct std::hash<placto::Letter> {
  std::size_t operator()(const placto::Letter& a) const noexcept {
    return std::hash<int>()(a.index * 4 + (a.dual ? 1 : 0) + (a.part << 20));
  }
};
