#include "placto/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace placto {

Alphabet Alphabet::natural() { return Alphabet({Component{false, false, {}}}); }

Alphabet Alphabet::natural_dual() { return Alphabet({Component{false, true, {}}}); }

Alphabet Alphabet::finite(const std::string& signature) {
  std::vector<int> deg;
  for (char c : signature) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad degree signature: " + signature);
    deg.push_back(c - '0');
  }
  return finite(std::move(deg));
}

Alphabet Alphabet::finite(std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("finite alphabet must be nonempty");
  for (int d : degrees)
    if (d != 0 && d != 1) throw std::invalid_argument("degree must be 0 or 1");
  return Alphabet({Component{true, false, std::move(degrees)}});
}

const Alphabet::Component& Alphabet::component_of(const Letter& a) const {
  if (a.part < 0 || a.part >= static_cast<int>(comps_.size()))
    throw std::invalid_argument("letter component out of range");
  return comps_[static_cast<std::size_t>(a.part)];
}

bool Alphabet::contains(const Letter& a) const {
  if (a.part < 0 || a.part >= static_cast<int>(comps_.size())) return false;
  const auto& c = comps_[static_cast<std::size_t>(a.part)];
  if (a.dual != c.dual || a.index < 1) return false;
  return !c.finite || a.index <= c.size();
}

int Alphabet::degree(const Letter& a) const {
  if (!contains(a)) throw std::invalid_argument("letter not in alphabet " + to_string());
  const auto& c = component_of(a);
  return c.finite ? c.degrees[static_cast<std::size_t>(a.index - 1)] : 0;
}

std::int64_t Alphabet::key(const Letter& a) const {
  if (!contains(a)) throw std::invalid_argument("letter not in alphabet " + to_string());
  constexpr std::int64_t span = std::int64_t{1} << 32;
  std::int64_t inner = a.dual ? (span / 2 - a.index) : a.index;
  return a.part * span + inner;
}

bool Alphabet::less(const Letter& a, const Letter& b) const { return key(a) < key(b); }

bool Alphabet::is_finite() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.finite; });
}

int Alphabet::size() const {
  if (!is_finite()) throw std::logic_error("size of an infinite alphabet");
  int n = 0;
  for (const auto& c : comps_) n += c.size();
  return n;
}

std::vector<Letter> Alphabet::letters() const {
  if (!is_finite()) throw std::logic_error("letters of an infinite alphabet");
  return letters_capped(0);
}

std::vector<Letter> Alphabet::letters_capped(int cap) const {
  std::vector<Letter> out;
  for (std::size_t p = 0; p < comps_.size(); ++p) {
    const auto& c = comps_[p];
    int n = c.finite ? c.size() : cap;
    std::vector<Letter> part;
    for (int i = 1; i <= n; ++i) part.push_back(Letter{i, c.dual, static_cast<int>(p)});
    if (c.dual) std::reverse(part.begin(), part.end());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::pair<int, int> Alphabet::degree_counts() const {
  int even = 0, odd = 0;
  for (const auto& c : comps_) {
    if (!c.finite) return {-1, odd};
    for (int d : c.degrees) (d ? odd : even)++;
  }
  return {even, odd};
}

Alphabet Alphabet::dual() const {
  std::vector<Component> out(comps_.rbegin(), comps_.rend());
  for (auto& c : out) c.dual = !c.dual;
  return Alphabet(std::move(out));
}

Letter Alphabet::dual_of(const Letter& a) const {
  if (!contains(a)) throw std::invalid_argument("letter not in alphabet " + to_string());
  return Letter{a.index, !a.dual, static_cast<int>(comps_.size()) - 1 - a.part};
}

Alphabet Alphabet::glue(const Alphabet& other) const {
  std::vector<Component> out = comps_;
  out.insert(out.end(), other.comps_.begin(), other.comps_.end());
  return Alphabet(std::move(out));
}

Letter Alphabet::glued_right(const Letter& a) const {
  return Letter{a.index, a.dual, a.part + static_cast<int>(comps_.size())};
}

std::string Alphabet::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < comps_.size(); ++p) {
    if (p) s += "*";
    const auto& c = comps_[p];
    if (c.finite) {
      s += "[";
      for (int d : c.degrees) s += static_cast<char>('0' + d);
      s += "]";
    } else {
      s += "N";
    }
    if (c.dual) s += "v";
  }
  return s;
}

Alphabet Alphabet::parse(const std::string& text) {
  std::vector<Component> comps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string piece = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    Component c;
    if (!piece.empty() && piece.back() == 'v') {
      c.dual = true;
      piece.pop_back();
    }
    if (piece == "N") {
      c.finite = false;
    } else if (piece.size() >= 3 && piece.front() == '[' && piece.back() == ']') {
      c.finite = true;
      for (char ch : piece.substr(1, piece.size() - 2)) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bad alphabet: " + text);
        c.degrees.push_back(ch - '0');
      }
    } else {
      throw std::invalid_argument("bad alphabet: " + text);
    }
    comps.push_back(std::move(c));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Alphabet(std::move(comps));
}

std::string letter_token(const Letter& a) { return std::to_string(a.index) + (a.dual ? "v" : ""); }

Letter parse_letter_token(const std::string& tok) {
  std::string body = tok;
  bool dual = false;
  if (!body.empty() && body.back() == 'v') {
    dual = true;
    body.pop_back();
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("bad letter token: '" + tok + "'");
  int idx = std::stoi(body);
  if (idx < 1) throw std::invalid_argument("letter index must be positive: '" + tok + "'");
  return Letter{idx, dual, 0};
}

std::string letter_to_string(const Letter& a, const Alphabet& alphabet) {
  if (!alphabet.contains(a)) throw std::invalid_argument("letter not in alphabet " + alphabet.to_string());
  std::string s;
  if (alphabet.components().size() > 1) s += "g" + std::to_string(a.part) + ":";
  if (alphabet.components()[static_cast<std::size_t>(a.part)].finite) s += "b:";
  return s + letter_token(a);
}

Letter letter_from_string(const std::string& text, const Alphabet& alphabet) {
  std::string body = text;
  int part = 0;
  if (body.size() > 1 && body[0] == 'g') {
    auto colon = body.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad letter: " + text);
    part = std::stoi(body.substr(1, colon - 1));
    body = body.substr(colon + 1);
  }
  if (body.rfind("b:", 0) == 0) body = body.substr(2);
  Letter a = parse_letter_token(body);
  a.part = part;
  if (!alphabet.contains(a)) throw std::invalid_argument("letter " + text + " not in alphabet " + alphabet.to_string());
  return a;
}

}  // namespace placto
