#include "placto/io.hpp"

#include <stdexcept>

namespace placto {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

/// Rejects fields outside `allowed`.
void only_fields(const Json& j, std::initializer_list<const char*> allowed) {
  require(j.is_object(), "expected a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || k == a;
    require(known, "unknown field '" + k + "'");
  }
}

}  // namespace

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    require(x.is_number_integer() && x.get<int>() > 0, "partition parts must be positive integers");
    parts.push_back(x.get<int>());
  }
  require(std::is_sorted(parts.rbegin(), parts.rend()), "partition parts must weakly decrease");
  return Partition(parts);
}

Json to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) {
    Json row = Json::array();
    for (const auto& a : r) row.push_back(letter_to_string(a, t.alphabet()));
    rows.push_back(row);
  }
  return {{"shape", {{"outer", to_json(t.shape().outer)}, {"inner", to_json(t.shape().inner)}}},
          {"alphabet", t.alphabet().to_string()},
          {"rows", rows},
          {"rotated", t.rotated()}};
}

Tableau tableau_from_json(const Json& j) {
  only_fields(j, {"shape", "alphabet", "rows", "rotated"});
  const Json& sh = field(j, "shape");
  only_fields(sh, {"outer", "inner"});
  SkewShape shape(partition_from_json(field(sh, "outer")),
                  sh.contains("inner") ? partition_from_json(sh.at("inner")) : Partition{});
  Alphabet A = Alphabet::parse(field(j, "alphabet").get<std::string>());
  Rows rows;
  for (const auto& r : field(j, "rows")) {
    std::vector<Letter> row;
    for (const auto& a : r) row.push_back(letter_from_string(a.get<std::string>(), A));
    rows.push_back(row);
  }
  bool rotated = j.contains("rotated") && j.at("rotated").get<bool>();
  Tableau t(A, shape, rows, rotated);
  require(is_semistandard(t), "tableau is not semistandard");
  return t;
}

Json to_json(const GeneralizedMatrix& m) {
  Json entries = Json::array();
  for (const auto& [ij, c] : m.entries())
    entries.push_back({letter_to_string(ij.first, m.row_alphabet()), letter_to_string(ij.second, m.col_alphabet()), c});
  return {{"rows", m.row_alphabet().to_string()}, {"cols", m.col_alphabet().to_string()}, {"entries", entries}};
}

GeneralizedMatrix matrix_from_json(const Json& j) {
  only_fields(j, {"rows", "cols", "entries"});
  GeneralizedMatrix m(Alphabet::parse(field(j, "rows").get<std::string>()),
                      Alphabet::parse(field(j, "cols").get<std::string>()));
  for (const auto& e : field(j, "entries")) {
    require(e.is_array() && e.size() == 3, "matrix entries are [i, j, count]");
    long c = e[2].get<long>();
    require(c >= 0, "matrix entries must be nonnegative");
    m.add(letter_from_string(e[0].get<std::string>(), m.row_alphabet()),
          letter_from_string(e[1].get<std::string>(), m.col_alphabet()), c);
  }
  return m;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  require(j.is_array(), "coefficient must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    only_fields(term, {"exp", "num", "den"});
    mpq_class c(mpz_class(field(term, "num").get<std::string>()), mpz_class(field(term, "den").get<std::string>()));
    require(c.get_den() != 0, "zero denominator");
    c.canonicalize();
    p = p + LaurentPoly(c, field(term, "exp").get<int>());
  }
  return p;
}

Json to_json(const RationalPair& p) { return {{"S", to_json(p.S)}, {"T", to_json(p.T)}}; }

Json to_json(const NormalForm& nf) {
  return {{"epsilon", nf.epsilon},
          {"S", to_json(nf.pair.S)},
          {"T", to_json(nf.pair.T)},
          {"canonical_word", to_string(canonical_word(nf))}};
}

Json to_json(const PlacticElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) out.push_back({{"pair", to_json(normalize_word(w).pair)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const SAlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"mu", to_json(k.first)}, {"nu", to_json(k.second)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const Report& r) {
  return {{"suite", r.name},
          {"ok", r.ok()},
          {"failures", r.failures},
          {"stats",
           {{"domain_size", r.domain_size}, {"max_degree", r.max_degree}, {"elapsed_ms", r.elapsed_ms}, {"checks", r.checks}}}};
}

Json to_json(const BijectionResult& r) {
  Json out{{"Yp", to_json(r.Yp)}, {"Xp", to_json(r.Xp)}, {"Z", to_json(r.Z)}};
  if (r.trace) out["trace"] = r.trace->lines();
  return out;
}

}  // namespace placto
