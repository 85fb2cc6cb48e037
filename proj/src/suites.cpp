#include "placto/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "placto/cauchy.hpp"
#include "placto/enumerate.hpp"
#include "placto/knuth.hpp"
#include "placto/plactic.hpp"
#include "placto/rational.hpp"
#include "placto/schur.hpp"

namespace placto {

namespace {

/// Runs job(i) for i < n on the worker pool; reports merge in index order.
Report parallel(std::size_t n, const std::function<Report(std::size_t)>& job) {
  std::vector<Report> parts(n);
  const std::size_t workers = std::min<std::size_t>(std::max(1, thread_count()), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) parts[i] = job(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) parts[i] = job(i);
      });
    for (auto& t : pool) t.join();
  }
  Report out;
  for (const auto& p : parts) {
    out.merge(p);
    out.domain_size += p.domain_size;
  }
  return out;
}

std::vector<Alphabet> small_alphabets() {
  std::vector<Alphabet> out;
  for (const char* s : {"0", "1", "00", "01", "10", "11"}) out.push_back(Alphabet::finite(s));
  return out;
}

std::vector<Alphabet> alphabets_or(const std::optional<std::string>& sig) {
  if (sig) return {Alphabet::finite(*sig)};
  return small_alphabets();
}

std::vector<std::pair<Alphabet, Alphabet>> alphabet_pairs(const SuiteOptions& opt) {
  std::vector<std::pair<Alphabet, Alphabet>> out;
  for (const auto& a : alphabets_or(opt.A))
    for (const auto& b : alphabets_or(opt.B)) out.emplace_back(a, b);
  return out;
}

std::vector<Tableau> straight_tableaux(const Alphabet& A, int n, int cap) {
  std::vector<Tableau> out;
  for (const auto& lam : partitions_up_to(n))
    for (auto& t : enumerate_sst(SkewShape(lam), A, cap)) out.push_back(std::move(t));
  return out;
}

std::vector<Letter> mixed_letters(int cap) {
  std::vector<Letter> out;
  for (int i = 1; i <= cap; ++i) {
    out.push_back(Letter::positive(i));
    out.push_back(Letter::negative(i));
  }
  return out;
}

// ---- suites -----------------------------------------------------------------

Report relations(const SuiteOptions& opt) {
  Report r = verify_defining_relations(opt.n, opt.contexts, opt.seed);
  r.domain_size = r.checks;
  return r;
}

Report normal_forms(const SuiteOptions& opt) {
  const auto letters = mixed_letters(opt.letter_cap);
  Report r;
  for (int n = 0; n <= opt.word_length; ++n)
    for (const auto& w : enumerate_words(letters, n)) {
      ++r.domain_size;
      NormalForm nf = normalize_word(w);
      const std::string tag = " for " + to_string(w);
      r.check(2 * nf.epsilon == n - nf.pair.mu().size() - nf.pair.nu().size(), "2 epsilon = len - |mu| - |nu|" + tag);
      r.check(is_rational_pair(nf.pair), "normal form is a rational pair" + tag);
      NormalForm again = normalize_word(canonical_word(nf));
      r.check(again.epsilon == 0 && again.pair == nf.pair, "canonical word renormalizes to itself" + tag);
    }
  return r;
}

Report classical_roundtrips(const SuiteOptions& opt) {
  const Alphabet N = Alphabet::natural(), Nv = Alphabet::natural_dual();
  const int tc = opt.total_cap, lc = opt.letter_cap;
  auto alphabets = small_alphabets();
  Report r;

  // RSK and dual RSK
  auto cols = alphabets;
  cols.push_back(N);
  for (const auto& A : alphabets) {
    for (const auto& B : cols)
      for (const auto& m : enumerate_matrices(A, B, tc, lc)) {
        ++r.domain_size;
        auto [p, q] = rsk(m);
        r.check(rsk_inverse(p, q) == m, "rsk round trip for " + to_string(m));
      }
    for (const auto& m : enumerate_matrices(A, N, tc, lc)) {
      ++r.domain_size;
      auto [pv, q] = dual_rsk(m);
      r.check(dual_rsk_inverse(pv, q) == m, "dual rsk round trip for " + to_string(m));
    }
  }

  // skew RSK
  const auto seeds = straight_tableaux(N, tc, lc);
  for (const auto& A : alphabets)
    for (const auto& t0 : seeds)
      for (const auto& m : enumerate_matrices(A, N, tc, lc)) {
        ++r.domain_size;
        auto [t1, u] = skew_rsk(t0, m);
        auto back = skew_rsk_inverse(t1, u);
        r.check(back.first == t0 && back.second == m, "skew rsk round trip for " + to_string(t0) + " " + to_string(m));
      }

  // rational-pair bijections
  const auto pos = straight_tableaux(N, tc, lc);
  for (const auto& s : pos)
    for (const auto& tv : pos) {
      if (s.size() + tv.size() > tc) continue;
      ++r.domain_size;
      Tableau t = dual_tableau(tv);
      const std::string tag = " for S=" + to_string(s) + " T=" + to_string(t);
      RationalPair p31 = bijection_31(t, s);
      r.check(is_rational_pair(p31) && bijection_31_inverse(p31) == std::make_pair(t, s), "bijection_31 round trip" + tag);
      Bijection32 b = bijection_32(s, t);
      r.check(bijection_32_inverse(b.pair, b.lr_plus, b.lr_minus) == std::make_pair(s, t), "bijection_32 round trip" + tag);
      r.check(ext_lr_inverse(ext_lr(s, t)) == std::make_pair(s, t), "ext_lr round trip" + tag);
    }
  return r;
}

/// Every (X, Y) of the domain; full = also check the theorem invariants.
Report main_domain(const SuiteOptions& opt, bool full) {
  const auto pairs = alphabet_pairs(opt);
  return parallel(pairs.size(), [&](std::size_t i) {
    const auto& [A, B] = pairs[i];
    Report r;
    const auto xs = enumerate_matrices(A, Alphabet::natural(), opt.total_cap, opt.letter_cap);
    const auto ys = enumerate_matrices(B, Alphabet::natural_dual(), opt.total_cap, opt.letter_cap);
    for (const auto& X : xs)
      for (const auto& Y : ys) {
        ++r.domain_size;
        BijectionResult res = main_bijection(X, Y);
        if (full) {
          r.merge(verify_main_bijection(X, Y, res));
        } else {
          auto back = main_bijection_inverse(res.Yp, res.Xp, res.Z);
          r.check(back.first == X && back.second == Y, "main bijection round trip for X=" + to_string(X) + " Y=" + to_string(Y));
        }
      }
    return r;
  });
}

Report roundtrips(const SuiteOptions& opt) {
  Report r = classical_roundtrips(opt);
  Report m = main_domain(opt, false);
  r.merge(m);
  r.domain_size += m.domain_size;
  return r;
}

Report cauchy(const SuiteOptions& opt) {
  const auto pairs = alphabet_pairs(opt);
  Report r = parallel(pairs.size(), [&](std::size_t i) {
    Report one = verify_cauchy_identity(pairs[i].first, pairs[i].second, opt.deg);
    one.domain_size = one.checks;
    return one;
  });
  r.max_degree = opt.deg;
  return r;
}

Report operator_cauchy(const SuiteOptions& opt) {
  const auto pairs = alphabet_pairs(opt);
  Report r = parallel(pairs.size(), [&](std::size_t i) {
    Report one = verify_operator_cauchy(pairs[i].first, pairs[i].second, opt.deg, opt.gamma);
    one.domain_size = one.checks;
    return one;
  });
  r.max_degree = opt.deg;
  return r;
}

Report heisenberg(const SuiteOptions& opt) {
  Report r;
  for (int k = 1; k <= opt.kmax; ++k)
    for (int l = 1; l <= opt.kmax; ++l) {
      ++r.domain_size;
      SAlgebraElement expected;
      if (k == l) expected = SAlgebraElement::basis({}, {}, LaurentPoly(mpq_class(k), k));
      SAlgebraElement got = heisenberg_commutator(k, l);
      r.check(got == expected, "[p_" + std::to_string(k) + ", p^v_" + std::to_string(l) + "] = " + got.to_string());
    }
  for (int a = 1; a <= opt.rs; ++a)
    for (int b = 1; b <= opt.rs; ++b) {
      ++r.domain_size;
      r.check(defining_rel_check(a, b), "h_s h^v_r relation for r=" + std::to_string(a) + " s=" + std::to_string(b));
    }
  r.max_degree = std::max(opt.kmax, opt.rs);
  return r;
}

Report sagan_stanley_suite(const SuiteOptions& opt) {
  const std::vector<Alphabet> sigs =
      opt.A ? std::vector<Alphabet>{Alphabet::finite(*opt.A)}
            : std::vector<Alphabet>{Alphabet::finite("00"), Alphabet::finite("01"), Alphabet::finite("10"),
                                    Alphabet::finite("11")};
  const std::vector<Alphabet> sigs_b = opt.B ? std::vector<Alphabet>{Alphabet::finite(*opt.B)} : sigs;
  const auto shapes = partitions_inside(Partition{2, 1});
  const int D = std::min(opt.deg, 3);
  std::vector<std::pair<Alphabet, Alphabet>> pairs;
  for (const auto& a : sigs)
    for (const auto& b : sigs_b) pairs.emplace_back(a, b);

  Report out = parallel(pairs.size(), [&](std::size_t i) {
    const auto& [A, B] = pairs[i];
    Report r;
    for (const auto& alpha : shapes)
      for (const auto& beta : shapes) {
        const std::string tag = " for A=" + A.to_string() + " B=" + B.to_string() + " alpha=" + alpha.to_string() +
                                " beta=" + beta.to_string();
        for (const auto& lam : partitions_up_to(alpha.size() + beta.size() + D)) {
          if (!lam.contains(alpha) || !lam.contains(beta)) continue;
          if (2 * lam.size() - alpha.size() - beta.size() > D) continue;
          const auto p1s = enumerate_sst(SkewShape(lam, alpha), A, 0);
          const auto p2s = enumerate_sst(SkewShape(lam, beta), B, 0);
          for (const auto& p1 : p1s)
            for (const auto& p2 : p2s) {
              ++r.domain_size;
              SaganStanleyResult s = sagan_stanley(alpha, beta, p1, p2);
              const std::string at = tag + " P1=" + to_string(p1) + " P2=" + to_string(p2);
              r.check(s.q1.shape().outer == beta && s.q2.shape().outer == alpha &&
                          s.q1.shape().inner == s.q2.shape().inner && is_semistandard(s.q1) && is_semistandard(s.q2),
                      "output shapes" + at);
              for (std::size_t k = 0; k < s.stage_words.size(); ++k)
                r.check(is_lr_word(s.stage_words[k], alpha, beta), "stage " + std::to_string(k) + " is an LR word" + at);
              Weight wa = weight(s.q1), wb = weight(s.q2);
              wa += s.z.row_weight();
              wb += s.z.col_weight();
              std::erase_if(wa, [](const auto& kv) { return kv.second == 0; });
              std::erase_if(wb, [](const auto& kv) { return kv.second == 0; });
              r.check(wa == weight(p1) && wb == weight(p2), "weights are preserved" + at);
              r.check(sagan_stanley_inverse(alpha, beta, s.q1, s.q2, s.z) == std::make_pair(p1, p2), "round trip" + at);
            }
        }
        r.merge(verify_skew_cauchy(A, B, alpha, beta, D));
      }
    return r;
  });
  out.max_degree = D;
  return out;
}

/// LR tableaux counted from scratch: fillings of lambda/mu with content nu
/// whose reverse row reading is a lattice word.
long brute_lr(const Partition& lam, const Partition& mu, const Partition& nu) {
  long count = 0;
  for (const auto& u : enumerate_sst(SkewShape(lam, mu), Alphabet::natural(), std::max(1, nu.length()))) {
    std::vector<int> seen(nu.length() + 2, 0);
    bool lattice = true;
    for (const auto& row : u.rows())
      for (auto it = row.rbegin(); it != row.rend() && lattice; ++it) {
        int i = it->index;
        if (i > nu.length()) lattice = false;
        else if (++seen[i] > nu.row(i) || (i > 1 && seen[i] > seen[i - 1])) lattice = false;
      }
    if (lattice) ++count;
  }
  return count;
}

Report lr_oracle(const SuiteOptions& opt) {
  Report r;
  for (int n = 0; n <= opt.lr_size; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_inside(lam))
        for (const auto& nu : partitions_of(n - mu.size())) {
          ++r.domain_size;
          const std::string tag = " for " + lam.to_string() + "/" + mu.to_string() + " content " + nu.to_string();
          r.check(lr_coefficient(lam, mu, nu) == brute_lr(lam, mu, nu), "LR coefficient" + tag);
          for (const auto& u : enumerate_lr(lam, mu, nu)) {
            r.check(iota(iota_inverse(u), mu) == u, "iota round trip" + tag);
            auto [j, rec] = switch_rectify(u);
            r.check(switch_rectify_inverse(j, rec) == u, "switching round trip" + tag);
          }
        }
  // switching on every skew tableau over two letters at the same size
  for (int n = 0; n <= opt.lr_size; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_inside(lam))
        for (const auto& t : enumerate_sst(SkewShape(lam, mu), Alphabet::natural(), 2)) {
          ++r.domain_size;
          auto [j, rec] = switch_rectify(t);
          r.check(switch_rectify_inverse(j, rec) == t, "switching round trip for " + to_string(t));
        }
  return r;
}

Report worked_examples(const SuiteOptions&) {
  const Alphabet N = Alphabet::natural();
  auto rows_of = [&](std::initializer_list<const char*> rows) {
    Rows r;
    for (const char* s : rows) r.push_back(parse_word(s));
    return Tableau::straight(N, r);
  };
  Report r;
  // iota: V with rows 112 / 223 / 34 and mu = (3,1)
  Tableau v = rows_of({"1 1 2", "2 2 3", "3 4"});
  Tableau expected(N, SkewShape(Partition{5, 4, 2, 1}, Partition{3, 1}),
                   Rows{parse_word("1 1"), parse_word("1 2 2"), parse_word("2 3"), parse_word("3")});
  Tableau u = iota(v, Partition{3, 1});
  r.check(u == expected, "iota example: got " + to_string(u));
  r.check(iota_inverse(expected) == v, "iota example inverse");
  // membership in B_{(3,2,1),(2,2,1)}
  Tableau s = rows_of({"1 1 3", "2 3", "4"});
  Tableau t = dual_tableau(rows_of({"3 4", "5 5", "7"}));
  Rows shown = t.display_rows();
  r.check(shown == Rows{parse_word("7v"), parse_word("5v 5v"), parse_word("4v 3v")}, "displayed T: " + to_string(t));
  r.check(check_pair_condition(s, t), "(S,T) lies in B_{(3,2,1),(2,2,1)}");
  r.check(s.shape().outer == Partition({3, 2, 1}) && t.shape().outer == Partition({2, 2, 1}), "shapes of (S,T)");
  r.check(!check_pair_condition(rows_of({"1"}), dual_tableau(rows_of({"1"}))), "([1],[1v]) is not a pair");
  // u_1 u_1v = t
  NormalForm nf = normalize_word(parse_word("1 1v"));
  r.check(nf.epsilon == 1 && nf.pair == RationalPair{}, "u_1 u_1v = t");
  r.domain_size = r.checks;
  return r;
}

struct Entry {
  SuiteInfo info;
  std::function<Report(const SuiteOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"relations", "plactic defining relations in random contexts"}, relations},
      {{"normal-forms", "normal form parity and canonical words"}, normal_forms},
      {{"roundtrips", "every bijection composed with its inverse"}, roundtrips},
      {{"main-invariants", "weight additivity and u_X u_Y = t^|Z| u_Y' u_X'"},
       [](const SuiteOptions& o) { return main_domain(o, true); }},
      {{"cauchy", "plactic Cauchy identity in the s-basis"}, cauchy},
      {{"heisenberg", "power-sum commutators and the h/h^v relation"}, heisenberg},
      {{"operator-cauchy", "Cauchy identity for Schur operators and its t = 1 skew form"}, operator_cauchy},
      {{"sagan-stanley", "skew Knuth correspondence via LR words"}, sagan_stanley_suite},
      {{"lr", "LR coefficients against brute force; iota and switching round trips"}, lr_oracle},
      {{"examples", "worked examples"}, worked_examples},
  };
  return entries;
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("PLACTO_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SuiteInfo> suites() {
  std::vector<SuiteInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    auto start = std::chrono::steady_clock::now();
    Report r = e.run(opt);
    r.name = name;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::out_of_range("unknown suite: " + name);
}

}  // namespace placto
