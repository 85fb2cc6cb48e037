#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "placto/knuth.hpp"

namespace placto {

namespace {

bool lattice(const Word& w, bool from_end) {
  std::map<int, long> count;
  auto step = [&](const Letter& a) {
    int i = a.index;
    ++count[i];
    return i == 1 || count[i - 1] >= count[i];
  };
  if (from_end) {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (!step(*it)) return false;
  } else {
    for (const auto& a : w)
      if (!step(a)) return false;
  }
  return true;
}

}  // namespace

bool is_lr_tableau(const Tableau& u) {
  if (!u.alphabet().is_natural() || u.rotated() || !is_semistandard(u)) return false;
  return lattice(column_word(u), false);
}

bool is_lr_bar_tableau(const Tableau& u) {
  if (!u.alphabet().is_natural_dual() || u.rotated() || !is_semistandard(u)) return false;
  return lattice(column_word(u), true);
}

Partition lr_content(const Tableau& u) {
  std::map<int, int> count;
  for (const auto& r : u.rows())
    for (const auto& a : r) ++count[a.index];
  std::vector<int> parts;
  for (const auto& [i, c] : count) {
    if (i != static_cast<int>(parts.size()) + 1) throw std::invalid_argument("lr_content: content is not a partition");
    parts.push_back(c);
  }
  return Partition(parts);  // validates monotonicity
}

std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<Tableau> out;
  if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return out;
  SkewShape sh(lambda, mu);
  const int L = lambda.length();
  Rows rows(static_cast<std::size_t>(L));
  for (int i = 1; i <= L; ++i) rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(lambda.row(i) - mu.row(i)));
  auto ref = [&](int i, int j) -> Letter& {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - mu.row(i) - 1)];
  };
  std::vector<Cell> order;
  for (int j = lambda.row(1); j >= 1; --j)
    for (int i = 1; i <= L; ++i)
      if (sh.has_cell(i, j)) order.push_back({i, j});
  std::vector<int> count(static_cast<std::size_t>(nu.length() + 2), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.emplace_back(Alphabet::natural(), sh, rows);
      return;
    }
    auto [i, j] = order[k];
    for (int x = 1; x <= nu.length(); ++x) {
      if (count[static_cast<std::size_t>(x)] >= nu.row(x)) continue;
      if (x > 1 && count[static_cast<std::size_t>(x - 1)] <= count[static_cast<std::size_t>(x)]) continue;
      if (sh.has_cell(i, j + 1) && ref(i, j + 1).index < x) continue;
      if (i > 1 && sh.has_cell(i - 1, j) && ref(i - 1, j).index >= x) continue;
      ref(i, j) = Letter::positive(x);
      ++count[static_cast<std::size_t>(x)];
      rec(k + 1);
      --count[static_cast<std::size_t>(x)];
    }
  };
  rec(0);
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu) || !lambda.contains(nu) || lambda.size() != mu.size() + nu.size()) return 0;
  static std::mutex mtx;
  static std::unordered_map<std::string, std::int64_t> memo;
  const std::string key = lambda.to_string() + "/" + mu.to_string() + "/" + nu.to_string();
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto value = static_cast<std::int64_t>(enumerate_lr(lambda, mu, nu).size());
  std::lock_guard<std::mutex> lock(mtx);
  memo.emplace(key, value);
  return value;
}

Tableau iota(const Tableau& v, const Partition& mu) {
  if (!v.alphabet().is_natural() || v.rotated() || !v.shape().straight() || !is_semistandard(v))
    throw std::invalid_argument("iota: V must be a straight semistandard tableau over N");
  // count[(i,k)] = number of k's in row i of V
  std::map<std::pair<int, int>, int> count;
  int maxk = 0;
  for (int i = 1; i <= v.shape().outer.length(); ++i)
    for (const auto& a : v.rows()[static_cast<std::size_t>(i - 1)]) {
      ++count[{i, a.index}];
      maxk = std::max(maxk, a.index);
    }
  const int L = std::max(maxk, mu.length());
  std::vector<int> lam(static_cast<std::size_t>(L));
  Rows rows(static_cast<std::size_t>(L));
  for (int k = 1; k <= L; ++k) {
    auto& r = rows[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i <= v.shape().outer.length(); ++i) {
      auto it = count.find({i, k});
      if (it != count.end()) r.insert(r.end(), static_cast<std::size_t>(it->second), Letter::positive(i));
    }
    lam[static_cast<std::size_t>(k - 1)] = mu.row(k) + static_cast<int>(r.size());
  }
  for (std::size_t k = 1; k < lam.size(); ++k)
    if (lam[k] > lam[k - 1]) throw std::invalid_argument("iota: (V -> H_mu) is not a highest tableau");
  Partition lambda(lam);
  if (!(insert_tableau(v, highest_tableau(mu)).result == highest_tableau(lambda)))
    throw std::invalid_argument("iota: (V -> H_mu) is not a highest tableau");
  while (!rows.empty() && rows.back().empty() && static_cast<int>(rows.size()) > lambda.length()) rows.pop_back();
  return Tableau(Alphabet::natural(), SkewShape(lambda, mu), std::move(rows));
}

Tableau iota_inverse(const Tableau& u) {
  if (!is_lr_tableau(u)) throw std::invalid_argument("iota_inverse: not an LR tableau");
  Partition nu = lr_content(u);
  Rows rows(static_cast<std::size_t>(nu.length()));
  for (int k = 1; k <= u.shape().outer.length(); ++k)
    for (const auto& a : u.rows()[static_cast<std::size_t>(k - 1)])
      rows[static_cast<std::size_t>(a.index - 1)].push_back(Letter::positive(k));
  return Tableau::straight(Alphabet::natural(), std::move(rows));
}

}  // namespace placto
