#include "placto/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace placto {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("not a partition: " + to_string());
  }
}

int Partition::row(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column(int j) const {
  int n = 0;
  for (int p : parts_) {
    if (p >= j) ++n;
    else break;
  }
  return j >= 1 ? n : 0;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

bool Partition::can_add(int i) const { return i >= 1 && i <= length() + 1 && (i == 1 || row(i - 1) > row(i)); }

bool Partition::can_remove(int i) const { return i >= 1 && row(i) > 0 && row(i) > row(i + 1); }

Partition Partition::add_box(int i) const {
  if (!can_add(i)) throw std::invalid_argument("cannot add a box to row " + std::to_string(i));
  std::vector<int> p = parts_;
  if (i == length() + 1) p.push_back(1);
  else ++p[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(p));
}

Partition Partition::remove_box(int i) const {
  if (!can_remove(i)) throw std::invalid_argument("cannot remove a box from row " + std::to_string(i));
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(p));
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.emplace_back(i, j);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int j = 1; j <= p.row(1); ++j) c.push_back(p.column(j));
  return Partition(std::move(c));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int bound) {
    if (i > outer.length()) {
      out.emplace_back(cur);
      return;
    }
    int top = std::min(bound, outer.row(i));
    for (int k = 0; k <= top; ++k) {
      cur.push_back(k);
      if (k == 0) {
        out.emplace_back(cur);
      } else {
        rec(i + 1, k);
      }
      cur.pop_back();
    }
  };
  rec(1, outer.row(1));
  return out;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew shape inner " + inner.to_string() + " not inside " + outer.to_string());
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= outer.length(); ++i)
    for (int j = inner.row(i) + 1; j <= outer.row(i); ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace placto
