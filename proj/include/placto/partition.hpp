#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace placto {

/// A weakly decreasing sequence of positive integers, identified with its
/// Young diagram {(i, j) : 1 <= j <= parts[i-1]}.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Row length, 1-based; 0 past the last row.
  int row(int i) const;
  /// Column length, 1-based.
  int column(int j) const;
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool contains(const Partition& other) const;
  bool has_cell(int i, int j) const { return j >= 1 && j <= row(i); }

  /// The diagram with a box appended to row i, if that is again a partition.
  bool can_add(int i) const;
  bool can_remove(int i) const;
  Partition add_box(int i) const;
  Partition remove_box(int i) const;

  std::vector<std::pair<int, int>> cells() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n.
std::vector<Partition> partitions_up_to(int n);
/// All partitions contained in `outer` (including the empty one and `outer`).
std::vector<Partition> partitions_inside(const Partition& outer);

/// Skew diagram outer/inner.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i = {});

  int size() const { return outer.size() - inner.size(); }
  bool has_cell(int i, int j) const { return outer.has_cell(i, j) && !inner.has_cell(i, j); }
  /// Cells in row-major order.
  std::vector<std::pair<int, int>> cells() const;
  bool straight() const { return inner.empty(); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

}  // namespace placto

template <>
struct std::hash<placto::Partition> {
  std::size_t operator()(const placto::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
