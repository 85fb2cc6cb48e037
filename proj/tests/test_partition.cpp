#include <doctest.h>

#include "placto/partition.hpp"

using namespace placto;

namespace {

// Partition counts p(n) for n = 0..10.
constexpr int kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};

}  // namespace

TEST_CASE("partition validation and normal form") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  Partition p{4, 2, 2, 1};
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p.row(5) == 0);
  CHECK(p.column(2) == 3);
}

TEST_CASE("partition counts match p(n)") {
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == kPartitionCounts[n]);
    for (const auto& p : ps) CHECK(p.size() == n);
  }
}

TEST_CASE("conjugation is an involution") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == n);
    }
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("adding and removing boxes") {
  Partition p{2, 1};
  CHECK(p.can_add(1));
  CHECK(p.can_add(2));
  CHECK_FALSE(Partition({2, 2}).can_add(2));
  CHECK(p.can_add(3));
  CHECK(p.add_box(3) == Partition({2, 1, 1}));
  CHECK(p.can_remove(1));
  CHECK(p.can_remove(2));
  CHECK_THROWS(Partition({2, 2}).add_box(2));
}

TEST_CASE("partitions inside a shape") {
  // Young lattice interval below (2,2) has 6 elements.
  CHECK(partitions_inside(Partition{2, 2}).size() == 6);
  CHECK(partitions_inside(Partition{}).size() == 1);
}

TEST_CASE("skew shapes") {
  SkewShape s(Partition{3, 2}, Partition{1});
  CHECK(s.size() == 4);
  CHECK(s.has_cell(1, 2));
  CHECK_FALSE(s.has_cell(1, 1));
  CHECK_THROWS(SkewShape(Partition{1}, Partition{2}));
}
