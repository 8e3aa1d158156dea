#include <doctest.h>

#include "isg/errors.hpp"
#include "isg/partition.hpp"

using isg::Partition;
using isg::UnionFind;

TEST_CASE("canonical representative vectors are accepted") {
  Partition p(std::vector<int>{0, 0, 2, 2, 0});
  CHECK(p.size() == 5);
  CHECK(p.same(0, 4));
  CHECK(p.same(2, 3));
  CHECK(!p.same(0, 2));
  CHECK(p.num_classes() == 2);
  CHECK(p.class_reps() == std::vector<int>{0, 2});
  CHECK(p.class_of(3) == std::vector<int>{2, 3});
}

TEST_CASE("non-canonical vectors are rejected") {
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 1}), isg::Error);
  CHECK_THROWS_AS(Partition(std::vector<int>{0, 2, 2}), isg::Error);
  CHECK_THROWS_AS(Partition(std::vector<int>{0, 0, 1}), isg::Error);
}

TEST_CASE("equality and universal partitions") {
  CHECK(Partition::equality(3).num_classes() == 3);
  CHECK(Partition::universal(3).num_classes() == 1);
  CHECK(Partition::equality(1) == Partition::universal(1));
}

TEST_CASE("from_labels canonicalizes arbitrary labellings") {
  Partition p = Partition::from_labels({7, 3, 7, 3, 9});
  CHECK(p.reps() == std::vector<int>{0, 1, 0, 1, 4});
}

TEST_CASE("meet keeps exactly the common pairs") {
  Partition p = Partition::from_labels({0, 0, 1, 1});
  Partition q = Partition::from_labels({0, 1, 1, 1});
  Partition m = Partition::meet(p, q);
  CHECK(m.same(2, 3));
  CHECK(!m.same(0, 1));
  CHECK(!m.same(1, 2));
  CHECK(m.num_classes() == 3);
}

TEST_CASE("refines is containment of pair sets") {
  Partition fine = Partition::from_labels({0, 1, 2, 2});
  Partition coarse = Partition::from_labels({0, 0, 1, 1});
  CHECK(fine.refines(coarse));
  CHECK(!coarse.refines(fine));
  CHECK(fine.refines(fine));
  CHECK(Partition::equality(4).refines(coarse));
  CHECK(coarse.refines(Partition::universal(4)));
}

TEST_CASE("union-find emits least-member canonical form directly") {
  UnionFind uf(5);
  CHECK(uf.unite(3, 1));
  CHECK(uf.unite(4, 3));
  CHECK(!uf.unite(1, 4));
  Partition p = uf.to_partition();
  CHECK(p.reps() == std::vector<int>{0, 1, 2, 1, 1});
}

TEST_CASE("pair relation membership") {
  isg::PairRelation r(4);
  r.add(1, 2);
  CHECK(r.contains(1, 2));
  CHECK(!r.contains(2, 1));
  CHECK(!r.contains(0, 0));
}
