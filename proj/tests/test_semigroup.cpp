#include <doctest.h>

#include <vector>

#include "isg/catalog.hpp"
#include "isg/errors.hpp"
#include "isg/semigroup.hpp"
#include "oracle.hpp"

using isg::InverseSemigroup;
using isg::SemigroupRef;

namespace {

// Catalog members small enough for the brute-force oracles.
std::vector<std::string> small_names() {
  return {"c1", "c2", "c3", "z2", "z3", "s3", "b2", "i1", "i2", "z2_0", "c2xz2", "cl3", "cl4"};
}

}  // namespace

TEST_CASE("empty tables are rejected") {
  CHECK_THROWS_AS(InverseSemigroup::validate({}), isg::EmptySemigroup);
}

TEST_CASE("closure violations name the offending cell") {
  try {
    InverseSemigroup::validate({{2, 0}, {0, 1}});
    FAIL("expected NotClosed");
  } catch (const isg::NotClosed& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 0);
    CHECK(e.value == 2);
  }
}

TEST_CASE("associativity violations carry the first witness triple") {
  try {
    InverseSemigroup::validate({{1, 0}, {0, 0}});
    FAIL("expected NotAssociative");
  } catch (const isg::NotAssociative& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 0);
    CHECK(e.c == 1);
  }
}

TEST_CASE("left-zero tables fail on non-commuting idempotents") {
  try {
    InverseSemigroup::validate({{0, 0}, {1, 1}});
    FAIL("expected IdempotentsDoNotCommute");
  } catch (const isg::IdempotentsDoNotCommute& e) {
    CHECK(e.e == 0);
    CHECK(e.f == 1);
  }
}

TEST_CASE("null semigroups with a non-regular element are rejected") {
  try {
    InverseSemigroup::validate({{0, 0}, {0, 0}});
    FAIL("expected NotRegular");
  } catch (const isg::NotRegular& e) {
    CHECK(e.element == 1);
  }
}

TEST_CASE("element names must match the order and be distinct") {
  CHECK_THROWS_AS(InverseSemigroup::validate({{0}}, std::vector<std::string>{"a", "b"}),
                  isg::Error);
  CHECK_THROWS_AS(InverseSemigroup::validate({{0, 0}, {0, 1}}, std::vector<std::string>{"a", "a"}),
                  isg::Error);
  SemigroupRef s = InverseSemigroup::validate({{0, 0}, {0, 1}}, std::vector<std::string>{"z", "e"});
  CHECK(s->display_name(0) == "z");
  CHECK(s->display_name(1) == "e");
}

TEST_CASE("default display names are indexed") {
  SemigroupRef s = InverseSemigroup::validate({{0, 0}, {0, 1}});
  CHECK(!s->has_element_names());
  CHECK(s->display_name(1) == "x1");
}

TEST_CASE("inverses and idempotents match the oracle on the catalog") {
  for (const std::string& name : small_names()) {
    SemigroupRef s = isg::catalog_build(name);
    CAPTURE(name);
    CHECK(s->idempotents() == oracle::idempotents(*s));
    for (int a = 0; a < s->order(); ++a) {
      const int inv = s->inverse(a);
      CHECK(s->product(s->product(a, inv), a) == a);
      CHECK(s->product(s->product(inv, a), inv) == inv);
    }
  }
}

TEST_CASE("the natural order test agrees with the idempotent-multiple form") {
  for (const std::string& name : small_names()) {
    SemigroupRef s = isg::catalog_build(name);
    CAPTURE(name);
    for (int a = 0; a < s->order(); ++a)
      for (int b = 0; b < s->order(); ++b)
        CHECK(s->natural_leq(a, b) == oracle::leq_brute(*s, a, b));
  }
}

TEST_CASE("green relations agree with principal ideals") {
  for (const std::string& name : small_names()) {
    SemigroupRef s = isg::catalog_build(name);
    CAPTURE(name);
    const isg::Partition l = greens(*s, isg::GreensRelation::L);
    const isg::Partition r = greens(*s, isg::GreensRelation::R);
    const isg::Partition h = greens(*s, isg::GreensRelation::H);
    for (int a = 0; a < s->order(); ++a)
      for (int b = 0; b < s->order(); ++b) {
        CHECK(l.same(a, b) == oracle::greens_l(*s, a, b));
        CHECK(r.same(a, b) == oracle::greens_r(*s, a, b));
        CHECK(h.same(a, b) == (oracle::greens_l(*s, a, b) && oracle::greens_r(*s, a, b)));
      }
  }
}

TEST_CASE("rank-one partial injections on two points share an L-class by image") {
  SemigroupRef s = isg::catalog_build("i2");
  const isg::Partition l = greens(*s, isg::GreensRelation::L);
  // Elements 1 = {0->0} and 5 = {1->0} have image {0}; 3 = {0->1} and
  // 6 = {1->1} have image {1}.
  CHECK(l.same(1, 5));
  CHECK(l.same(3, 6));
  CHECK(!l.same(1, 3));
}

TEST_CASE("the compatibility relation is reflexive and symmetric") {
  for (const std::string& name : small_names()) {
    SemigroupRef s = isg::catalog_build(name);
    const isg::PairRelation f = f_relation(*s);
    CAPTURE(name);
    for (int a = 0; a < s->order(); ++a) {
      CHECK(f.contains(a, a));
      for (int b = 0; b < s->order(); ++b) {
        CHECK(f.contains(a, b) == f.contains(b, a));
        const bool expected = oracle::idem(*s, s->product(s->inverse(a), b));
        CHECK(f.contains(a, b) == expected);
      }
    }
  }
}

TEST_CASE("substructures reindex and revalidate") {
  SemigroupRef s = isg::catalog_build("i2");
  isg::SubStructure sub = substructure(s, {4, 2});
  CHECK(sub.members == std::vector<int>{2, 4});
  CHECK(sub.size() == 2);
  CHECK(sub.global(0) == 2);
  CHECK(sub.local(4) == 1);
  CHECK(sub.algebra->order() == 2);
  // {id, swap} is the two-element group.
  CHECK(sub.algebra->product(1, 1) == 0);
}

TEST_CASE("escaping subsets are rejected with the witness") {
  SemigroupRef s = isg::catalog_build("i2");
  // 3 * 3 = 0, which is outside {2, 3, 4}.
  CHECK_THROWS_AS(substructure(s, {2, 3, 4}), isg::NotClosedSubset);
}

TEST_CASE("idempotent up-closure covers everything when a zero is present") {
  CHECK(e_closure(isg::catalog_build("i2")).size() == 7);
  CHECK(e_closure(isg::catalog_build("b2")).size() == 5);
  // Without a zero: the two-cycle over a two-cycle keeps only the idempotents.
  CHECK(e_closure(isg::catalog_build("cl4")).members == std::vector<int>{0, 2});
}

TEST_CASE("idempotent centralizers of the partial injection monoids are the idempotents") {
  SemigroupRef s = isg::catalog_build("i2");
  CHECK(centralizer_of_idempotents(s).members == s->idempotents());
  SemigroupRef b2 = isg::catalog_build("b2");
  CHECK(centralizer_of_idempotents(b2).members == b2->idempotents());
  // On a Clifford semigroup the centralizer is everything.
  SemigroupRef cl = isg::catalog_build("cl4");
  CHECK(centralizer_of_idempotents(cl).size() == cl->order());
}
