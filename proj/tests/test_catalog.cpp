#include <doctest.h>

#include <string>
#include <vector>

#include "isg/catalog.hpp"
#include "isg/errors.hpp"
#include "oracle.hpp"

using isg::SemigroupRef;
using isg::TableFormat;

namespace {

void check_round_trip(const isg::InverseSemigroup& s, TableFormat f) {
  SemigroupRef r = isg::parse_table(isg::emit(s, f), f);
  REQUIRE(r->order() == s.order());
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b) CHECK(r->product(a, b) == s.product(a, b));
  CHECK(r->has_element_names() == s.has_element_names());
  if (s.has_element_names()) CHECK(r->element_names() == s.element_names());
  if (f == TableFormat::json) CHECK(r->name() == s.name());
}

}  // namespace

TEST_CASE("every catalog entry builds and survives both serialization formats") {
  for (const isg::CatalogEntry& entry : isg::catalog_entries()) {
    CAPTURE(entry.name);
    SemigroupRef s = isg::catalog_build(entry.name);
    CHECK(s->name() == entry.name);
    check_round_trip(*s, TableFormat::cay);
    check_round_trip(*s, TableFormat::json);
  }
  CHECK(isg::catalog_entries().size() == 14);
}

TEST_CASE("unknown catalog names are rejected") {
  CHECK_THROWS_AS(isg::catalog_build("nosuch"), isg::Error);
}

TEST_CASE("the one-point injections are the two-element chain in disguise") {
  SemigroupRef i1 = isg::catalog_build("i1");
  SemigroupRef c2 = isg::catalog_build("c2");
  CHECK(oracle::isomorphic(*i1, *c2));
  CHECK(!oracle::isomorphic(*c2, *isg::catalog_build("z2")));
}

TEST_CASE("builder size guards") {
  CHECK_THROWS_AS(isg::symmetric_inverse_monoid(4), isg::SizeUnsupported);
  CHECK_THROWS_AS(isg::symmetric_inverse_monoid(0), isg::SizeUnsupported);
  CHECK_THROWS_AS(isg::chain_semilattice(0), isg::SizeUnsupported);
  CHECK_THROWS_AS(isg::cyclic_group(0), isg::SizeUnsupported);
  CHECK_THROWS_AS(
      isg::direct_product(isg::catalog_build("i3"), isg::catalog_build("z2")),
      isg::SizeExceeded);
}

TEST_CASE("linking maps must be homomorphisms with the right shape") {
  const SemigroupRef z2 = isg::cyclic_group(2);
  // x -> x + 1 swaps the two elements and does not respect products.
  CHECK_THROWS_AS(isg::strong_semilattice_of_groups({z2, z2}, {{1, 0}}),
                  isg::LinkingMapNotHomomorphism);
  CHECK_THROWS_AS(isg::strong_semilattice_of_groups({z2, z2}, {{0}}),
                  isg::LinkingMapNotHomomorphism);
  CHECK_THROWS_AS(isg::strong_semilattice_of_groups({z2, z2}, {{0, 5}}),
                  isg::LinkingMapNotHomomorphism);
  // Non-group components are rejected before the maps are inspected.
  CHECK_THROWS_AS(isg::strong_semilattice_of_groups({isg::chain_semilattice(2), z2}, {{0, 0}}),
                  isg::Error);
  // The valid collapsing map builds the three-element Clifford example.
  SemigroupRef cl3 = isg::strong_semilattice_of_groups({isg::chain_semilattice(1), z2}, {{0, 0}});
  CHECK(cl3->order() == 3);
  CHECK(oracle::isomorphic(*cl3, *isg::catalog_build("cl3")));
}

TEST_CASE("adjoined elements get names when the base has them") {
  SemigroupRef b2 = isg::catalog_build("b2");
  SemigroupRef with_zero = isg::adjoin_zero(b2);
  REQUIRE(with_zero->order() == 6);
  CHECK(with_zero->element_names().back() == "zero");
  for (int i = 0; i < 6; ++i) CHECK(with_zero->product(i, 5) == 5);
  SemigroupRef with_one = isg::adjoin_identity(b2);
  CHECK(with_one->element_names().back() == "one");
  for (int i = 0; i < 6; ++i) {
    CHECK(with_one->product(i, 5) == i);
    CHECK(with_one->product(5, i) == i);
  }
  // Unnamed bases stay unnamed.
  CHECK(!isg::adjoin_zero(isg::cyclic_group(2))->has_element_names());
}

TEST_CASE("the element-name trailer survives a text round trip") {
  SemigroupRef b2 = isg::catalog_build("b2");
  const std::string text = isg::emit(*b2, TableFormat::cay);
  CHECK(text.find("names: 0 e f a a'") != std::string::npos);
  SemigroupRef back = isg::parse_cayley(text);
  CHECK(back->element_names() == b2->element_names());
}

TEST_CASE("names with whitespace cannot be emitted as text") {
  SemigroupRef s = isg::parse_json(
      R"({"order": 2, "table": [[0, 1], [1, 0]], "element_names": ["a b", "c"]})");
  CHECK_THROWS_AS(isg::emit(*s, TableFormat::cay), isg::Error);
  // The JSON format has no such restriction.
  check_round_trip(*s, TableFormat::json);
}

TEST_CASE("comments and blank lines are ignored by the text parser") {
  SemigroupRef s = isg::parse_cayley("# two-element chain\n\n2\n0 0 # row for the zero\n0 1\n");
  CHECK(s->order() == 2);
  CHECK(s->product(1, 1) == 1);
  CHECK(!s->has_element_names());
}

TEST_CASE("text parse errors carry line and column positions") {
  try {
    isg::parse_cayley("");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 1);
  }
  try {
    isg::parse_cayley("3\n0 0 0\n");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 2);
  }
  try {
    isg::parse_cayley("2\n0 x\n0 1\n");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
  try {
    isg::parse_cayley("2\n0 0 0\n0 1\n");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
  try {
    isg::parse_cayley("2\n0 0\n0 1\nnames: a\n");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 4);
  }
  try {
    isg::parse_cayley("1\n0\nextra\n");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(isg::parse_cayley("0\n"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_cayley("2 2\n0 0\n0 1\n"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_cayley("99999999999999999999\n"), isg::ParseError);
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(isg::parse_json("{\"order\": 2"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_json("[1, 2]"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_json("{\"table\": [[0]]}"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_json("{\"order\": 1}"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_json("{\"order\": 1, \"table\": [0]}"), isg::ParseError);
  CHECK_THROWS_AS(isg::parse_json("{\"order\": 2, \"table\": [[0, 1], [1, 0]], \"element_names\": 3}"),
                  isg::ParseError);
  try {
    isg::parse_json("{\n  \"order\": 2,,\n}");
    FAIL("expected a parse error");
  } catch (const isg::ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("validation failures pass through the parsers unchanged") {
  CHECK_THROWS_AS(isg::parse_cayley("2\n1 1\n1 1\n"), isg::NotRegular);
  CHECK_THROWS_AS(isg::parse_json("{\"order\": 2, \"table\": [[1, 0], [0, 0]]}"),
                  isg::NotAssociative);
}
