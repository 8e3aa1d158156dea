#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

// Partial injections on {0..n-1} under composition, applying the left factor
// first. Elements are ordered lexicographically by their graph, so the empty
// map (the zero) comes first and larger domains extend smaller ones.
// Supported for n in 1..3.
SemigroupRef symmetric_inverse_monoid(int n);

// The five-element combinatorial Brandt semigroup over the two-element set:
// zero, two idempotents e and f, and a, a' with aa' = e, a'a = f.
SemigroupRef brandt_b2();

// Chain 0 < 1 < ... < n-1 under minimum.
SemigroupRef chain_semilattice(int n);

// Integers mod n under addition.
SemigroupRef cyclic_group(int n);

// All permutations of three points, ordered lexicographically by one-line
// notation, applying the left factor first.
SemigroupRef symmetric_group_s3();

// Clifford semigroup over the chain 0 < 1 < ... < k-1: groups[i] sits at
// chain point i, and down_maps[i] carries groups[i+1] into groups[i].
// Products fall to the lower level through the (composed) linking maps.
SemigroupRef strong_semilattice_of_groups(const std::vector<SemigroupRef>& groups,
                                          const std::vector<std::vector<int>>& down_maps);

// Componentwise product; the result order is capped at 64.
SemigroupRef direct_product(const SemigroupRef& a, const SemigroupRef& b);

// New absorbing element appended as the last index.
SemigroupRef adjoin_zero(const SemigroupRef& s);
// New identity appended as the last index.
SemigroupRef adjoin_identity(const SemigroupRef& s);

enum class TableFormat { cay, json };

// Text format: comment lines with '#', the order, the table rows, and an
// optional "names:" trailer. JSON format: {"name"?, "order", "table",
// "element_names"?}. parse(emit(s)) reproduces order, table and names.
SemigroupRef parse_cayley(std::string_view text);
SemigroupRef parse_json(std::string_view text);
SemigroupRef parse_table(std::string_view text, TableFormat format);
std::string emit(const InverseSemigroup& s, TableFormat format);

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::function<SemigroupRef()> build;
  // Facts re-checked on every build: order, idempotents, sigma_classes,
  // eta_classes, congruence_count, is_clifford, is_e_unitary.
  std::vector<std::pair<std::string, long>> expected_facts;
};

const std::vector<CatalogEntry>& catalog_entries();
// Builds by name and re-checks the entry's expected facts.
SemigroupRef catalog_build(std::string_view name);

}  // namespace isg
