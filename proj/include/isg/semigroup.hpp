#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isg/partition.hpp"

namespace isg {

class InverseSemigroup;
using SemigroupRef = std::shared_ptr<const InverseSemigroup>;

// A finite inverse semigroup given by its Cayley table. Construction goes
// through validate(), which checks closure, associativity, regularity and
// commuting idempotents, and resolves the unique inverse of every element.
// Instances are immutable.
class InverseSemigroup {
 public:
  static SemigroupRef validate(const std::vector<std::vector<int>>& table,
                               std::optional<std::vector<std::string>> element_names = std::nullopt,
                               std::string name = "");
  static SemigroupRef validate_flat(int n, std::vector<int> table,
                                    std::optional<std::vector<std::string>> element_names = std::nullopt,
                                    std::string name = "");

  int order() const { return order_; }
  int product(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  bool is_idempotent(int a) const { return idem_mask_[a]; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  // Natural partial order: a <= b iff a = (a a^-1) b.
  bool natural_leq(int a, int b) const;

  const std::vector<int>& flat_table() const { return table_; }
  bool same_table(const InverseSemigroup& other) const;

  const std::string& name() const { return name_; }
  bool has_element_names() const { return element_names_.has_value(); }
  const std::vector<std::string>& element_names() const { return *element_names_; }
  // Element name if set, "x<i>" otherwise.
  std::string display_name(int i) const;

 private:
  InverseSemigroup(int n, std::vector<int> table, std::vector<int> inv,
                   std::vector<int> idempotents, std::vector<bool> idem_mask,
                   std::optional<std::vector<std::string>> element_names, std::string name);

  int order_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> idempotents_;
  std::vector<bool> idem_mask_;
  std::optional<std::vector<std::string>> element_names_;
  std::string name_;
};

enum class GreensRelation { L, R, H };

// Green's relations via the inverse: a L b iff a^-1 a = b^-1 b, a R b iff
// a a^-1 = b b^-1, H = L meet R.
Partition greens(const InverseSemigroup& s, GreensRelation which);

// The compatibility relation: all ordered pairs (a, b) with a^-1 b idempotent.
// Reflexive and symmetric on an inverse semigroup.
PairRelation f_relation(const InverseSemigroup& s);

// An inverse subsemigroup carved out of a parent, with its own reindexed
// (and revalidated) Cayley table. members is ascending; local/global convert
// between the two index spaces.
struct SubStructure {
  SemigroupRef parent;
  std::vector<int> members;
  std::vector<int> to_local;
  SemigroupRef algebra;

  int size() const { return static_cast<int>(members.size()); }
  int local(int parent_index) const { return to_local[parent_index]; }
  int global(int local_index) const { return members[local_index]; }
};

// Throws NotClosedSubset if members escape under product or inverse.
SubStructure substructure(const SemigroupRef& s, std::vector<int> members);

// E-omega: all elements lying above some idempotent in the natural order.
SubStructure e_closure(const SemigroupRef& s);

// E-zeta: all elements commuting with every idempotent. Always a Clifford
// subsemigroup.
SubStructure centralizer_of_idempotents(const SemigroupRef& s);

}  // namespace isg
