#pragma once

#include <utility>
#include <vector>

namespace isg {

// Equivalence relation on {0..n-1} in canonical form: rep(i) is the least
// element of the class of i, so two partitions are equal iff their rep
// vectors are equal.
class Partition {
 public:
  explicit Partition(std::vector<int> rep);

  static Partition equality(int n);
  static Partition universal(int n);

  // Builds the canonical form from an arbitrary labelling: i and j end up in
  // the same class iff labels[i] == labels[j].
  static Partition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int i) const { return rep_[i]; }
  const std::vector<int>& reps() const { return rep_; }
  bool same(int a, int b) const { return rep_[a] == rep_[b]; }

  int num_classes() const;
  std::vector<int> class_reps() const;
  std::vector<int> class_of(int a) const;
  std::vector<std::vector<int>> classes() const;

  // True iff every class of *this lies inside a class of coarser, i.e.
  // *this is finer than (contained in, as a set of pairs) coarser.
  bool refines(const Partition& coarser) const;

  static Partition meet(const Partition& p, const Partition& q);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rep_;
};

// Union-find with path halving. to_partition() emits the least-member
// canonical form.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  // Returns true iff a and b were in different classes before the call.
  bool unite(int a, int b);
  Partition to_partition();

 private:
  std::vector<int> parent_;
};

// Finite list of ordered index pairs over {0..carrier-1}.
struct PairRelation {
  int carrier = 0;
  std::vector<std::pair<int, int>> pairs;

  PairRelation() = default;
  explicit PairRelation(int n) : carrier(n) {}
  void add(int a, int b) { pairs.emplace_back(a, b); }
  bool contains(int a, int b) const;
};

}  // namespace isg
