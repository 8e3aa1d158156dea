#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "isg/partition.hpp"
#include "isg/semigroup.hpp"

namespace isg {

inline constexpr long kDefaultEnumCap = 10000;

// A congruence of an inverse semigroup: a compatible partition together with
// its cached kernel (union of idempotent classes) and trace (restriction to
// the idempotents, non-idempotents kept as singletons).
class Congruence {
 public:
  // Validates compatibility; throws NotACongruence otherwise.
  Congruence(SemigroupRef parent, Partition partition);

  static Congruence equality(SemigroupRef parent);
  static Congruence universal(SemigroupRef parent);

  const SemigroupRef& parent() const { return parent_; }
  const Partition& partition() const { return part_; }
  bool same(int a, int b) const { return part_.same(a, b); }
  int num_classes() const { return part_.num_classes(); }
  std::vector<int> class_of(int a) const { return part_.class_of(a); }

  const std::vector<int>& kernel() const { return kernel_; }
  const Partition& trace() const { return trace_; }

  bool is_equality() const;
  bool is_universal() const;

  // Containment as sets of pairs.
  bool subset_of(const Congruence& other) const;

  // Defined for congruences over the same Cayley table.
  friend bool operator==(const Congruence& a, const Congruence& b);

 private:
  struct Trusted {};
  Congruence(SemigroupRef parent, Partition partition, Trusted);
  void build_caches();

  friend Congruence congruence_from_closure(SemigroupRef, Partition);

  SemigroupRef parent_;
  Partition part_;
  std::vector<int> kernel_;
  Partition trace_;
};

bool is_congruence(const InverseSemigroup& s, const Partition& p);

// Least congruence containing the pairs. Union-find plus a worklist of merged
// pairs whose left and right translations get re-merged until fixpoint.
Partition closure_partition(const InverseSemigroup& s, const std::vector<std::pair<int, int>>& pairs);
Congruence closure(const SemigroupRef& s, const PairRelation& relation);

// Intermediate partitions of the three ways each minimal operator can be
// computed, exposed so harnesses can assert the agreement directly.
struct TraceRoutes {
  Partition from_trace_pairs;   // closure of the idempotent pairs of rho
  Partition from_f_meet;        // closure of rho intersected with the compatibility relation
  Partition pointwise;          // direct pair test via a shared right identity
};
struct KernelRoutes {
  Partition from_squares;       // closure of (x, x^2) over the kernel
  Partition from_l_meet;        // closure of rho intersected with Green's L
  Partition from_r_meet;        // closure of rho intersected with Green's R
};
TraceRoutes rho_t_routes(const Congruence& rho);
KernelRoutes rho_k_routes(const Congruence& rho);

// Least congruence with the same trace as rho. All three routes are computed
// and must agree; disagreement throws InternalInconsistency.
Congruence rho_t(const Congruence& rho);
// Least congruence with the same kernel as rho, same cross-check policy.
Congruence rho_k(const Congruence& rho);

// Applies rho_t / rho_k along a word over {t,k}, left to right.
Congruence min_chain(const Congruence& rho, std::string_view word);

Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

// Least group congruence: x ~ y iff xe = ye for some idempotent e. The result
// is checked to be a congruence with group quotient. When verify_min_cap is
// set and enumeration completes under it, minimality among group congruences
// is asserted as well; a capped enumeration logs a notice and skips that step.
Congruence sigma(const SemigroupRef& s, std::optional<long> verify_min_cap = std::nullopt);

// Greatest idempotent-separating congruence: a ~ b iff a^-1 e a = b^-1 e b
// for every idempotent e. The enumeration oracle is mandatory: the fast pair
// test must match the maximum idempotent-separating congruence in the full
// lattice, so a capped enumeration propagates EnumerationCapExceeded.
Congruence mu(const SemigroupRef& s, long cap = kDefaultEnumCap);

// Greatest idempotent-pure congruence. No pointwise formula: found by
// enumeration only.
Congruence tau(const SemigroupRef& s, long cap = kDefaultEnumCap);

struct CongruenceLattice {
  std::vector<Congruence> all;  // sorted by (number of classes, rep vector)
  bool complete = true;         // false when the cap stopped the closure
};

// Every congruence, as the join closure of the principal congruences plus
// equality. A result with complete == false is unusable as an oracle.
CongruenceLattice enumerate_congruences(const SemigroupRef& s, long cap = kDefaultEnumCap);

struct Quotient {
  SemigroupRef algebra;
  std::vector<int> projection;  // parent element -> class index
  std::vector<int> class_reps;  // class index -> least parent member
};

// Classes indexed by the rank of their least representative.
Quotient quotient(const Congruence& rho);

// theta/rho on a freshly built quotient by rho.
Congruence push_congruence(const Congruence& theta, const Congruence& rho);
// Same, but reusing an already-built quotient(rho).
Congruence push_congruence(const Congruence& theta, const Congruence& rho, const Quotient& onto);

// rho restricted to an inverse subsemigroup, in local indices.
Congruence restrict_congruence(const Congruence& rho, const SubStructure& y);

}  // namespace isg
