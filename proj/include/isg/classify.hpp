#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isg/congruence.hpp"
#include "isg/min_network.hpp"

namespace isg {

enum class SemigroupClass {
  group,
  semilattice,
  clifford,
  e_unitary,
  e_reflexive,
  e_omega_clifford,
  ker_alpha_n_clifford,
  beta_n_over_e_unitary,
};

std::string class_name(SemigroupClass c);

// Outcome of a membership test. When the property fails, witness holds the
// lexicographically least element tuple violating the defining condition.
struct ClassVerdict {
  SemigroupClass cls;
  bool holds = false;
  std::vector<int> witness;  // empty iff holds
  int param = -1;            // n for the parametrized classes
};

// Single idempotent and H universal.
ClassVerdict is_group(const InverseSemigroup& s);
// Every element idempotent and multiplication commutative.
ClassVerdict is_semilattice(const InverseSemigroup& s);
// Idempotents central.
ClassVerdict is_clifford(const InverseSemigroup& s);
// xy = x implies y idempotent; witness is such a pair with y not idempotent.
ClassVerdict is_e_unitary(const InverseSemigroup& s);
// xey idempotent implies yex idempotent, for e idempotent. Cross-checked
// against "every idempotent class of the least semilattice congruence is
// E-unitary"; disagreement throws InternalInconsistency.
ClassVerdict is_e_reflexive(const SemigroupRef& s);
// The idempotent up-closure is a Clifford subsemigroup.
ClassVerdict is_e_omega_clifford(const SemigroupRef& s);
// The kernel of network level alpha_n is a Clifford subsemigroup.
ClassVerdict is_ker_alpha_n_clifford(const SemigroupRef& s, int n,
                                     int max_depth = kDefaultNetworkDepth);
// Every idempotent class of network level beta_n is E-unitary.
ClassVerdict is_beta_n_over_e_unitary(const SemigroupRef& s, int n,
                                      int max_depth = kDefaultNetworkDepth);

// The six families of pairwise-equivalent answers to "does the given minimal
// operator word collapse rho to equality". Every condition of a bundle is
// evaluated independently; the claim under test is that they all agree.
enum class Bundle { T, K, KT, TK, TKT, KTK };

std::string bundle_name(Bundle b);

enum class Tri { yes, no, skipped };

struct BundleCondition {
  std::string id;
  Tri value = Tri::skipped;
  std::vector<int> witness;  // first violating tuple when value == no
};

struct BundleVerdict {
  Bundle bundle;
  std::vector<BundleCondition> conditions;
  // For T..TKT: all non-skipped conditions agree. For KTK only one direction
  // is claimed: word collapse implies the two structural conditions.
  bool unanimous = false;
  std::string note;
};

// Precomputed per-semigroup data shared across bundle calls. mu/tau are
// absent when enumeration was capped; conditions needing them get skipped.
struct BundleContext {
  std::optional<Congruence> mu, tau;
  bool enumeration_complete = true;

  static BundleContext make(const SemigroupRef& s, long cap = kDefaultEnumCap);
};

BundleVerdict congruence_bundle(const Congruence& rho, Bundle bundle,
                                const BundleContext* ctx = nullptr, long cap = kDefaultEnumCap);

// Kernel of the least group congruence of the class of idempotent e, pulled
// back to parent indices. Must equal the class of e under the minimal trace
// operator; disagreement throws InternalInconsistency.
std::vector<int> kernel_of_class_sigma(const Congruence& rho, int e);

}  // namespace isg
