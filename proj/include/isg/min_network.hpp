#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isg/congruence.hpp"

namespace isg {

inline constexpr int kDefaultNetworkDepth = 16;

enum class NetworkSide { alpha, beta };

// The two interleaved descending chains obtained by alternating the minimal
// trace and kernel operators from the universal congruence:
//   alpha_0 = beta_0 = omega, alpha_n = (beta_{n-1})_t, beta_n = (alpha_{n-1})_k.
// Both chains are constant from the stabilization index onwards, so alpha(n)
// and beta(n) clamp there.
class MinNetworkReport {
 public:
  const SemigroupRef& parent() const { return parent_; }
  // Entries actually computed, index 0 upwards.
  const std::vector<Congruence>& alphas() const { return alphas_; }
  const std::vector<Congruence>& betas() const { return betas_; }
  // meets()[i] is alpha_i intersected with beta_i.
  const std::vector<Congruence>& meets() const { return meets_; }
  // Least m with alpha_{m+1} = alpha_m and beta_{m+1} = beta_m; absent when
  // the depth limit was hit first.
  std::optional<int> stabilization_index() const { return stabilization_index_; }

  const Congruence& alpha(int n) const;
  const Congruence& beta(int n) const;
  const Congruence& at(NetworkSide side, int n) const;

  // Classical names for the first levels: sigma = alpha_1 (least group),
  // eta = beta_1 (least semilattice), nu = alpha_2 (least Clifford),
  // pi = beta_2 (least E-unitary), lambda = beta_3 (least E-reflexive).
  struct Alias {
    std::string name;
    NetworkSide side;
    int index;
  };
  static const std::vector<Alias>& aliases();
  std::optional<Congruence> named(const std::string& alias) const;

  friend MinNetworkReport min_network(const SemigroupRef& s, int max_depth);

 private:
  SemigroupRef parent_;
  std::vector<Congruence> alphas_, betas_, meets_;
  std::optional<int> stabilization_index_;
};

// Computes the network until stabilization or max_depth levels. A report
// without a stabilization index is returned rather than thrown; accessing
// levels beyond what was computed throws DepthExceeded. alpha_1 is
// cross-checked against the least group congruence pair test.
MinNetworkReport min_network(const SemigroupRef& s, int max_depth = kDefaultNetworkDepth);

struct QuotientNetworkCheck {
  Quotient onto;        // quotient by the level-n congruence
  Congruence native;    // level-i congruence computed on the quotient itself
  Congruence pushed;    // level-i congruence of the parent, pushed down
};

// Verifies that network levels transfer to quotients: the level-i congruence
// of S / (level-n congruence) equals the pushed one, for i <= n. Throws
// InternalInconsistency when they differ.
QuotientNetworkCheck network_on_quotient(const MinNetworkReport& net, NetworkSide quotient_side,
                                         int n, NetworkSide element_side, int i,
                                         int max_depth = kDefaultNetworkDepth);

// DOT digraph of the network down to stabilization. Equal congruences are
// merged into one node labelled with all their names; edges are the verified
// inclusions between consecutive levels.
std::string render_network_dot(const MinNetworkReport& report);

}  // namespace isg
