#include "isg/classify.hpp"

#include <algorithm>

#include "isg/errors.hpp"

namespace isg {

std::string class_name(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::group: return "group";
    case SemigroupClass::semilattice: return "semilattice";
    case SemigroupClass::clifford: return "clifford";
    case SemigroupClass::e_unitary: return "e_unitary";
    case SemigroupClass::e_reflexive: return "e_reflexive";
    case SemigroupClass::e_omega_clifford: return "e_omega_clifford";
    case SemigroupClass::ker_alpha_n_clifford: return "ker_alpha_n_clifford";
    case SemigroupClass::beta_n_over_e_unitary: return "beta_n_over_e_unitary";
  }
  throw Error("unreachable");
}

std::string bundle_name(Bundle b) {
  switch (b) {
    case Bundle::T: return "T";
    case Bundle::K: return "K";
    case Bundle::KT: return "KT";
    case Bundle::TK: return "TK";
    case Bundle::TKT: return "TKT";
    case Bundle::KTK: return "KTK";
  }
  throw Error("unreachable");
}

ClassVerdict is_group(const InverseSemigroup& s) {
  ClassVerdict v{SemigroupClass::group, true, {}};
  const auto& idems = s.idempotents();
  if (idems.size() > 1) {
    v.holds = false;
    v.witness = {idems[0], idems[1]};
    return v;
  }
  const Partition h = greens(s, GreensRelation::H);
  for (int a = 0; a < s.order() && v.holds; ++a)
    for (int b = a + 1; b < s.order(); ++b)
      if (!h.same(a, b)) {
        v.holds = false;
        v.witness = {a, b};
        break;
      }
  return v;
}

ClassVerdict is_semilattice(const InverseSemigroup& s) {
  ClassVerdict v{SemigroupClass::semilattice, true, {}};
  for (int a = 0; a < s.order(); ++a)
    if (!s.is_idempotent(a)) {
      v.holds = false;
      v.witness = {a};
      return v;
    }
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (s.product(a, b) != s.product(b, a)) {
        v.holds = false;
        v.witness = {a, b};
        return v;
      }
  return v;
}

ClassVerdict is_clifford(const InverseSemigroup& s) {
  ClassVerdict v{SemigroupClass::clifford, true, {}};
  for (int a = 0; a < s.order(); ++a)
    for (int e : s.idempotents())
      if (s.product(a, e) != s.product(e, a)) {
        v.holds = false;
        v.witness = {a, e};
        return v;
      }
  return v;
}

ClassVerdict is_e_unitary(const InverseSemigroup& s) {
  ClassVerdict v{SemigroupClass::e_unitary, true, {}};
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (s.product(x, y) == x && !s.is_idempotent(y)) {
        v.holds = false;
        v.witness = {x, y};
        return v;
      }
  return v;
}

ClassVerdict is_e_reflexive(const SemigroupRef& s) {
  ClassVerdict v{SemigroupClass::e_reflexive, true, {}};
  const int n = s->order();
  for (int x = 0; x < n && v.holds; ++x)
    for (int e : s->idempotents()) {
      for (int y = 0; y < n; ++y) {
        if (s->is_idempotent(s->product(s->product(x, e), y)) &&
            !s->is_idempotent(s->product(s->product(y, e), x))) {
          v.holds = false;
          v.witness = {x, e, y};
          break;
        }
      }
      if (!v.holds) break;
    }

  // Independent route: E-reflexive iff every idempotent class of the least
  // semilattice congruence is E-unitary.
  bool via_classes = true;
  const Congruence eta = rho_k(Congruence::universal(s));
  std::vector<int> seen_reps;
  for (int e : s->idempotents()) {
    const int r = eta.partition().rep(e);
    if (std::find(seen_reps.begin(), seen_reps.end(), r) != seen_reps.end()) continue;
    seen_reps.push_back(r);
    const SubStructure cls = substructure(s, eta.class_of(e));
    if (!is_e_unitary(*cls.algebra).holds) {
      via_classes = false;
      break;
    }
  }
  if (via_classes != v.holds)
    throw InternalInconsistency("E-reflexive triple scan disagrees with the class route");
  return v;
}

ClassVerdict is_e_omega_clifford(const SemigroupRef& s) {
  const SubStructure up = e_closure(s);
  ClassVerdict inner = is_clifford(*up.algebra);
  ClassVerdict v{SemigroupClass::e_omega_clifford, inner.holds, {}};
  for (int w : inner.witness) v.witness.push_back(up.global(w));
  return v;
}

ClassVerdict is_ker_alpha_n_clifford(const SemigroupRef& s, int n, int max_depth) {
  const MinNetworkReport net = min_network(s, max_depth);
  const Congruence& alpha_n = net.alpha(n);
  const SubStructure ker = substructure(s, alpha_n.kernel());
  ClassVerdict inner = is_clifford(*ker.algebra);
  ClassVerdict v{SemigroupClass::ker_alpha_n_clifford, inner.holds, {}, n};
  for (int w : inner.witness) v.witness.push_back(ker.global(w));
  return v;
}

ClassVerdict is_beta_n_over_e_unitary(const SemigroupRef& s, int n, int max_depth) {
  const MinNetworkReport net = min_network(s, max_depth);
  const Congruence& beta_n = net.beta(n);
  ClassVerdict v{SemigroupClass::beta_n_over_e_unitary, true, {}, n};
  std::vector<int> seen_reps;
  for (int e : s->idempotents()) {
    const int r = beta_n.partition().rep(e);
    if (std::find(seen_reps.begin(), seen_reps.end(), r) != seen_reps.end()) continue;
    seen_reps.push_back(r);
    const SubStructure cls = substructure(s, beta_n.class_of(e));
    ClassVerdict inner = is_e_unitary(*cls.algebra);
    if (!inner.holds) {
      v.holds = false;
      for (int w : inner.witness) v.witness.push_back(cls.global(w));
      return v;
    }
  }
  return v;
}

BundleContext BundleContext::make(const SemigroupRef& s, long cap) {
  BundleContext ctx;
  try {
    ctx.mu = isg::mu(s, cap);
    ctx.tau = isg::tau(s, cap);
  } catch (const EnumerationCapExceeded&) {
    ctx.mu.reset();
    ctx.tau.reset();
    ctx.enumeration_complete = false;
  }
  return ctx;
}

namespace {

BundleCondition cond_yes_no(std::string id, bool ok, std::vector<int> witness = {}) {
  BundleCondition c;
  c.id = std::move(id);
  c.value = ok ? Tri::yes : Tri::no;
  if (!ok) c.witness = std::move(witness);
  return c;
}

BundleCondition cond_skipped(std::string id) {
  BundleCondition c;
  c.id = std::move(id);
  c.value = Tri::skipped;
  return c;
}

// Deduplicated list of idempotent class representatives of rho.
std::vector<int> idempotent_class_reps(const Congruence& rho) {
  std::vector<int> reps;
  for (int e : rho.parent()->idempotents()) {
    const int r = rho.partition().rep(e);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  return reps;
}

BundleCondition classes_satisfy(const Congruence& rho, const std::string& id,
                                ClassVerdict (*pred)(const InverseSemigroup&)) {
  for (int r : idempotent_class_reps(rho)) {
    const SubStructure cls = substructure(rho.parent(), rho.class_of(r));
    ClassVerdict inner = pred(*cls.algebra);
    if (!inner.holds) {
      std::vector<int> witness;
      for (int w : inner.witness) witness.push_back(cls.global(w));
      return cond_yes_no(id, false, std::move(witness));
    }
  }
  return cond_yes_no(id, true);
}

BundleCondition word_collapses(const Congruence& rho, const std::string& word) {
  const Congruence chained = min_chain(rho, word);
  if (chained.is_equality()) return cond_yes_no("word_" + word + "_eps", true);
  // Witness: least merged pair left over.
  for (int a = 0; a < chained.parent()->order(); ++a)
    for (int b = a + 1; b < chained.parent()->order(); ++b)
      if (chained.same(a, b)) return cond_yes_no("word_" + word + "_eps", false, {a, b});
  throw InternalInconsistency("non-equality congruence with no merged pair");
}

}  // namespace

BundleVerdict congruence_bundle(const Congruence& rho, Bundle bundle, const BundleContext* ctx,
                                long cap) {
  const SemigroupRef& s = rho.parent();
  const int n = s->order();
  BundleVerdict v;
  v.bundle = bundle;

  BundleContext local;
  if (ctx == nullptr) {
    local = BundleContext::make(s, cap);
    ctx = &local;
  }

  auto below = [&](const std::string& id, const std::optional<Congruence>& bound,
                   const Congruence& who) {
    if (!bound) return cond_skipped(id);
    if (who.subset_of(*bound)) return cond_yes_no(id, true);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (who.same(a, b) && !bound->same(a, b)) return cond_yes_no(id, false, {a, b});
    throw InternalInconsistency("refinement failed without witness pair");
  };

  switch (bundle) {
    case Bundle::T: {
      v.conditions.push_back(word_collapses(rho, "t"));
      v.conditions.push_back(below("below_mu", ctx->mu, rho));
      v.conditions.push_back(
          cond_yes_no("trace_trivial", rho.trace() == Partition::equality(n)));
      {
        bool separating = true;
        std::vector<int> w;
        for (int e : s->idempotents()) {
          for (int f : s->idempotents())
            if (e < f && rho.same(e, f)) {
              separating = false;
              w = {e, f};
              break;
            }
          if (!separating) break;
        }
        v.conditions.push_back(cond_yes_no("idempotent_separating", separating, std::move(w)));
      }
      v.conditions.push_back(classes_satisfy(rho, "idempotent_classes_group", &is_group));
      {
        const Partition h = greens(*s, GreensRelation::H);
        bool inside = true;
        std::vector<int> w;
        for (int a = 0; a < n && inside; ++a)
          for (int b = a + 1; b < n; ++b)
            if (rho.same(a, b) && !h.same(a, b)) {
              inside = false;
              w = {a, b};
              break;
            }
        v.conditions.push_back(cond_yes_no("within_h", inside, std::move(w)));
      }
      break;
    }
    case Bundle::K: {
      v.conditions.push_back(word_collapses(rho, "k"));
      v.conditions.push_back(below("below_tau", ctx->tau, rho));
      v.conditions.push_back(cond_yes_no("kernel_is_idempotents", rho.kernel() == s->idempotents()));
      {
        bool pure = true;
        std::vector<int> w;
        for (int a = 0; a < n && pure; ++a) {
          if (s->is_idempotent(a)) continue;
          for (int e : s->idempotents())
            if (rho.same(a, e)) {
              pure = false;
              w = {a, e};
              break;
            }
        }
        v.conditions.push_back(cond_yes_no("idempotent_pure", pure, std::move(w)));
      }
      {
        const SubStructure ker = substructure(s, rho.kernel());
        ClassVerdict inner = is_semilattice(*ker.algebra);
        std::vector<int> w;
        for (int x : inner.witness) w.push_back(ker.global(x));
        v.conditions.push_back(cond_yes_no("kernel_semilattice", inner.holds, std::move(w)));
      }
      v.conditions.push_back(
          classes_satisfy(rho, "idempotent_classes_semilattice", &is_semilattice));
      {
        bool ok = true;
        std::vector<int> w;
        for (int x = 0; x < n; ++x)
          if (rho.same(s->product(x, x), x) && s->product(x, x) != x) {
            ok = false;
            w = {x};
            break;
          }
        v.conditions.push_back(cond_yes_no("square_implication", ok, std::move(w)));
      }
      break;
    }
    case Bundle::KT: {
      v.conditions.push_back(word_collapses(rho, "kt"));
      v.conditions.push_back(below("rho_k_below_mu", ctx->mu, rho_k(rho)));
      {
        const SubStructure zeta = centralizer_of_idempotents(s);
        bool inside = true;
        std::vector<int> w;
        for (int x : rho.kernel())
          if (zeta.local(x) < 0) {
            inside = false;
            w = {x};
            break;
          }
        v.conditions.push_back(cond_yes_no("kernel_in_centralizer", inside, std::move(w)));
      }
      {
        const SubStructure ker = substructure(s, rho.kernel());
        ClassVerdict inner = is_clifford(*ker.algebra);
        std::vector<int> w;
        for (int x : inner.witness) w.push_back(ker.global(x));
        v.conditions.push_back(cond_yes_no("kernel_clifford", inner.holds, std::move(w)));
      }
      v.conditions.push_back(classes_satisfy(rho, "idempotent_classes_clifford", &is_clifford));
      {
        bool ok = true;
        std::vector<int> w;
        for (int x = 0; x < n && ok; ++x) {
          if (!rho.same(s->product(x, x), x)) continue;
          for (int e : s->idempotents())
            if (s->product(x, e) != s->product(e, x)) {
              ok = false;
              w = {x, e};
              break;
            }
        }
        v.conditions.push_back(cond_yes_no("square_commute_implication", ok, std::move(w)));
      }
      break;
    }
    case Bundle::TK: {
      v.conditions.push_back(word_collapses(rho, "tk"));
      v.conditions.push_back(classes_satisfy(rho, "idempotent_classes_e_unitary", &is_e_unitary));
      {
        bool ok = true;
        std::vector<int> w;
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n; ++y)
            if (s->product(x, y) == y && rho.same(x, y) && s->product(x, x) != x) {
              ok = false;
              w = {x, y};
              break;
            }
        v.conditions.push_back(cond_yes_no("unit_implication", ok, std::move(w)));
      }
      break;
    }
    case Bundle::TKT: {
      v.conditions.push_back(word_collapses(rho, "tkt"));
      {
        bool ok = true;
        std::vector<int> w;
        for (int r : idempotent_class_reps(rho)) {
          const SubStructure cls = substructure(s, rho.class_of(r));
          ClassVerdict inner = is_e_omega_clifford(cls.algebra);
          if (!inner.holds) {
            ok = false;
            for (int x : inner.witness) w.push_back(cls.global(x));
            break;
          }
        }
        v.conditions.push_back(cond_yes_no("idempotent_classes_e_omega_clifford", ok, std::move(w)));
      }
      {
        bool ok = true;
        std::vector<int> w;
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            if (s->product(x, y) != y || !rho.same(x, y)) continue;
            for (int e : s->idempotents()) {
              if (!rho.same(y, e)) continue;
              if (s->product(x, e) != s->product(e, x)) {
                ok = false;
                w = {x, y, e};
                break;
              }
            }
          }
        v.conditions.push_back(cond_yes_no("unit_commute_implication", ok, std::move(w)));
      }
      break;
    }
    case Bundle::KTK: {
      v.conditions.push_back(word_collapses(rho, "ktk"));
      {
        const Congruence rk = rho_k(rho);
        v.conditions.push_back(classes_satisfy(rk, "rho_k_classes_e_unitary", &is_e_unitary));
      }
      {
        const SubStructure ker = substructure(s, rho.kernel());
        ClassVerdict inner = is_e_reflexive(ker.algebra);
        std::vector<int> w;
        for (int x : inner.witness) w.push_back(ker.global(x));
        v.conditions.push_back(cond_yes_no("kernel_e_reflexive", inner.holds, std::move(w)));
      }
      break;
    }
  }

  if (bundle == Bundle::KTK) {
    // Only the forward direction is claimed; note the converse as data.
    const bool collapse = v.conditions[0].value == Tri::yes;
    const bool both = v.conditions[1].value == Tri::yes && v.conditions[2].value == Tri::yes;
    v.unanimous = !collapse || both;
    if (both && !collapse) v.note = "converse fails on this instance";
    else if (both && collapse) v.note = "converse holds on this instance";
  } else {
    bool any_yes = false, any_no = false;
    for (const BundleCondition& c : v.conditions) {
      if (c.value == Tri::yes) any_yes = true;
      if (c.value == Tri::no) any_no = true;
    }
    v.unanimous = !(any_yes && any_no);
  }
  return v;
}

std::vector<int> kernel_of_class_sigma(const Congruence& rho, int e) {
  const SemigroupRef& s = rho.parent();
  if (!s->is_idempotent(e)) throw Error("kernel_of_class_sigma needs an idempotent");
  const SubStructure cls = substructure(s, rho.class_of(e));
  const Congruence local_sigma = sigma(cls.algebra);
  std::vector<int> got;
  for (int x : local_sigma.kernel()) got.push_back(cls.global(x));
  std::sort(got.begin(), got.end());

  std::vector<int> expected = rho_t(rho).class_of(e);
  std::sort(expected.begin(), expected.end());
  if (got != expected)
    throw InternalInconsistency(
        "kernel of the class group congruence differs from the minimal trace class at e=" +
        std::to_string(e));
  return got;
}

}  // namespace isg
