#include "isg/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "isg/errors.hpp"

namespace isg {

namespace {

void require_same_parent(const Congruence& a, const Congruence& b) {
  if (a.parent() != b.parent() && !a.parent()->same_table(*b.parent())) throw ParentMismatch();
}

// Union-find pass verifying that a reflexive symmetric relation given as a
// membership test is already transitive: its partition must reproduce it.
template <typename SameFn>
Partition partition_of_equivalence(int n, SameFn&& related, const char* what) {
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  Partition p = uf.to_partition();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.same(a, b) != related(a, b))
        throw InternalInconsistency(std::string(what) + " pair test is not an equivalence");
  return p;
}

}  // namespace

Congruence::Congruence(SemigroupRef parent, Partition partition)
    : parent_(std::move(parent)), part_(std::move(partition)), trace_(Partition::equality(0)) {
  const int n = parent_->order();
  if (part_.size() != n) throw ParentMismatch();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!part_.same(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!part_.same(parent_->product(c, a), parent_->product(c, b)) ||
            !part_.same(parent_->product(a, c), parent_->product(b, c)))
          throw NotACongruence(a, b, c);
      }
    }
  build_caches();
}

Congruence::Congruence(SemigroupRef parent, Partition partition, Trusted)
    : parent_(std::move(parent)), part_(std::move(partition)), trace_(Partition::equality(0)) {
  build_caches();
}

// Closure output is compatible by construction; skip the O(n^3) recheck.
Congruence congruence_from_closure(SemigroupRef parent, Partition partition) {
  return Congruence(std::move(parent), std::move(partition), Congruence::Trusted{});
}

void Congruence::build_caches() {
  const int n = parent_->order();
  std::vector<bool> kernel_class(n, false);
  for (int e : parent_->idempotents()) kernel_class[part_.rep(e)] = true;
  for (int a = 0; a < n; ++a)
    if (kernel_class[part_.rep(a)]) kernel_.push_back(a);

  // Trace: idempotents keep their rho-classes, everything else is a singleton.
  std::vector<int> trep(n);
  std::vector<int> least_idem(n, -1);
  for (int i = 0; i < n; ++i) {
    if (parent_->is_idempotent(i)) {
      const int r = part_.rep(i);
      if (least_idem[r] < 0) least_idem[r] = i;
      trep[i] = least_idem[r];
    } else {
      trep[i] = i;
    }
  }
  trace_ = Partition(std::move(trep));
}

Congruence Congruence::equality(SemigroupRef parent) {
  const int n = parent->order();
  return congruence_from_closure(std::move(parent), Partition::equality(n));
}

Congruence Congruence::universal(SemigroupRef parent) {
  const int n = parent->order();
  return congruence_from_closure(std::move(parent), Partition::universal(n));
}

bool Congruence::is_equality() const { return part_ == Partition::equality(part_.size()); }

bool Congruence::is_universal() const { return part_.num_classes() == 1; }

bool Congruence::subset_of(const Congruence& other) const {
  require_same_parent(*this, other);
  return part_.refines(other.part_);
}

bool operator==(const Congruence& a, const Congruence& b) {
  require_same_parent(a, b);
  return a.part_ == b.part_;
}

bool is_congruence(const InverseSemigroup& s, const Partition& p) {
  const int n = s.order();
  if (p.size() != n) throw ParentMismatch();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.same(s.product(c, a), s.product(c, b))) return false;
        if (!p.same(s.product(a, c), s.product(b, c))) return false;
      }
    }
  return true;
}

Partition closure_partition(const InverseSemigroup& s,
                            const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.order();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  auto merge = [&](int a, int b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("pair out of range");
    merge(a, b);
  }
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    for (int c = 0; c < n; ++c) {
      merge(s.product(c, a), s.product(c, b));
      merge(s.product(a, c), s.product(b, c));
    }
  }
  return uf.to_partition();
}

Congruence closure(const SemigroupRef& s, const PairRelation& relation) {
  if (relation.carrier != s->order()) throw ParentMismatch();
  return congruence_from_closure(s, closure_partition(*s, relation.pairs));
}

TraceRoutes rho_t_routes(const Congruence& rho) {
  const InverseSemigroup& s = *rho.parent();
  const int n = s.order();

  std::vector<std::pair<int, int>> trace_pairs;
  for (int e : s.idempotents())
    for (int f : s.idempotents())
      if (e < f && rho.same(e, f)) trace_pairs.emplace_back(e, f);

  std::vector<std::pair<int, int>> f_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rho.same(a, b) && s.is_idempotent(s.product(s.inverse(a), b))) f_pairs.emplace_back(a, b);

  auto pointwise_related = [&](int a, int b) {
    const int ea = s.product(s.inverse(a), a);
    const int eb = s.product(s.inverse(b), b);
    if (!rho.same(ea, eb)) return false;
    for (int e : s.idempotents())
      if (rho.same(e, ea) && s.product(a, e) == s.product(b, e)) return true;
    return false;
  };

  return TraceRoutes{closure_partition(s, trace_pairs), closure_partition(s, f_pairs),
                     partition_of_equivalence(n, pointwise_related, "trace operator")};
}

Congruence rho_t(const Congruence& rho) {
  TraceRoutes r = rho_t_routes(rho);
  if (!(r.from_trace_pairs == r.from_f_meet && r.from_trace_pairs == r.pointwise))
    throw InternalInconsistency("trace operator routes disagree");
  return congruence_from_closure(rho.parent(), std::move(r.from_trace_pairs));
}

KernelRoutes rho_k_routes(const Congruence& rho) {
  const InverseSemigroup& s = *rho.parent();
  const int n = s.order();

  std::vector<std::pair<int, int>> square_pairs;
  for (int x : rho.kernel()) square_pairs.emplace_back(x, s.product(x, x));

  const Partition l = greens(s, GreensRelation::L);
  const Partition r = greens(s, GreensRelation::R);
  std::vector<std::pair<int, int>> l_pairs, r_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!rho.same(a, b)) continue;
      if (l.same(a, b)) l_pairs.emplace_back(a, b);
      if (r.same(a, b)) r_pairs.emplace_back(a, b);
    }

  return KernelRoutes{closure_partition(s, square_pairs), closure_partition(s, l_pairs),
                      closure_partition(s, r_pairs)};
}

Congruence rho_k(const Congruence& rho) {
  KernelRoutes r = rho_k_routes(rho);
  if (!(r.from_squares == r.from_l_meet && r.from_squares == r.from_r_meet))
    throw InternalInconsistency("kernel operator routes disagree");
  return congruence_from_closure(rho.parent(), std::move(r.from_squares));
}

Congruence min_chain(const Congruence& rho, std::string_view word) {
  if (word.empty()) throw InvalidWord(std::string(word));
  Congruence cur = rho;
  for (char c : word) {
    switch (c) {
      case 't':
        cur = rho_t(cur);
        break;
      case 'k':
        cur = rho_k(cur);
        break;
      default:
        throw InvalidWord(std::string(word));
    }
  }
  return cur;
}

Congruence join(const Congruence& a, const Congruence& b) {
  require_same_parent(a, b);
  const int n = a.parent()->order();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    if (a.partition().rep(i) != i) pairs.emplace_back(i, a.partition().rep(i));
    if (b.partition().rep(i) != i) pairs.emplace_back(i, b.partition().rep(i));
  }
  return congruence_from_closure(a.parent(), closure_partition(*a.parent(), pairs));
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_same_parent(a, b);
  Partition m = Partition::meet(a.partition(), b.partition());
  if (!is_congruence(*a.parent(), m))
    throw InternalInconsistency("meet of two congruences is not a congruence");
  return congruence_from_closure(a.parent(), std::move(m));
}

namespace {

// Group test local to this module: single idempotent and H universal.
bool quotient_is_group(const InverseSemigroup& q) {
  return static_cast<int>(q.idempotents().size()) == 1 &&
         greens(q, GreensRelation::H) == Partition::universal(q.order());
}

}  // namespace

Congruence sigma(const SemigroupRef& s, std::optional<long> verify_min_cap) {
  const int n = s->order();
  auto related = [&](int a, int b) {
    for (int e : s->idempotents())
      if (s->product(a, e) == s->product(b, e)) return true;
    return false;
  };
  Partition p = partition_of_equivalence(n, related, "least group congruence");
  if (!is_congruence(*s, p))
    throw InternalInconsistency("least group congruence pair test is not a congruence");
  Congruence c = congruence_from_closure(s, std::move(p));
  if (!quotient_is_group(*quotient(c).algebra))
    throw InternalInconsistency("least group congruence quotient is not a group");

  // Minimality is cross-checked against the full lattice when it fits the cap.
  if (verify_min_cap) {
    CongruenceLattice lattice = enumerate_congruences(s, *verify_min_cap);
    if (lattice.complete) {
      for (const Congruence& other : lattice.all) {
        if (quotient_is_group(*quotient(other).algebra) && !c.subset_of(other))
          throw InternalInconsistency("a smaller group congruence exists");
      }
    }
  }
  return c;
}

Congruence mu(const SemigroupRef& s, long cap) {
  const int n = s->order();
  const auto& idems = s->idempotents();
  std::vector<std::vector<int>> key(n);
  for (int a = 0; a < n; ++a) {
    key[a].reserve(idems.size());
    for (int e : idems) key[a].push_back(s->product(s->product(s->inverse(a), e), a));
  }
  std::map<std::vector<int>, int> first;
  std::vector<int> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = first.try_emplace(key[a], a).first->second;
  Partition p = Partition::from_labels(labels);

  if (!is_congruence(*s, p))
    throw InternalInconsistency("idempotent-separating pair test is not a congruence");
  Congruence fast = congruence_from_closure(s, std::move(p));
  if (fast.trace() != Partition::equality(n))
    throw InternalInconsistency("idempotent-separating pair test merges idempotents");

  CongruenceLattice lattice = enumerate_congruences(s, cap);
  if (!lattice.complete) throw EnumerationCapExceeded(cap);
  const Congruence* greatest = nullptr;
  for (const Congruence& c : lattice.all) {
    if (c.trace() != Partition::equality(n)) continue;
    if (greatest == nullptr || greatest->subset_of(c)) greatest = &c;
  }
  if (greatest == nullptr)
    throw InternalInconsistency("no idempotent-separating congruence found");
  for (const Congruence& c : lattice.all) {
    if (c.trace() == Partition::equality(n) && !c.subset_of(*greatest))
      throw InternalInconsistency("idempotent-separating congruences have no greatest element");
  }
  if (!(fast == *greatest))
    throw InternalInconsistency("idempotent-separating pair test disagrees with enumeration");
  return fast;
}

Congruence tau(const SemigroupRef& s, long cap) {
  CongruenceLattice lattice = enumerate_congruences(s, cap);
  if (!lattice.complete) throw EnumerationCapExceeded(cap);
  const auto& idems = s->idempotents();
  const Congruence* greatest = nullptr;
  for (const Congruence& c : lattice.all) {
    if (c.kernel() != idems) continue;
    if (greatest == nullptr || greatest->subset_of(c)) greatest = &c;
  }
  if (greatest == nullptr) throw InternalInconsistency("no idempotent-pure congruence found");
  for (const Congruence& c : lattice.all) {
    if (c.kernel() == idems && !c.subset_of(*greatest))
      throw InternalInconsistency("idempotent-pure congruences have no greatest element");
  }
  return *greatest;
}

CongruenceLattice enumerate_congruences(const SemigroupRef& s, long cap) {
  const int n = s->order();
  std::set<std::vector<int>> seen;
  std::vector<Congruence> all;
  auto add = [&](Partition p) {
    if (seen.insert(p.reps()).second) {
      all.push_back(congruence_from_closure(s, std::move(p)));
      return true;
    }
    return false;
  };

  add(Partition::equality(n));
  CongruenceLattice out;
  for (int a = 0; a < n && out.complete; ++a)
    for (int b = a + 1; b < n; ++b) {
      add(closure_partition(*s, {{a, b}}));
      if (static_cast<long>(all.size()) > cap) {
        out.complete = false;
        break;
      }
    }

  // Join closure: every congruence is a join of principal ones.
  size_t frontier_begin = 0;
  while (out.complete && frontier_begin < all.size()) {
    const size_t frontier_end = all.size();
    for (size_t i = frontier_begin; i < frontier_end && out.complete; ++i) {
      for (size_t j = 0; j < frontier_end; ++j) {
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x) {
          if (all[i].partition().rep(x) != x) pairs.emplace_back(x, all[i].partition().rep(x));
          if (all[j].partition().rep(x) != x) pairs.emplace_back(x, all[j].partition().rep(x));
        }
        add(closure_partition(*s, pairs));
        if (static_cast<long>(all.size()) > cap) {
          out.complete = false;
          break;
        }
      }
    }
    frontier_begin = frontier_end;
  }

  std::sort(all.begin(), all.end(), [](const Congruence& x, const Congruence& y) {
    const int cx = x.num_classes(), cy = y.num_classes();
    if (cx != cy) return cx < cy;
    return x.partition().reps() < y.partition().reps();
  });
  out.all = std::move(all);
  return out;
}

Quotient quotient(const Congruence& rho) {
  const InverseSemigroup& s = *rho.parent();
  const int n = s.order();
  Quotient q;
  q.class_reps = rho.partition().class_reps();
  const int k = static_cast<int>(q.class_reps.size());
  std::vector<int> rank(n, -1);
  for (int i = 0; i < k; ++i) rank[q.class_reps[i]] = i;
  q.projection.resize(n);
  for (int a = 0; a < n; ++a) q.projection[a] = rank[rho.partition().rep(a)];

  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = q.projection[s.product(q.class_reps[i], q.class_reps[j])];
  q.algebra = InverseSemigroup::validate_flat(k, std::move(table));
  return q;
}

Congruence push_congruence(const Congruence& theta, const Congruence& rho) {
  return push_congruence(theta, rho, quotient(rho));
}

Congruence push_congruence(const Congruence& theta, const Congruence& rho, const Quotient& onto) {
  require_same_parent(theta, rho);
  for (int a = 0; a < rho.parent()->order(); ++a)
    for (int b = a + 1; b < rho.parent()->order(); ++b)
      if (rho.same(a, b) && !theta.same(a, b)) throw NotAbove(a, b);

  const int k = static_cast<int>(onto.class_reps.size());
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = theta.partition().rep(onto.class_reps[i]);
  return Congruence(onto.algebra, Partition::from_labels(labels));
}

Congruence restrict_congruence(const Congruence& rho, const SubStructure& y) {
  if (y.parent != rho.parent() && !y.parent->same_table(*rho.parent())) throw ParentMismatch();
  const int m = y.size();
  std::vector<int> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = rho.partition().rep(y.members[i]);
  return Congruence(y.algebra, Partition::from_labels(labels));
}

}  // namespace isg
