#include "isg/semigroup.hpp"

#include <algorithm>
#include <set>

#include "isg/errors.hpp"

namespace isg {

InverseSemigroup::InverseSemigroup(int n, std::vector<int> table, std::vector<int> inv,
                                   std::vector<int> idempotents, std::vector<bool> idem_mask,
                                   std::optional<std::vector<std::string>> element_names,
                                   std::string name)
    : order_(n),
      table_(std::move(table)),
      inv_(std::move(inv)),
      idempotents_(std::move(idempotents)),
      idem_mask_(std::move(idem_mask)),
      element_names_(std::move(element_names)),
      name_(std::move(name)) {}

SemigroupRef InverseSemigroup::validate(const std::vector<std::vector<int>>& table,
                                        std::optional<std::vector<std::string>> element_names,
                                        std::string name) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw ValidationError("row " + std::to_string(r) + " has " +
                            std::to_string(table[r].size()) + " entries, expected " +
                            std::to_string(n));
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return validate_flat(n, std::move(flat), std::move(element_names), std::move(name));
}

SemigroupRef InverseSemigroup::validate_flat(int n, std::vector<int> table,
                                             std::optional<std::vector<std::string>> element_names,
                                             std::string name) {
  if (n <= 0) throw EmptySemigroup();
  if (static_cast<int>(table.size()) != n * n)
    throw ValidationError("flat table has wrong size");

  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int v = table[r * n + c];
      if (v < 0 || v >= n) throw NotClosed(r, c, v);
    }

  auto prod = [&](int a, int b) { return table[a * n + b]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (prod(prod(a, b), c) != prod(a, prod(b, c))) throw NotAssociative(a, b, c);

  std::vector<bool> idem_mask(n, false);
  std::vector<int> idempotents;
  for (int e = 0; e < n; ++e)
    if (prod(e, e) == e) {
      idem_mask[e] = true;
      idempotents.push_back(e);
    }

  for (int e : idempotents)
    for (int f : idempotents)
      if (e < f && prod(e, f) != prod(f, e)) throw IdempotentsDoNotCommute(e, f);

  // Regular + commuting idempotents forces exactly one inverse per element.
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (prod(prod(a, x), a) == a && prod(prod(x, a), x) == x) {
        if (inv[a] >= 0)
          throw InternalInconsistency("element " + std::to_string(a) +
                                      " has two inverses despite commuting idempotents");
        inv[a] = x;
      }
    }
    if (inv[a] < 0) throw NotRegular(a);
  }

  for (int a = 0; a < n; ++a) {
    if (inv[inv[a]] != a)
      throw InternalInconsistency("inverse is not an involution at " + std::to_string(a));
  }

  if (element_names) {
    if (static_cast<int>(element_names->size()) != n)
      throw ValidationError("expected " + std::to_string(n) + " element names, got " +
                            std::to_string(element_names->size()));
    std::set<std::string> distinct(element_names->begin(), element_names->end());
    if (static_cast<int>(distinct.size()) != n)
      throw ValidationError("element names are not distinct");
  }

  return SemigroupRef(new InverseSemigroup(n, std::move(table), std::move(inv),
                                           std::move(idempotents), std::move(idem_mask),
                                           std::move(element_names), std::move(name)));
}

bool InverseSemigroup::natural_leq(int a, int b) const {
  return a == product(product(a, inverse(a)), b);
}

bool InverseSemigroup::same_table(const InverseSemigroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

std::string InverseSemigroup::display_name(int i) const {
  if (element_names_) return (*element_names_)[i];
  return "x" + std::to_string(i);
}

Partition greens(const InverseSemigroup& s, GreensRelation which) {
  const int n = s.order();
  auto key_l = [&](int a) { return s.product(s.inverse(a), a); };
  auto key_r = [&](int a) { return s.product(a, s.inverse(a)); };
  std::vector<int> labels(n);
  switch (which) {
    case GreensRelation::L:
      for (int a = 0; a < n; ++a) labels[a] = key_l(a);
      return Partition::from_labels(labels);
    case GreensRelation::R:
      for (int a = 0; a < n; ++a) labels[a] = key_r(a);
      return Partition::from_labels(labels);
    case GreensRelation::H: {
      return Partition::meet(greens(s, GreensRelation::L), greens(s, GreensRelation::R));
    }
  }
  throw Error("unreachable");
}

PairRelation f_relation(const InverseSemigroup& s) {
  const int n = s.order();
  PairRelation rel(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.is_idempotent(s.product(s.inverse(a), b))) rel.add(a, b);
  for (int a = 0; a < n; ++a)
    if (!rel.contains(a, a))
      throw InternalInconsistency("compatibility relation is not reflexive");
  return rel;
}

SubStructure substructure(const SemigroupRef& s, std::vector<int> members) {
  const int n = s->order();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw Error("substructure needs at least one member");
  if (members.front() < 0 || members.back() >= n)
    throw Error("substructure member out of range");

  std::vector<int> to_local(n, -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) to_local[members[i]] = i;

  for (int a : members) {
    for (int b : members) {
      if (to_local[s->product(a, b)] < 0)
        throw NotClosedSubset(a, b,
                              "product " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                  std::to_string(s->product(a, b)) + " escapes");
    }
    if (to_local[s->inverse(a)] < 0)
      throw NotClosedSubset(a, s->inverse(a),
                            "inverse of " + std::to_string(a) + " = " +
                                std::to_string(s->inverse(a)) + " escapes");
  }

  const int m = static_cast<int>(members.size());
  std::vector<int> local_table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      local_table[i * m + j] = to_local[s->product(members[i], members[j])];

  std::optional<std::vector<std::string>> names;
  if (s->has_element_names()) {
    std::vector<std::string> sub_names;
    sub_names.reserve(m);
    for (int g : members) sub_names.push_back(s->display_name(g));
    names = std::move(sub_names);
  }

  SubStructure out;
  out.parent = s;
  out.members = std::move(members);
  out.to_local = std::move(to_local);
  out.algebra = InverseSemigroup::validate_flat(m, std::move(local_table), std::move(names));
  return out;
}

SubStructure e_closure(const SemigroupRef& s) {
  std::vector<int> members;
  for (int x = 0; x < s->order(); ++x) {
    for (int e : s->idempotents()) {
      if (s->natural_leq(e, x)) {
        members.push_back(x);
        break;
      }
    }
  }
  return substructure(s, std::move(members));
}

SubStructure centralizer_of_idempotents(const SemigroupRef& s) {
  std::vector<int> members;
  for (int a = 0; a < s->order(); ++a) {
    bool central = true;
    for (int e : s->idempotents()) {
      if (s->product(a, e) != s->product(e, a)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(a);
  }
  return substructure(s, std::move(members));
}

}  // namespace isg
