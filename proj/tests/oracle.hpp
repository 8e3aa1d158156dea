// Brute-force reference implementations used only by the tests. Everything
// here recomputes from the raw Cayley table with exhaustive search, kept
// deliberately independent of the library's algorithms so the two can check
// each other. Usable up to order 7 for partition enumeration (Bell(7) = 877)
// and order 8 for isomorphism search.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "isg/semigroup.hpp"

namespace oracle {

inline int prod(const isg::InverseSemigroup& s, int a, int b) { return s.product(a, b); }

inline bool idem(const isg::InverseSemigroup& s, int a) { return prod(s, a, a) == a; }

inline std::vector<int> idempotents(const isg::InverseSemigroup& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a)
    if (idem(s, a)) out.push_back(a);
  return out;
}

// A partition as a canonical least-member representative vector.
using Part = std::vector<int>;

inline Part canonical(std::vector<int> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> first(n, -1);
  Part rep(n);
  for (int i = 0; i < n; ++i) {
    int& f = first[labels[i]];
    if (f < 0) f = i;
    rep[i] = f;
  }
  return rep;
}

// All partitions of {0..n-1} as restricted growth strings.
inline std::vector<Part> all_partitions(int n) {
  std::vector<Part> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(canonical(rgs));
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) break;
    }
    if (i == 0) return out;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
}

inline bool is_congruence(const isg::InverseSemigroup& s, const Part& p) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (p[a] != p[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (p[prod(s, a, c)] != p[prod(s, b, c)]) return false;
        if (p[prod(s, c, a)] != p[prod(s, c, b)]) return false;
      }
    }
  return true;
}

// Every congruence, by filtering every partition.
inline std::vector<Part> all_congruences(const isg::InverseSemigroup& s) {
  std::vector<Part> out;
  for (const Part& p : all_partitions(s.order()))
    if (is_congruence(s, p)) out.push_back(p);
  return out;
}

inline bool finer(const Part& fine, const Part& coarse) {
  for (size_t i = 0; i < fine.size(); ++i)
    if (coarse[fine[i]] != coarse[i]) return false;
  return true;
}

// Trace as the partition of the idempotent subset, kept as a list of
// (idempotent, class-of-least-idempotent) pairs in parent indices.
inline std::vector<std::pair<int, int>> trace_pairs(const isg::InverseSemigroup& s,
                                                    const Part& p) {
  std::vector<std::pair<int, int>> out;
  const std::vector<int> es = idempotents(s);
  for (int e : es) {
    int least = e;
    for (int f : es)
      if (p[f] == p[e]) {
        least = std::min(least, f);
      }
    out.emplace_back(e, least);
  }
  return out;
}

inline std::vector<int> kernel_of(const isg::InverseSemigroup& s, const Part& p) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a)
    for (int e : idempotents(s))
      if (p[a] == p[e]) {
        out.push_back(a);
        break;
      }
  return out;
}

// Least congruence with the same trace: lattice minimum by exhaustive scan.
inline Part rho_t_brute(const isg::InverseSemigroup& s, const Part& rho) {
  std::optional<Part> best;
  const auto target = trace_pairs(s, rho);
  for (const Part& c : all_congruences(s)) {
    if (trace_pairs(s, c) != target) continue;
    if (!best || finer(c, *best)) best = c;
  }
  return *best;
}

// Least congruence with the same kernel.
inline Part rho_k_brute(const isg::InverseSemigroup& s, const Part& rho) {
  std::optional<Part> best;
  const auto target = kernel_of(s, rho);
  for (const Part& c : all_congruences(s)) {
    if (kernel_of(s, c) != target) continue;
    if (!best || finer(c, *best)) best = c;
  }
  return *best;
}

// Least congruence collapsing all idempotents together (group quotient).
inline Part sigma_brute(const isg::InverseSemigroup& s) {
  std::optional<Part> best;
  for (const Part& c : all_congruences(s)) {
    const std::vector<int> es = idempotents(s);
    bool one_class = true;
    for (int e : es)
      if (c[e] != c[es[0]]) one_class = false;
    if (!one_class) continue;
    if (!best || finer(c, *best)) best = c;
  }
  return *best;
}

// Greatest congruence separating the idempotents.
inline Part mu_brute(const isg::InverseSemigroup& s) {
  std::optional<Part> best;
  for (const Part& c : all_congruences(s)) {
    const std::vector<int> es = idempotents(s);
    bool separates = true;
    for (size_t i = 0; i < es.size() && separates; ++i)
      for (size_t j = i + 1; j < es.size(); ++j)
        if (c[es[i]] == c[es[j]]) separates = false;
    if (!separates) continue;
    if (!best || finer(*best, c)) best = c;
  }
  return *best;
}

// Greatest congruence whose kernel is exactly the idempotents.
inline Part tau_brute(const isg::InverseSemigroup& s) {
  std::optional<Part> best;
  for (const Part& c : all_congruences(s)) {
    if (kernel_of(s, c) != idempotents(s)) continue;
    if (!best || finer(*best, c)) best = c;
  }
  return *best;
}

// Least congruence containing the given pairs.
inline Part closure_brute(const isg::InverseSemigroup& s,
                          const std::vector<std::pair<int, int>>& pairs) {
  std::optional<Part> best;
  for (const Part& c : all_congruences(s)) {
    bool contains = true;
    for (const auto& [a, b] : pairs)
      if (c[a] != c[b]) contains = false;
    if (!contains) continue;
    if (!best || finer(c, *best)) best = c;
  }
  return *best;
}

// Green's relations via principal ideals over S^1.
inline std::set<int> left_ideal(const isg::InverseSemigroup& s, int a) {
  std::set<int> out{a};
  for (int x = 0; x < s.order(); ++x) out.insert(prod(s, x, a));
  return out;
}

inline std::set<int> right_ideal(const isg::InverseSemigroup& s, int a) {
  std::set<int> out{a};
  for (int x = 0; x < s.order(); ++x) out.insert(prod(s, a, x));
  return out;
}

inline bool greens_l(const isg::InverseSemigroup& s, int a, int b) {
  return left_ideal(s, a) == left_ideal(s, b);
}

inline bool greens_r(const isg::InverseSemigroup& s, int a, int b) {
  return right_ideal(s, a) == right_ideal(s, b);
}

// Natural partial order by left idempotent multiplication.
inline bool leq_brute(const isg::InverseSemigroup& s, int a, int b) {
  for (int e = 0; e < s.order(); ++e)
    if (idem(s, e) && prod(s, e, b) == a) return true;
  return false;
}

// Isomorphism by exhaustive bijection search.
inline bool isomorphic(const isg::InverseSemigroup& s1, const isg::InverseSemigroup& s2) {
  if (s1.order() != s2.order()) return false;
  const int n = s1.order();
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  do {
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n; ++b)
        if (f[prod(s1, a, b)] != prod(s2, f[a], f[b])) {
          hom = false;
          break;
        }
    if (hom) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace oracle
