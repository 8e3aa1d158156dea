#include "isg/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "isg/errors.hpp"

namespace isg {

Partition::Partition(std::vector<int> rep) : rep_(std::move(rep)) {
  const int n = static_cast<int>(rep_.size());
  for (int i = 0; i < n; ++i) {
    const int r = rep_[i];
    if (r < 0 || r > i || rep_[r] != r) {
      throw Error("partition representative vector is not in canonical form at index " +
                  std::to_string(i));
    }
  }
}

Partition Partition::equality(int n) {
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  return Partition(std::move(rep));
}

Partition Partition::universal(int n) {
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> rep(n);
  std::unordered_map<int, int> first;
  first.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = first.try_emplace(labels[i], i);
    rep[i] = it->second;
  }
  return Partition(std::move(rep));
}

int Partition::num_classes() const {
  int k = 0;
  for (int i = 0; i < size(); ++i)
    if (rep_[i] == i) ++k;
  return k;
}

std::vector<int> Partition::class_reps() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (rep_[i] == i) out.push_back(i);
  return out;
}

std::vector<int> Partition::class_of(int a) const {
  std::vector<int> out;
  const int r = rep_[a];
  for (int i = 0; i < size(); ++i)
    if (rep_[i] == r) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(size(), -1);
  for (int i = 0; i < size(); ++i) {
    const int r = rep_[i];
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) throw ParentMismatch();
  for (int i = 0; i < size(); ++i)
    if (coarser.rep_[rep_[i]] != coarser.rep_[i]) return false;
  return true;
}

Partition Partition::meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw ParentMismatch();
  const int n = p.size();
  std::vector<int> rep(n);
  std::unordered_map<long long, int> first;
  first.reserve(n);
  for (int i = 0; i < n; ++i) {
    const long long key = static_cast<long long>(p.rep_[i]) * n + q.rep_[i];
    auto [it, fresh] = first.try_emplace(key, i);
    rep[i] = it->second;
  }
  return Partition(std::move(rep));
}

UnionFind::UnionFind(int n) : parent_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  const int ra = find(a);
  const int rb = find(b);
  if (ra == rb) return false;
  // Keeping the smaller index as root makes canonical extraction a single pass.
  if (ra < rb)
    parent_[rb] = ra;
  else
    parent_[ra] = rb;
  return true;
}

Partition UnionFind::to_partition() {
  const int n = static_cast<int>(parent_.size());
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = find(i);
  return Partition(std::move(rep));
}

bool PairRelation::contains(int a, int b) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

}  // namespace isg
