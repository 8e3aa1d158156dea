#include "isg/min_network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "isg/errors.hpp"

namespace isg {

const Congruence& MinNetworkReport::alpha(int n) const { return at(NetworkSide::alpha, n); }

const Congruence& MinNetworkReport::beta(int n) const { return at(NetworkSide::beta, n); }

const Congruence& MinNetworkReport::at(NetworkSide side, int n) const {
  const auto& seq = side == NetworkSide::alpha ? alphas_ : betas_;
  if (n < 0) throw Error("negative network index");
  if (n < static_cast<int>(seq.size())) return seq[n];
  // Beyond the stabilization index the chain is constant.
  if (stabilization_index_) return seq.back();
  throw DepthExceeded(static_cast<int>(seq.size()) - 1);
}

const std::vector<MinNetworkReport::Alias>& MinNetworkReport::aliases() {
  static const std::vector<Alias> kAliases = {
      {"sigma", NetworkSide::alpha, 1},
      {"eta", NetworkSide::beta, 1},
      {"nu", NetworkSide::alpha, 2},
      {"pi", NetworkSide::beta, 2},
      {"lambda", NetworkSide::beta, 3},
  };
  return kAliases;
}

std::optional<Congruence> MinNetworkReport::named(const std::string& alias) const {
  for (const Alias& a : aliases()) {
    if (a.name != alias) continue;
    const auto& seq = a.side == NetworkSide::alpha ? alphas_ : betas_;
    if (a.index < static_cast<int>(seq.size())) return seq[a.index];
    if (stabilization_index_) return seq.back();
    return std::nullopt;
  }
  return std::nullopt;
}

MinNetworkReport min_network(const SemigroupRef& s, int max_depth) {
  MinNetworkReport report;
  report.parent_ = s;
  Congruence omega = Congruence::universal(s);
  report.alphas_.push_back(omega);
  report.betas_.push_back(omega);
  report.meets_.push_back(meet(omega, omega));

  for (int n = 1; n <= max_depth; ++n) {
    Congruence a = rho_t(report.betas_[n - 1]);
    Congruence b = rho_k(report.alphas_[n - 1]);
    if (n == 1) {
      // alpha_1 is the least group congruence; the pair test must agree.
      if (!(a == sigma(s))) throw InternalInconsistency("alpha_1 differs from the pair-test sigma");
    }
    // Descent and zig-zag inclusions, checked rather than assumed.
    if (!a.subset_of(report.alphas_[n - 1]) || !b.subset_of(report.betas_[n - 1]))
      throw InternalInconsistency("network chain is not descending at level " + std::to_string(n));
    if (!a.subset_of(report.betas_[n - 1]) || !b.subset_of(report.alphas_[n - 1]))
      throw InternalInconsistency("network zig-zag inclusion fails at level " + std::to_string(n));
    report.meets_.push_back(meet(a, b));
    const bool stable = a == report.alphas_[n - 1] && b == report.betas_[n - 1];
    report.alphas_.push_back(std::move(a));
    report.betas_.push_back(std::move(b));
    if (stable) {
      // Level 0 is definitional, so constancy is only ever reported from
      // level 1 onwards even when level 1 already reproduces omega.
      report.stabilization_index_ = n == 1 ? 1 : n - 1;
      break;
    }
  }
  return report;
}

QuotientNetworkCheck network_on_quotient(const MinNetworkReport& net, NetworkSide quotient_side,
                                         int n, NetworkSide element_side, int i, int max_depth) {
  if (i > n) throw IndexOrder(i, n);
  const Congruence& level_n = net.at(quotient_side, n);
  const Congruence& level_i = net.at(element_side, i);

  Quotient q = quotient(level_n);
  MinNetworkReport sub = min_network(q.algebra, max_depth);
  Congruence native = sub.at(element_side, i);
  Congruence pushed = push_congruence(level_i, level_n, q);
  if (!(native == pushed))
    throw InternalInconsistency("network level does not transfer to the quotient (n=" +
                                std::to_string(n) + ", i=" + std::to_string(i) + ")");
  return QuotientNetworkCheck{std::move(q), std::move(native), std::move(pushed)};
}

namespace {

std::string level_name(NetworkSide side, int index) {
  std::string base = side == NetworkSide::alpha ? "α" : "β";  // alpha / beta
  base += std::to_string(index);
  for (const auto& a : MinNetworkReport::aliases()) {
    if (a.side == side && a.index == index) {
      static const std::map<std::string, std::string> kGreek = {{"sigma", "σ"},
                                                                {"eta", "η"},
                                                                {"nu", "ν"},
                                                                {"pi", "π"},
                                                                {"lambda", "λ"}};
      base += " = " + kGreek.at(a.name);
    }
  }
  return base;
}

}  // namespace

std::string render_network_dot(const MinNetworkReport& report) {
  const int levels = report.stabilization_index()
                         ? *report.stabilization_index()
                         : static_cast<int>(report.alphas().size()) - 1;

  // One node per distinct congruence; positions with equal partitions merge.
  std::vector<const Congruence*> node_value;
  std::vector<std::vector<std::string>> node_names;
  std::map<std::vector<int>, int> node_of;
  auto node_for = [&](const Congruence& c, const std::string& name) {
    auto [it, fresh] = node_of.try_emplace(c.partition().reps(), static_cast<int>(node_value.size()));
    if (fresh) {
      node_value.push_back(&c);
      node_names.emplace_back();
    }
    node_names[it->second].push_back(name);
    return it->second;
  };

  node_for(report.alpha(0), "ω");  // omega: alpha_0 = beta_0
  for (int k = 1; k <= levels; ++k) {
    node_for(report.alpha(k), level_name(NetworkSide::alpha, k));
    node_for(report.beta(k), level_name(NetworkSide::beta, k));
  }

  // Only inclusions that actually hold on this semigroup become edges.
  std::set<std::pair<int, int>> edges;
  auto add_edge = [&](const Congruence& coarse, const Congruence& fine) {
    if (!fine.subset_of(coarse)) return;
    const int from = node_of.at(coarse.partition().reps());
    const int to = node_of.at(fine.partition().reps());
    if (from != to) edges.emplace(from, to);
  };
  for (int k = 1; k <= levels; ++k) {
    add_edge(report.alpha(k - 1), report.alpha(k));
    add_edge(report.beta(k - 1), report.beta(k));
    add_edge(report.beta(k - 1), report.alpha(k));
    add_edge(report.alpha(k - 1), report.beta(k));
  }

  std::ostringstream out;
  out << "digraph min_network {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (size_t i = 0; i < node_value.size(); ++i) {
    out << "  n" << i << " [label=\"";
    for (size_t j = 0; j < node_names[i].size(); ++j) {
      if (j > 0) out << " = ";
      out << node_names[i][j];
    }
    const int classes = node_value[i]->num_classes();
    out << "\\n" << classes << (classes == 1 ? " class" : " classes") << "\"];\n";
  }
  for (const auto& [from, to] : edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace isg
