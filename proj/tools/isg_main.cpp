// Command-line front end: validate and analyze Cayley tables, compute the
// min network, classify, enumerate congruences, emit catalog entries and run
// the verification suites.
//
// Exit codes: 0 success or property holds, 1 property fails or a suite fails,
// 2 invalid algebra, 3 parse error, 4 depth exceeded, 64 usage, 70 internal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isg/catalog.hpp"
#include "isg/classify.hpp"
#include "isg/congruence.hpp"
#include "isg/errors.hpp"
#include "isg/min_network.hpp"
#include "isg/semigroup.hpp"
#include "isg/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitInvalidAlgebra = 2;
constexpr int kExitParseError = 3;
constexpr int kExitDepthExceeded = 4;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

// Input that cannot be resolved at all (missing file, unknown catalog name).
struct InputError : isg::Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

void require_catalog_name(const std::string& name) {
  for (const isg::CatalogEntry& e : isg::catalog_entries())
    if (e.name == name) return;
  throw InputError("unknown catalog entry \"" + name + "\"");
}

// Accepts either a file path (.json parsed as the JSON table document,
// anything else as the .cay format) or "builtin:NAME" for a catalog entry.
isg::SemigroupRef load_input(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    const std::string name = source.substr(8);
    require_catalog_name(name);
    return isg::catalog_build(name);
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + source + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  const bool json = source.size() >= 5 && source.compare(source.size() - 5, 5, ".json") == 0;
  return isg::parse_table(buf.str(), json ? isg::TableFormat::json : isg::TableFormat::cay);
}

void write_out(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw isg::Error("cannot write \"" + out_path + "\"");
  out << content;
}

std::string join_class(const isg::InverseSemigroup& s, const std::vector<int>& cls) {
  std::string out;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (i) out += ",";
    out += s.display_name(cls[i]);
  }
  return out;
}

std::string partition_string(const isg::InverseSemigroup& s, const isg::Partition& p) {
  std::string out;
  bool first = true;
  for (const std::vector<int>& cls : p.classes()) {
    if (!first) out += "|";
    first = false;
    out += join_class(s, cls);
  }
  return out;
}

// Alias names attached to a congruence when it coincides with a named one.
std::vector<std::string> alias_names(const isg::Congruence& c, const isg::MinNetworkReport& net,
                                     const std::optional<isg::Congruence>& mu_c,
                                     const std::optional<isg::Congruence>& tau_c) {
  std::vector<std::string> out;
  if (c.is_equality()) out.push_back("epsilon");
  if (c.is_universal()) out.push_back("omega");
  for (const auto& alias : isg::MinNetworkReport::aliases())
    if (auto named = net.named(alias.name); named && *named == c) out.push_back(alias.name);
  if (mu_c && *mu_c == c) out.push_back("mu");
  if (tau_c && *tau_c == c) out.push_back("tau");
  return out;
}

int cmd_validate(const std::string& input, const std::string& format) {
  nlohmann::json doc;
  try {
    isg::SemigroupRef s = load_input(input);
    if (format == "json") {
      doc["valid"] = true;
      doc["order"] = s->order();
      doc["idempotents"] = s->idempotents();
      std::vector<int> inv;
      for (int i = 0; i < s->order(); ++i) inv.push_back(s->inverse(i));
      doc["inverses"] = inv;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "valid inverse semigroup of order " << s->order() << "\n";
      std::cout << "idempotents: " << s->idempotents().size() << " ("
                << join_class(*s, s->idempotents()) << ")\n";
      std::cout << "inverses:";
      for (int i = 0; i < s->order(); ++i)
        std::cout << " " << s->display_name(i) << "->" << s->display_name(s->inverse(i));
      std::cout << "\n";
    }
    return kExitPass;
  } catch (const isg::ValidationError& e) {
    if (format == "json") {
      doc["valid"] = false;
      doc["error"] = e.what();
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "not an inverse semigroup: " << e.what() << "\n";
    }
    return kExitInvalidAlgebra;
  }
}

int cmd_analyze(const std::string& input, long cap, const std::string& format) {
  const isg::SemigroupRef s = load_input(input);
  const isg::Partition l = greens(*s, isg::GreensRelation::L);
  const isg::Partition r = greens(*s, isg::GreensRelation::R);
  const isg::Partition h = greens(*s, isg::GreensRelation::H);

  // Covering pairs of the natural partial order.
  std::vector<std::pair<int, int>> hasse;
  const int n = s->order();
  auto strictly_below = [&](int a, int b) { return a != b && s->natural_leq(a, b); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!strictly_below(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < n && covering; ++c)
        if (strictly_below(a, c) && strictly_below(c, b)) covering = false;
      if (covering) hasse.emplace_back(a, b);
    }

  const isg::SubStructure up = e_closure(s);
  const isg::SubStructure zeta = centralizer_of_idempotents(s);
  const isg::Congruence sig = isg::sigma(s);
  const isg::Congruence eta = isg::rho_k(isg::Congruence::universal(s));
  std::optional<isg::Congruence> mu_c, tau_c;
  try {
    mu_c = isg::mu(s, cap);
    tau_c = isg::tau(s, cap);
  } catch (const isg::EnumerationCapExceeded&) {
    std::cerr << "notice: congruence enumeration capped at " << cap
              << "; mu and tau not determined\n";
  }

  if (format == "json") {
    nlohmann::json doc;
    doc["order"] = n;
    doc["idempotents"] = s->idempotents();
    doc["greens"] = {{"l_classes", l.num_classes()},
                     {"r_classes", r.num_classes()},
                     {"h_classes", h.num_classes()}};
    doc["natural_order_hasse"] = nlohmann::json::array();
    for (const auto& [a, b] : hasse) doc["natural_order_hasse"].push_back({a, b});
    doc["e_closure"] = up.members;
    doc["centralizer_of_idempotents"] = zeta.members;
    doc["class_counts"]["sigma"] = sig.num_classes();
    doc["class_counts"]["eta"] = eta.num_classes();
    doc["class_counts"]["mu"] = mu_c ? nlohmann::json(mu_c->num_classes()) : nlohmann::json();
    doc["class_counts"]["tau"] = tau_c ? nlohmann::json(tau_c->num_classes()) : nlohmann::json();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "order " << n << ", idempotents " << s->idempotents().size() << " ("
              << join_class(*s, s->idempotents()) << ")\n";
    std::cout << "green: L " << l.num_classes() << " classes, R " << r.num_classes()
              << " classes, H " << h.num_classes() << " classes\n";
    std::cout << "natural order covers:";
    if (hasse.empty()) std::cout << " (none)";
    for (const auto& [a, b] : hasse)
      std::cout << " " << s->display_name(a) << "<" << s->display_name(b);
    std::cout << "\n";
    std::cout << "e-closure: " << join_class(*s, up.members) << "\n";
    std::cout << "idempotent centralizer: " << join_class(*s, zeta.members) << "\n";
    std::cout << "sigma: " << sig.num_classes() << " classes\n";
    std::cout << "eta: " << eta.num_classes() << " classes\n";
    if (mu_c) std::cout << "mu: " << mu_c->num_classes() << " classes\n";
    if (tau_c) std::cout << "tau: " << tau_c->num_classes() << " classes\n";
  }
  return kExitPass;
}

int cmd_min_network(const std::string& input, int max_depth, const std::string& format,
                    const std::string& out_path) {
  const isg::SemigroupRef s = load_input(input);
  const isg::MinNetworkReport net = isg::min_network(s, max_depth);

  if (format == "dot") {
    write_out(isg::render_network_dot(net), out_path);
  } else if (format == "json") {
    nlohmann::json doc;
    doc["levels"] = nlohmann::json::array();
    for (size_t i = 0; i < net.alphas().size(); ++i) {
      nlohmann::json level;
      level["n"] = i;
      level["alpha_classes"] = net.alphas()[i].num_classes();
      level["beta_classes"] = net.betas()[i].num_classes();
      level["meet_classes"] = net.meets()[i].num_classes();
      doc["levels"].push_back(std::move(level));
    }
    doc["stabilization_index"] = net.stabilization_index()
                                     ? nlohmann::json(*net.stabilization_index())
                                     : nlohmann::json();
    for (const auto& alias : isg::MinNetworkReport::aliases())
      if (auto c = net.named(alias.name)) doc["aliases"][alias.name] = c->num_classes();
    write_out(doc.dump(2) + "\n", out_path);
  } else {
    std::ostringstream out;
    out << "level  alpha  beta  meet\n";
    for (size_t i = 0; i < net.alphas().size(); ++i)
      out << i << "      " << net.alphas()[i].num_classes() << "      "
          << net.betas()[i].num_classes() << "     " << net.meets()[i].num_classes() << "\n";
    if (net.stabilization_index())
      out << "stabilizes at index " << *net.stabilization_index() << "\n";
    else
      out << "did not stabilize within depth " << max_depth << "\n";
    for (const auto& alias : isg::MinNetworkReport::aliases())
      if (auto c = net.named(alias.name))
        out << alias.name << " = " << (alias.side == isg::NetworkSide::alpha ? "alpha_" : "beta_")
            << alias.index << " (" << c->num_classes() << " classes)\n";
    write_out(out.str(), out_path);
  }
  return net.stabilization_index() ? kExitPass : kExitDepthExceeded;
}

int cmd_check(const std::string& input, const std::string& class_arg, int max_depth,
              const std::string& format) {
  const isg::SemigroupRef s = load_input(input);

  std::string name = class_arg;
  int param = -1;
  if (const size_t colon = class_arg.find(':'); colon != std::string::npos) {
    name = class_arg.substr(0, colon);
    try {
      param = std::stoi(class_arg.substr(colon + 1));
    } catch (const std::exception&) {
      param = -1;
    }
    if (param < 0) {
      std::cerr << "usage: parameter in \"" << class_arg << "\" must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  isg::ClassVerdict v;
  if (name == "group") {
    v = isg::is_group(*s);
  } else if (name == "semilattice") {
    v = isg::is_semilattice(*s);
  } else if (name == "clifford") {
    v = isg::is_clifford(*s);
  } else if (name == "e_unitary") {
    v = isg::is_e_unitary(*s);
  } else if (name == "e_reflexive") {
    v = isg::is_e_reflexive(s);
  } else if (name == "e_omega_clifford") {
    v = isg::is_e_omega_clifford(s);
  } else if (name == "ker_alpha_n_clifford" && param >= 0) {
    v = isg::is_ker_alpha_n_clifford(s, param, max_depth);
  } else if (name == "beta_n_over_e_unitary" && param >= 0) {
    v = isg::is_beta_n_over_e_unitary(s, param, max_depth);
  } else {
    std::cerr << "usage: unknown class \"" << class_arg
              << "\" (parametrized classes need a :N suffix)\n";
    return kExitUsage;
  }

  if (format == "json") {
    nlohmann::json doc;
    doc["class"] = class_name(v.cls);
    if (v.param >= 0) doc["param"] = v.param;
    doc["holds"] = v.holds;
    doc["witness"] = v.witness;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << class_name(v.cls);
    if (v.param >= 0) std::cout << ":" << v.param;
    if (v.holds) {
      std::cout << ": holds\n";
    } else {
      std::cout << ": fails, witness (" << join_class(*s, v.witness) << ")\n";
    }
  }
  return v.holds ? kExitPass : kExitPropertyFalse;
}

int cmd_congruences(const std::string& input, long cap, int max_depth, const std::string& format,
                    const std::string& out_path) {
  const isg::SemigroupRef s = load_input(input);
  const isg::CongruenceLattice lattice = isg::enumerate_congruences(s, cap);
  const isg::MinNetworkReport net = isg::min_network(s, max_depth);
  std::optional<isg::Congruence> mu_c, tau_c;
  if (lattice.complete) {
    mu_c = isg::mu(s, cap);
    tau_c = isg::tau(s, cap);
  }

  std::vector<std::vector<std::string>> aliases;
  for (const isg::Congruence& c : lattice.all) aliases.push_back(alias_names(c, net, mu_c, tau_c));

  if (format == "dot") {
    // Hasse diagram of the inclusion order, named congruences filled.
    std::ostringstream out;
    out << "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < lattice.all.size(); ++i) {
      out << "  c" << i << " [label=\"#" << i << "\\n" << lattice.all[i].num_classes()
          << " classes";
      for (const std::string& a : aliases[i]) out << "\\n" << a;
      out << "\"";
      if (!aliases[i].empty()) out << ", style=filled";
      out << "];\n";
    }
    for (size_t i = 0; i < lattice.all.size(); ++i)
      for (size_t j = 0; j < lattice.all.size(); ++j) {
        if (i == j || !lattice.all[i].subset_of(lattice.all[j])) continue;
        bool covering = true;
        for (size_t k = 0; k < lattice.all.size() && covering; ++k)
          if (k != i && k != j && lattice.all[i].subset_of(lattice.all[k]) &&
              lattice.all[k].subset_of(lattice.all[j]))
            covering = false;
        if (covering) out << "  c" << i << " -> c" << j << ";\n";
      }
    out << "}\n";
    write_out(out.str(), out_path);
  } else if (format == "json") {
    nlohmann::json doc;
    doc["complete"] = lattice.complete;
    doc["count"] = lattice.all.size();
    doc["congruences"] = nlohmann::json::array();
    for (size_t i = 0; i < lattice.all.size(); ++i) {
      nlohmann::json jc;
      jc["index"] = i;
      jc["classes"] = lattice.all[i].num_classes();
      jc["partition"] = lattice.all[i].partition().reps();
      jc["aliases"] = aliases[i];
      doc["congruences"].push_back(std::move(jc));
    }
    write_out(doc.dump(2) + "\n", out_path);
  } else {
    std::ostringstream out;
    out << lattice.all.size() << " congruences"
        << (lattice.complete ? "" : " (incomplete: enumeration capped)") << "\n";
    for (size_t i = 0; i < lattice.all.size(); ++i) {
      out << "#" << i << ": " << lattice.all[i].num_classes() << " classes  "
          << partition_string(*s, lattice.all[i].partition());
      if (!aliases[i].empty()) {
        out << "  [";
        for (size_t a = 0; a < aliases[i].size(); ++a)
          out << (a ? ", " : "") << aliases[i][a];
        out << "]";
      }
      out << "\n";
    }
    write_out(out.str(), out_path);
  }
  return kExitPass;
}

int cmd_verify(const std::vector<std::string>& suites, const std::vector<std::string>& only,
               long cap, int max_depth, const std::string& format, const std::string& out_path) {
  isg::Corpus corpus = isg::builtin_corpus(cap);
  if (!only.empty()) {
    isg::Corpus filtered;
    for (const isg::CorpusEntry& entry : corpus) {
      const std::string base = entry.name.substr(0, entry.name.find('/'));
      for (const std::string& sel : only)
        if (sel == entry.name || sel == base) {
          filtered.push_back(entry);
          break;
        }
    }
    corpus = std::move(filtered);
  }

  isg::SuiteOptions opt;
  opt.cap = cap;
  opt.max_depth = max_depth;

  std::vector<std::string> to_run = suites;
  if (to_run.empty() || (to_run.size() == 1 && to_run[0] == "all")) to_run = isg::suite_names();

  std::vector<isg::VerdictReport> reports;
  for (const std::string& name : to_run) reports.push_back(isg::run_suite(name, corpus, opt));

  bool all_pass = true;
  for (const isg::VerdictReport& r : reports)
    if (r.status() == isg::VerdictReport::Status::fail) all_pass = false;

  if (format == "json") {
    write_out(isg::to_json_lines(reports), out_path);
  } else {
    std::ostringstream out;
    for (const isg::VerdictReport& r : reports) {
      const char* status = r.status() == isg::VerdictReport::Status::fail      ? "FAIL"
                           : r.status() == isg::VerdictReport::Status::skipped ? "SKIP"
                                                                               : "pass";
      out << "suite " << r.suite << ": " << status << " (" << r.instances_checked
          << " instances";
      if (!r.skipped.empty()) out << ", " << r.skipped.size() << " skipped";
      out << ")\n";
      for (const isg::SuiteFailure& f : r.failures) {
        out << "  failure on " << f.semigroup << ": " << f.condition;
        if (!f.witness.empty()) {
          out << " witness (";
          for (size_t i = 0; i < f.witness.size(); ++i) out << (i ? "," : "") << f.witness[i];
          out << ")";
        }
        out << "\n";
      }
    }
    out << (all_pass ? "all suites pass\n" : "FAILURES present\n");
    write_out(out.str(), out_path);
  }
  return all_pass ? kExitPass : kExitPropertyFalse;
}

int cmd_catalog_list(const std::string& format) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const isg::CatalogEntry& e : isg::catalog_entries()) {
      const isg::SemigroupRef s = isg::catalog_build(e.name);
      doc.push_back({{"name", e.name},
                     {"order", s->order()},
                     {"idempotents", s->idempotents().size()},
                     {"summary", e.summary}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const isg::CatalogEntry& e : isg::catalog_entries()) {
      const isg::SemigroupRef s = isg::catalog_build(e.name);
      std::cout << e.name << "  order " << s->order() << "  idempotents "
                << s->idempotents().size() << "  " << e.summary << "\n";
    }
  }
  return kExitPass;
}

int cmd_catalog_emit(const std::string& name, const std::string& table_format,
                     const std::string& out_path) {
  require_catalog_name(name);
  const isg::SemigroupRef s = isg::catalog_build(name);
  const isg::TableFormat fmt =
      table_format == "json" ? isg::TableFormat::json : isg::TableFormat::cay;
  write_out(isg::emit(*s, fmt), out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on finite inverse semigroups"};
  app.require_subcommand(1);

  long cap = isg::kDefaultEnumCap;
  int max_depth = isg::kDefaultNetworkDepth;
  app.add_option("--cap", cap, "congruence enumeration cap")->envname("ISG_ENUM_CAP");
  app.add_option("--depth", max_depth, "network depth limit");

  std::string input, format = "text", out_path, class_arg, emit_name, table_format = "cay";
  std::vector<std::string> suites, only;

  CLI::App* validate = app.add_subcommand("validate", "check a Cayley table");
  validate->fallthrough();
  validate->add_option("input", input, "path or builtin:NAME")->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* analyze = app.add_subcommand("analyze", "idempotents, Green's relations, named congruences");
  analyze->fallthrough();
  analyze->add_option("input", input, "path or builtin:NAME")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* minnet = app.add_subcommand("min-network", "alternating minimal trace/kernel chains");
  minnet->fallthrough();
  minnet->add_option("input", input, "path or builtin:NAME")->required();
  minnet->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
  minnet->add_option("--out", out_path, "write the report to a file");

  CLI::App* check = app.add_subcommand("check", "test one structural class");
  check->fallthrough();
  check->add_option("input", input, "path or builtin:NAME")->required();
  check->add_option("class", class_arg, "group|semilattice|clifford|e_unitary|e_reflexive|e_omega_clifford|ker_alpha_n_clifford:N|beta_n_over_e_unitary:N")
      ->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* congr = app.add_subcommand("congruences", "enumerate the congruence lattice");
  congr->fallthrough();
  congr->add_option("input", input, "path or builtin:NAME")->required();
  congr->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
  congr->add_option("--out", out_path, "write the report to a file");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites over the builtin corpus");
  verify->fallthrough();
  verify->add_option("--suite", suites, "suite name or \"all\"")
      ->check(CLI::IsMember([] {
        std::vector<std::string> names = isg::suite_names();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--only", only, "restrict the corpus to named entries or bases");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to a file");

  CLI::App* catalog = app.add_subcommand("catalog", "builtin semigroups");
  catalog->fallthrough();
  CLI::App* catalog_list = catalog->add_subcommand("list", "list catalog entries");
  catalog_list->fallthrough();
  catalog_list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  CLI::App* catalog_emit = catalog->add_subcommand("emit", "print one entry as a table");
  catalog_emit->fallthrough();
  catalog_emit->add_option("name", emit_name, "catalog entry name")->required();
  catalog_emit->add_option("--format", table_format)->check(CLI::IsMember({"cay", "json"}));
  catalog_emit->add_option("--out", out_path, "write the table to a file");
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, format);
    if (analyze->parsed()) return cmd_analyze(input, cap, format);
    if (minnet->parsed()) return cmd_min_network(input, max_depth, format, out_path);
    if (check->parsed()) return cmd_check(input, class_arg, max_depth, format);
    if (congr->parsed()) return cmd_congruences(input, cap, max_depth, format, out_path);
    if (verify->parsed()) return cmd_verify(suites, only, cap, max_depth, format, out_path);
    if (catalog->parsed()) {
      if (catalog_list->parsed()) return cmd_catalog_list(format);
      if (catalog_emit->parsed()) return cmd_catalog_emit(emit_name, table_format, out_path);
    }
    std::cerr << "usage: no subcommand\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const isg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const isg::ValidationError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kExitInvalidAlgebra;
  } catch (const isg::DepthExceeded& e) {
    std::cerr << "depth exceeded: " << e.what() << "\n";
    return kExitDepthExceeded;
  } catch (const isg::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
