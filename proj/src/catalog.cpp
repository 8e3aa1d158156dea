#include "isg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "isg/classify.hpp"
#include "isg/congruence.hpp"
#include "isg/errors.hpp"

namespace isg {

namespace {

// Partial injection as an image vector, -1 for undefined.
using PartialMap = std::vector<int>;

std::vector<std::pair<int, int>> graph_of(const PartialMap& f) {
  std::vector<std::pair<int, int>> g;
  for (int x = 0; x < static_cast<int>(f.size()); ++x)
    if (f[x] >= 0) g.emplace_back(x, f[x]);
  return g;
}

PartialMap compose_left_first(const PartialMap& f, const PartialMap& g) {
  PartialMap h(f.size(), -1);
  for (int x = 0; x < static_cast<int>(f.size()); ++x)
    if (f[x] >= 0) h[x] = g[f[x]];
  return h;
}

}  // namespace

SemigroupRef symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 3)
    throw SizeUnsupported("symmetric inverse monoid supported for 1 <= n <= 3, got " +
                          std::to_string(n));

  std::vector<PartialMap> elements;
  PartialMap current(n, -1);
  // Enumerate all injective image vectors over {-1, 0..n-1}.
  auto emit_all = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      elements.push_back(current);
      return;
    }
    for (int img = -1; img < n; ++img) {
      if (img >= 0) {
        bool used = false;
        for (int x = 0; x < pos; ++x)
          if (current[x] == img) used = true;
        if (used) continue;
      }
      current[pos] = img;
      self(self, pos + 1);
      current[pos] = -1;
    }
  };
  emit_all(emit_all, 0);

  std::sort(elements.begin(), elements.end(),
            [](const PartialMap& a, const PartialMap& b) { return graph_of(a) < graph_of(b); });

  std::map<PartialMap, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) index[elements[i]] = i;

  const int m = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i * m + j] = index.at(compose_left_first(elements[i], elements[j]));
  return InverseSemigroup::validate_flat(m, std::move(table), std::nullopt,
                                         "i" + std::to_string(n));
}

SemigroupRef brandt_b2() {
  // Index order: zero, e, f, a, a'.
  const int z = 0, e = 1, f = 2, a = 3, ai = 4;
  std::vector<int> t(25, z);
  t[e * 5 + e] = e;
  t[f * 5 + f] = f;
  t[a * 5 + ai] = e;
  t[ai * 5 + a] = f;
  t[e * 5 + a] = a;
  t[a * 5 + f] = a;
  t[f * 5 + ai] = ai;
  t[ai * 5 + e] = ai;
  return InverseSemigroup::validate_flat(
      5, std::move(t), std::vector<std::string>{"0", "e", "f", "a", "a'"}, "b2");
}

SemigroupRef chain_semilattice(int n) {
  if (n < 1) throw SizeUnsupported("chain semilattice needs n >= 1");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::min(i, j);
  return InverseSemigroup::validate_flat(n, std::move(t), std::nullopt, "c" + std::to_string(n));
}

SemigroupRef cyclic_group(int n) {
  if (n < 1) throw SizeUnsupported("cyclic group needs n >= 1");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return InverseSemigroup::validate_flat(n, std::move(t), std::nullopt, "z" + std::to_string(n));
}

SemigroupRef symmetric_group_s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < 6; ++i) index[perms[i]] = i;
  std::vector<int> t(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> composed(3);
      for (int x = 0; x < 3; ++x) composed[x] = perms[j][perms[i][x]];
      t[i * 6 + j] = index.at(composed);
    }
  return InverseSemigroup::validate_flat(6, std::move(t), std::nullopt, "s3");
}

SemigroupRef strong_semilattice_of_groups(const std::vector<SemigroupRef>& groups,
                                          const std::vector<std::vector<int>>& down_maps) {
  const int k = static_cast<int>(groups.size());
  if (k < 1) throw SizeUnsupported("need at least one group");
  if (static_cast<int>(down_maps.size()) != k - 1)
    throw Error("expected one linking map per adjacent chain pair");

  for (int i = 0; i < k; ++i)
    if (groups[i]->idempotents().size() != 1)
      throw Error("chain component " + std::to_string(i) + " is not a group");

  for (int i = 0; i + 1 < k; ++i) {
    const InverseSemigroup& src = *groups[i + 1];
    const InverseSemigroup& dst = *groups[i];
    const std::vector<int>& phi = down_maps[i];
    if (static_cast<int>(phi.size()) != src.order())
      throw LinkingMapNotHomomorphism("linking map " + std::to_string(i) + " has wrong domain size");
    for (int x : phi)
      if (x < 0 || x >= dst.order())
        throw LinkingMapNotHomomorphism("linking map " + std::to_string(i) + " image out of range");
    for (int x = 0; x < src.order(); ++x)
      for (int y = 0; y < src.order(); ++y)
        if (phi[src.product(x, y)] != dst.product(phi[x], phi[y]))
          throw LinkingMapNotHomomorphism("linking map " + std::to_string(i) +
                                          " does not respect products at (" + std::to_string(x) +
                                          ", " + std::to_string(y) + ")");
  }

  // phi[i][j] carries groups[i] down to groups[j], j <= i.
  std::vector<std::vector<std::vector<int>>> phi(k);
  for (int i = 0; i < k; ++i) {
    phi[i].resize(i + 1);
    std::vector<int> id(groups[i]->order());
    for (int x = 0; x < groups[i]->order(); ++x) id[x] = x;
    phi[i][i] = std::move(id);
    for (int j = i - 1; j >= 0; --j) {
      const std::vector<int>& step = down_maps[j];  // groups[j+1] -> groups[j]
      const std::vector<int>& upper = phi[i][j + 1];
      std::vector<int> composed(groups[i]->order());
      for (int x = 0; x < groups[i]->order(); ++x) composed[x] = step[upper[x]];
      phi[i][j] = std::move(composed);
    }
  }

  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + groups[i]->order();
  const int m = offset[k];

  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int i = 0; i < k; ++i)
    for (int gi = 0; gi < groups[i]->order(); ++gi)
      for (int j = 0; j < k; ++j)
        for (int gj = 0; gj < groups[j]->order(); ++gj) {
          const int level = std::min(i, j);
          const int value = groups[level]->product(phi[i][level][gi], phi[j][level][gj]);
          t[(offset[i] + gi) * m + (offset[j] + gj)] = offset[level] + value;
        }

  SemigroupRef out = InverseSemigroup::validate_flat(m, std::move(t), std::nullopt, "ssg");
  if (!is_clifford(*out).holds)
    throw InternalInconsistency("strong semilattice of groups is not Clifford");
  return out;
}

SemigroupRef direct_product(const SemigroupRef& a, const SemigroupRef& b) {
  const long m = static_cast<long>(a->order()) * b->order();
  if (m > 64) throw SizeExceeded("direct product order " + std::to_string(m) + " exceeds 64");
  const int n = static_cast<int>(m);
  const int nb = b->order();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int sa = a->product(i / nb, j / nb);
      const int sb = b->product(i % nb, j % nb);
      t[i * n + j] = sa * nb + sb;
    }
  SemigroupRef out = InverseSemigroup::validate_flat(n, std::move(t));
  // Idempotents must be exactly the idempotent pairs.
  for (int i = 0; i < n; ++i) {
    const bool expect = a->is_idempotent(i / nb) && b->is_idempotent(i % nb);
    if (out->is_idempotent(i) != expect)
      throw InternalInconsistency("direct product idempotents are not componentwise");
  }
  return out;
}

SemigroupRef adjoin_zero(const SemigroupRef& s) {
  const int n = s->order();
  const int m = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * m + j] = s->product(i, j);
  std::optional<std::vector<std::string>> names;
  if (s->has_element_names()) {
    std::vector<std::string> v = s->element_names();
    v.push_back("zero");
    names = std::move(v);
  }
  return InverseSemigroup::validate_flat(m, std::move(t), std::move(names));
}

SemigroupRef adjoin_identity(const SemigroupRef& s) {
  const int n = s->order();
  const int m = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * m + j] = s->product(i, j);
  for (int i = 0; i < m; ++i) {
    t[i * m + n] = i;
    t[n * m + i] = i;
  }
  std::optional<std::vector<std::string>> names;
  if (s->has_element_names()) {
    std::vector<std::string> v = s->element_names();
    v.push_back("one");
    names = std::move(v);
  }
  return InverseSemigroup::validate_flat(m, std::move(t), std::move(names));
}

namespace {

struct Token {
  std::string text;
  int line, col;
};

// Strips '#' comments and splits into whitespace-separated tokens per line.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      const size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.push_back(Token{std::string(line.substr(start, i - start)), line_no,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

int parse_int_token(const Token& t) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t.text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + t.text + "\"", t.line, t.col);
  }
  if (used != t.text.size())
    throw ParseError("expected an integer, got \"" + t.text + "\"", t.line, t.col);
  return value;
}

}  // namespace

SemigroupRef parse_cayley(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing order line", 1);
  if (lines[0].size() != 1)
    throw ParseError("order line must hold a single integer", lines[0][0].line, lines[0][0].col);
  const int n = parse_int_token(lines[0][0]);
  if (n < 1) throw ParseError("order must be positive", lines[0][0].line, lines[0][0].col);
  if (static_cast<int>(lines.size()) < 1 + n)
    throw ParseError("expected " + std::to_string(n) + " table rows",
                     lines.back().back().line);

  std::vector<std::vector<int>> table(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = lines[1 + r];
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       row[0].line, row[0].col);
    for (const Token& t : row) table[r].push_back(parse_int_token(t));
  }

  std::optional<std::vector<std::string>> names;
  size_t next = 1 + n;
  if (next < lines.size() && lines[next][0].text == "names:") {
    const auto& row = lines[next];
    if (static_cast<int>(row.size()) != n + 1)
      throw ParseError("names trailer has " + std::to_string(row.size() - 1) +
                           " entries, expected " + std::to_string(n),
                       row[0].line, row[0].col);
    std::vector<std::string> v;
    for (size_t i = 1; i < row.size(); ++i) v.push_back(row[i].text);
    names = std::move(v);
    ++next;
  }
  if (next < lines.size())
    throw ParseError("unexpected trailing content", lines[next][0].line, lines[next][0].col);

  return InverseSemigroup::validate(table, std::move(names));
}

SemigroupRef parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset.
    int line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }

  try {
    if (!doc.is_object()) throw ParseError("top-level value must be an object", 1);
    if (!doc.contains("order") || !doc["order"].is_number_integer())
      throw ParseError("missing integer field \"order\"", 1);
    const int n = doc["order"].get<int>();
    if (!doc.contains("table") || !doc["table"].is_array())
      throw ParseError("missing array field \"table\"", 1);
    std::vector<std::vector<int>> table;
    for (const auto& row : doc["table"]) {
      if (!row.is_array()) throw ParseError("table rows must be arrays", 1);
      table.push_back(row.get<std::vector<int>>());
    }
    if (static_cast<int>(table.size()) != n)
      throw ParseError("table has " + std::to_string(table.size()) + " rows, expected " +
                           std::to_string(n),
                       1);
    std::optional<std::vector<std::string>> names;
    if (doc.contains("element_names")) names = doc["element_names"].get<std::vector<std::string>>();
    std::string name;
    if (doc.contains("name")) name = doc["name"].get<std::string>();
    return InverseSemigroup::validate(table, std::move(names), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1);
  }
}

SemigroupRef parse_table(std::string_view text, TableFormat format) {
  return format == TableFormat::cay ? parse_cayley(text) : parse_json(text);
}

std::string emit(const InverseSemigroup& s, TableFormat format) {
  const int n = s.order();
  if (format == TableFormat::cay) {
    std::ostringstream out;
    out << n << "\n";
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c > 0) out << ' ';
        out << s.product(r, c);
      }
      out << "\n";
    }
    if (s.has_element_names()) {
      for (const std::string& name : s.element_names()) {
        if (name.empty() || name.find_first_of(" \t\n#") != std::string::npos)
          throw Error("element name \"" + name + "\" is not representable in cay format");
      }
      out << "names:";
      for (const std::string& name : s.element_names()) out << ' ' << name;
      out << "\n";
    }
    return out.str();
  }

  nlohmann::json doc;
  if (!s.name().empty()) doc["name"] = s.name();
  doc["order"] = n;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) table[r][c] = s.product(r, c);
  doc["table"] = table;
  if (s.has_element_names()) doc["element_names"] = s.element_names();
  return doc.dump(2) + "\n";
}

namespace {

void check_fact(const SemigroupRef& s, const std::string& key, long expected) {
  long got = -1;
  if (key == "order") {
    got = s->order();
  } else if (key == "idempotents") {
    got = static_cast<long>(s->idempotents().size());
  } else if (key == "sigma_classes") {
    got = sigma(s).num_classes();
  } else if (key == "eta_classes") {
    got = rho_k(Congruence::universal(s)).num_classes();
  } else if (key == "congruence_count") {
    got = static_cast<long>(enumerate_congruences(s).all.size());
  } else if (key == "is_clifford") {
    got = is_clifford(*s).holds ? 1 : 0;
  } else if (key == "is_e_unitary") {
    got = is_e_unitary(*s).holds ? 1 : 0;
  } else {
    throw Error("unknown catalog fact \"" + key + "\"");
  }
  if (got != expected)
    throw InternalInconsistency("catalog fact " + key + " = " + std::to_string(got) +
                                ", expected " + std::to_string(expected));
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"c1", "trivial semigroup", [] { return chain_semilattice(1); },
                 {{"order", 1}, {"idempotents", 1}}});
  out.push_back({"c2", "two-element chain semilattice", [] { return chain_semilattice(2); },
                 {{"order", 2}, {"idempotents", 2}, {"sigma_classes", 1}, {"is_clifford", 1},
                  {"is_e_unitary", 1}}});
  out.push_back({"c3", "three-element chain semilattice", [] { return chain_semilattice(3); },
                 {{"order", 3}, {"idempotents", 3}}});
  out.push_back({"z2", "cyclic group of order 2", [] { return cyclic_group(2); },
                 {{"order", 2}, {"idempotents", 1}, {"sigma_classes", 2}, {"is_e_unitary", 1}}});
  out.push_back({"z3", "cyclic group of order 3", [] { return cyclic_group(3); },
                 {{"order", 3}, {"idempotents", 1}}});
  out.push_back({"s3", "symmetric group on three points", [] { return symmetric_group_s3(); },
                 {{"order", 6}, {"idempotents", 1}}});
  out.push_back({"b2", "combinatorial Brandt semigroup", [] { return brandt_b2(); },
                 {{"order", 5}, {"idempotents", 3}, {"congruence_count", 2}, {"is_clifford", 0},
                  {"is_e_unitary", 0}}});
  out.push_back({"i1", "partial injections on one point", [] { return symmetric_inverse_monoid(1); },
                 {{"order", 2}, {"idempotents", 2}}});
  out.push_back({"i2", "partial injections on two points", [] { return symmetric_inverse_monoid(2); },
                 {{"order", 7}, {"idempotents", 4}, {"sigma_classes", 1}, {"eta_classes", 2}}});
  out.push_back({"i3", "partial injections on three points",
                 [] { return symmetric_inverse_monoid(3); },
                 {{"order", 34}, {"idempotents", 8}}});
  out.push_back({"z2_0", "cyclic group of order 2 with a zero adjoined",
                 [] { return adjoin_zero(cyclic_group(2)); },
                 {{"order", 3}, {"idempotents", 2}, {"sigma_classes", 1}}});
  out.push_back({"c2xz2", "direct product of the two-chain and the two-cycle",
                 [] { return direct_product(chain_semilattice(2), cyclic_group(2)); },
                 {{"order", 4}, {"idempotents", 2}, {"is_clifford", 1}}});
  out.push_back({"cl3", "two-cycle over a trivial group with the collapsing map",
                 [] {
                   return strong_semilattice_of_groups({chain_semilattice(1), cyclic_group(2)},
                                                       {{0, 0}});
                 },
                 {{"order", 3}, {"idempotents", 2}, {"is_clifford", 1}}});
  out.push_back({"cl4", "two-cycle over a two-cycle with the identity map",
                 [] {
                   return strong_semilattice_of_groups({cyclic_group(2), cyclic_group(2)},
                                                       {{0, 1}});
                 },
                 {{"order", 4}, {"idempotents", 2}, {"is_clifford", 1}}});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> kEntries = make_entries();
  return kEntries;
}

SemigroupRef catalog_build(std::string_view name) {
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.name != name) continue;
    SemigroupRef s = entry.build();
    if (s->name() != entry.name) {
      // Composite builders carry generic names; the catalog entry name wins.
      const int n = s->order();
      std::vector<int> flat(static_cast<size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[a * n + b] = s->product(a, b);
      std::optional<std::vector<std::string>> names;
      if (s->has_element_names()) names = s->element_names();
      s = InverseSemigroup::validate_flat(n, std::move(flat), std::move(names), entry.name);
    }
    for (const auto& [key, value] : entry.expected_facts) check_fact(s, key, value);
    return s;
  }
  throw Error("unknown catalog entry \"" + std::string(name) + "\"");
}

}  // namespace isg
