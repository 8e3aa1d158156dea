#pragma once

#include <string>
#include <vector>

#include "isg/classify.hpp"
#include "isg/congruence.hpp"
#include "isg/min_network.hpp"

namespace isg {

struct CorpusEntry {
  std::string name;
  SemigroupRef s;
};

using Corpus = std::vector<CorpusEntry>;

// The built-in corpus: catalog members plus all of their quotients by
// enumerated congruences, deduplicated by (order, idempotent count).
Corpus builtin_corpus(long cap = kDefaultEnumCap);

struct SuiteFailure {
  std::string semigroup;        // corpus name
  std::string cayley;           // emitted table, so the case can be replayed
  std::vector<int> congruence;  // representative vector, empty when not tied to one
  std::string condition;
  std::vector<int> witness;
};

struct SuiteSkip {
  std::string semigroup;
  std::string reason;
};

struct VerdictReport {
  std::string suite;
  long instances_checked = 0;
  std::vector<SuiteFailure> failures;
  std::vector<SuiteSkip> skipped;
  double elapsed_seconds = 0;  // excluded from serialized reports

  enum class Status { pass, fail, skipped };
  Status status() const;
};

struct SuiteOptions {
  long cap = kDefaultEnumCap;
  int max_depth = kDefaultNetworkDepth;
  int ab_n_max = 4;       // quotient-transfer levels
  int rel_n_max = 2;      // layered-class suite levels
  int main_n_max = 1;     // even/odd tail suite levels
  int word_len_max = 5;   // inclusion suite word length
};

// The trace and kernel operators pick least congruences: containment of
// traces/kernels matches containment against the operator image.
VerdictReport suite_least(const Corpus& corpus, const SuiteOptions& opt = {});
// Traces and kernels of pushed congruences agree iff they agree upstairs.
VerdictReport suite_quotient(const Corpus& corpus, const SuiteOptions& opt = {});
// (theta/rho)_t = (rho v theta_t)/rho and the kernel analogue.
VerdictReport suite_min(const Corpus& corpus, const SuiteOptions& opt = {});
// Network levels transfer to network quotients, all i <= n <= ab_n_max.
VerdictReport suite_ab(const Corpus& corpus, const SuiteOptions& opt = {});
// Kernel of the class group congruence equals the minimal trace class.
VerdictReport suite_kernel(const Corpus& corpus, const SuiteOptions& opt = {});
// All six equivalence bundles agree on every enumerated congruence.
VerdictReport suite_bundles(const Corpus& corpus, const SuiteOptions& opt = {});
// Layered class structure of quotients by deeper levels (three clauses).
VerdictReport suite_rel(const Corpus& corpus, const SuiteOptions& opt = {});
// Class structure of the even/odd tails (four clauses).
VerdictReport suite_main(const Corpus& corpus, const SuiteOptions& opt = {});
// Generated-congruence restriction, relation restriction to idempotent
// classes, and the chained-operator inclusion with every prefix split.
VerdictReport suite_inclusion(const Corpus& corpus, const SuiteOptions& opt = {});
// The redundant closure routes inside the minimal operators agree.
VerdictReport suite_formulas(const Corpus& corpus, const SuiteOptions& opt = {});

const std::vector<std::string>& suite_names();
VerdictReport run_suite(const std::string& name, const Corpus& corpus,
                        const SuiteOptions& opt = {});

// One JSON object per line, keys sorted, elapsed time omitted: consecutive
// runs over the same corpus serialize byte-identically.
std::string to_json_line(const VerdictReport& report);
std::string to_json_lines(const std::vector<VerdictReport>& reports);

}  // namespace isg
