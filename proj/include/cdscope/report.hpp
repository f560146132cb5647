#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdscope/analysis.hpp"
#include "cdscope/expr.hpp"

namespace cdscope {

using ordered_json = nlohmann::ordered_json;

/// Display name of a lattice member: canonical structure names for
/// recognized small orders (C2, K4, C4, S3, D8, ...), the group's own name
/// for the top, else "H{index}:o{order}".
std::string display_name(const FiniteGroup& g, const SubgroupLattice& l, int i);

/// Full analysis document. Key order is fixed and all quantities are exact
/// integers, so the serialization is byte-stable for a given input.
ordered_json analysis_to_json(const Analysis& a);
std::string analysis_to_table(const Analysis& a);

enum class Annotate { Measure, Fiber };

/// Hasse diagram as a DOT digraph: one node per subgroup labelled
/// "name|order|m", one edge per cover, fiber classes as fill colors when
/// requested. Node order follows lattice indices.
std::string lattice_to_dot(const Analysis& a, Annotate annotate);
ordered_json lattice_to_json(const Analysis& a, Annotate annotate);

/// A corpus: group expressions plus optional generated family ranges.
/// File format: UTF-8, one expression per line, '#' starts a comment, and
/// the directive "@families N" expands to all named families of order <= N.
struct CorpusSpec {
  struct Entry {
    std::string text;
    int line = 0;
  };
  std::vector<Entry> entries;
};

CorpusSpec load_corpus_file(const std::string& path, const Limits& limits = {});
CorpusSpec parse_corpus(std::string_view content, const Limits& limits = {});
CorpusSpec default_corpus();

const std::vector<std::string>& theorem_ids();

struct TheoremOutcome {
  std::string id;
  bool pass = false;
  bool applicable = true;  // e.g. Cheng on a non-p-group is vacuous
  std::string detail;
};

/// Run one named verifier against an analyzed group. `expr` supplies the
/// factor structure for the product-compatibility check.
TheoremOutcome run_theorem(const std::string& id, const Analysis& a,
                           const GroupExpr* expr, const Limits& limits);

/// Per-entry corpus outcome; `error` is set when the group could not be
/// built (and then no outcomes exist).
struct CorpusEntryResult {
  std::string expr;
  std::string error;
  int error_exit = 0;  // 2 input, 3 resource
  std::string group_name;
  int order = 0;
  std::vector<TheoremOutcome> outcomes;
};

struct CorpusRunResult {
  std::vector<CorpusEntryResult> entries;
  int exit_code = 0;  // worst of all entries: 3 > 2 > 1 > 0
};

/// Run every verifier over every corpus entry across `jobs` workers.
/// Results are merged in corpus order, so the aggregate is identical for
/// any job count.
CorpusRunResult run_corpus(const CorpusSpec& spec, int jobs,
                           const Limits& limits = {});
ordered_json corpus_to_json(const CorpusRunResult& r);

/// Run one verifier over a corpus, printing one PASS/FAIL line per group
/// and a tally. Returns the process exit code.
int verify_over_corpus(const std::string& theorem_id, const CorpusSpec& spec,
                       const Limits& limits, std::ostream& out);

}  // namespace cdscope
