#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sotacheck {

// How to treat queries that carry more than one relevant document.
// Strict rejects them; FirstRelevant keeps them all and later scoring uses
// the best-ranked relevant document.
enum class RelevancePolicy { Strict, FirstRelevant };

// Run file layouts. Auto sniffs the first data line: 3 tab-separated
// columns selects MsMarcoTsv, 6 whitespace-separated columns selects Trec.
enum class RunFormat { Trec, MsMarcoTsv, Auto };

// Relevance judgments: query id -> relevant document ids (grade > 0 only).
struct Qrels {
  std::map<std::string, std::set<std::string>> judgments;

  bool operator==(const Qrels&) const = default;
};

// One system's ranked lists. List position is the ordinal rank, starting
// at 1; lists are duplicate-free and at most k_max long.
struct Run {
  std::string name;
  std::map<std::string, std::vector<std::string>> rankings;

  bool operator==(const Run&) const = default;
};

struct LineIssue {
  std::size_t line = 0;
  std::string reason;

  bool operator==(const LineIssue&) const = default;
};

// Non-fatal observations collected while parsing and aligning inputs.
// Hard failures (malformed lines, strict-policy violations) throw
// ParseError / MultiplicityError instead.
struct IngestDiagnostics {
  std::size_t queries_in_run_not_in_qrels = 0;
  std::size_t queries_in_qrels_not_in_run = 0;
  std::size_t duplicate_lines_dropped = 0;
  std::vector<LineIssue> malformed_lines;  // recovered line-level anomalies
  std::vector<std::string> warnings;

  void merge_from(const IngestDiagnostics& other);
  bool empty() const;

  bool operator==(const IngestDiagnostics&) const = default;
};

// Qrels format: `<qid> 0 <docid> <grade:int>` (whitespace separated).
// Lines with grade <= 0 are skipped. Comment lines starting with '#' and
// blank lines are ignored; both LF and CRLF are accepted.
Qrels parse_qrels(std::string_view text, RelevancePolicy policy,
                  IngestDiagnostics* diag = nullptr);
Qrels parse_qrels(std::istream& in, RelevancePolicy policy,
                  IngestDiagnostics* diag = nullptr);

// TREC format: `<qid> Q0 <docid> <rank:int> <score:float> <tag>`; documents
// are ordered by ascending rank, ties broken by descending score then
// lexicographic doc id, and the tag of the first line names the run.
// MS MARCO format: `<qid>\t<docid>\t<rank:int>`; the rank column alone is
// authoritative. In both formats duplicate (query, document) lines beyond
// the first are dropped with a diagnostic, rank gaps produce a warning,
// and lists are truncated to k_max entries.
Run parse_run(std::string_view text, RunFormat format, int k_max,
              std::string default_name = {}, IngestDiagnostics* diag = nullptr);
Run parse_run(std::istream& in, RunFormat format, int k_max,
              std::string default_name = {}, IngestDiagnostics* diag = nullptr);

// Shared query universe for a comparison: every qrels query, sorted
// lexicographically. Run queries absent from the qrels are flagged; qrels
// queries absent from a run stay in the universe (the run retrieves
// nothing for them). Throws std::invalid_argument on empty qrels.
std::vector<std::string> align(const Qrels& qrels,
                               const std::vector<const Run*>& runs,
                               IngestDiagnostics* diag = nullptr);

}  // namespace sotacheck
