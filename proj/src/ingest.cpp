#include "sotacheck/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sotacheck/errors.hpp"

namespace sotacheck {

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool skippable(std::string_view line) {
  if (!line.empty() && line.front() == '#') return true;
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Walks LF-separated lines, reporting 1-based line numbers.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : text_(text) {}

  bool next(std::string_view& line, std::size_t& line_no) {
    if (pos_ >= text_.size()) return false;
    const auto nl = text_.find('\n', pos_);
    const auto end = (nl == std::string_view::npos) ? text_.size() : nl;
    line = strip_cr(text_.substr(pos_, end - pos_));
    pos_ = (nl == std::string_view::npos) ? text_.size() : nl + 1;
    line_no = ++count_;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t count_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = s.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string(what) + " is not an integer: '" +
                               std::string(tok) + "'");
  return v;
}

double parse_float(std::string_view tok, std::size_t line, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string(what) + " is not a number: '" +
                               std::string(tok) + "'");
  return v;
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct RunEntry {
  std::string doc;
  long long rank = 0;
  double score = 0.0;
  std::size_t line = 0;
};

RunFormat sniff_format(std::string_view text) {
  LineCursor cur(text);
  std::string_view line;
  std::size_t no = 0;
  while (cur.next(line, no)) {
    if (skippable(line)) continue;
    if (split_tabs(line).size() == 3) return RunFormat::MsMarcoTsv;
    if (split_ws(line).size() == 6) return RunFormat::Trec;
    throw ParseError(no, "cannot determine run format from first data line");
  }
  return RunFormat::Trec;  // empty input; the choice is irrelevant
}

// Drops (query, document) repeats beyond the first file occurrence.
void drop_duplicates(std::vector<RunEntry>& entries, const std::string& qid,
                     IngestDiagnostics& diag) {
  std::vector<std::size_t> idx(entries.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].doc != entries[b].doc) return entries[a].doc < entries[b].doc;
    return a < b;
  });
  std::vector<char> drop(entries.size(), 0);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (entries[idx[i]].doc != entries[idx[i - 1]].doc) continue;
    drop[idx[i]] = 1;
    ++diag.duplicate_lines_dropped;
    diag.malformed_lines.push_back(
        {entries[idx[i]].line,
         "duplicate (query, document) line dropped for query '" + qid + "'"});
  }
  std::vector<RunEntry> kept;
  kept.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!drop[i]) kept.push_back(std::move(entries[i]));
  entries = std::move(kept);
}

}  // namespace

void IngestDiagnostics::merge_from(const IngestDiagnostics& other) {
  queries_in_run_not_in_qrels += other.queries_in_run_not_in_qrels;
  queries_in_qrels_not_in_run += other.queries_in_qrels_not_in_run;
  duplicate_lines_dropped += other.duplicate_lines_dropped;
  malformed_lines.insert(malformed_lines.end(), other.malformed_lines.begin(),
                         other.malformed_lines.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool IngestDiagnostics::empty() const {
  return queries_in_run_not_in_qrels == 0 && queries_in_qrels_not_in_run == 0 &&
         duplicate_lines_dropped == 0 && malformed_lines.empty() &&
         warnings.empty();
}

Qrels parse_qrels(std::string_view text, RelevancePolicy policy,
                  IngestDiagnostics* diag) {
  Qrels out;
  IngestDiagnostics local;
  IngestDiagnostics& d = diag ? *diag : local;

  LineCursor cur(text);
  std::string_view line;
  std::size_t no = 0;
  while (cur.next(line, no)) {
    if (skippable(line)) continue;
    const auto cols = split_ws(line);
    if (cols.size() != 4)
      throw ParseError(no, "qrels line must have 4 columns, got " +
                               std::to_string(cols.size()));
    const long long grade = parse_int(cols[3], no, "relevance grade");
    if (grade <= 0) continue;
    auto& docs = out.judgments[std::string(cols[0])];
    if (!docs.insert(std::string(cols[2])).second) {
      ++d.duplicate_lines_dropped;
      d.malformed_lines.push_back({no, "duplicate qrels entry dropped"});
    }
  }

  for (const auto& [qid, docs] : out.judgments) {
    if (docs.size() <= 1) continue;
    if (policy == RelevancePolicy::Strict) throw MultiplicityError(qid);
    d.warnings.push_back("query '" + qid + "' has " +
                         std::to_string(docs.size()) +
                         " relevant documents; scoring uses the best-ranked one");
  }
  return out;
}

Qrels parse_qrels(std::istream& in, RelevancePolicy policy,
                  IngestDiagnostics* diag) {
  const std::string text = slurp(in);
  return parse_qrels(std::string_view(text), policy, diag);
}

Run parse_run(std::string_view text, RunFormat format, int k_max,
              std::string default_name, IngestDiagnostics* diag) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (format == RunFormat::Auto) format = sniff_format(text);
  const bool trec = format == RunFormat::Trec;

  Run out;
  out.name = std::move(default_name);
  IngestDiagnostics local;
  IngestDiagnostics& d = diag ? *diag : local;
  const std::size_t first_issue = d.malformed_lines.size();

  std::map<std::string, std::vector<RunEntry>, std::less<>> per_query;
  bool tag_taken = false;

  LineCursor cur(text);
  std::string_view line;
  std::size_t no = 0;
  while (cur.next(line, no)) {
    if (skippable(line)) continue;
    std::string_view qid, doc;
    long long rank = 0;
    double score = 0.0;
    if (trec) {
      const auto cols = split_ws(line);
      if (cols.size() != 6)
        throw ParseError(no, "run line must have 6 columns, got " +
                                 std::to_string(cols.size()));
      qid = cols[0];
      doc = cols[2];
      rank = parse_int(cols[3], no, "rank");
      score = parse_float(cols[4], no, "score");
      if (!tag_taken) {
        out.name = std::string(cols[5]);
        tag_taken = true;
      }
    } else {
      const auto cols = split_tabs(line);
      if (cols.size() != 3)
        throw ParseError(no, "run line must have 3 tab-separated columns, got " +
                                 std::to_string(cols.size()));
      if (cols[0].empty() || cols[1].empty() || cols[2].empty())
        throw ParseError(no, "empty column in run line");
      qid = cols[0];
      doc = cols[1];
      rank = parse_int(cols[2], no, "rank");
    }
    auto it = per_query.find(qid);
    if (it == per_query.end())
      it = per_query.emplace(std::string(qid), std::vector<RunEntry>{}).first;
    it->second.push_back({std::string(doc), rank, score, no});
  }

  for (auto& [qid, entries] : per_query) {
    drop_duplicates(entries, qid, d);
    std::stable_sort(entries.begin(), entries.end(),
                     [trec](const RunEntry& a, const RunEntry& b) {
                       if (a.rank != b.rank) return a.rank < b.rank;
                       if (!trec) return false;  // rank authoritative
                       if (a.score != b.score) return a.score > b.score;
                       return a.doc < b.doc;
                     });
    long long prev = 0;
    bool gap = false;
    for (const auto& e : entries) {
      if (e.rank > prev + 1) gap = true;
      prev = e.rank;
    }
    if (gap)
      d.warnings.push_back("query '" + qid + "': rank column has gaps");
    auto& list = out.rankings[qid];
    const auto keep = std::min(entries.size(), static_cast<std::size_t>(k_max));
    list.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) list.push_back(std::move(entries[i].doc));
  }
  std::sort(d.malformed_lines.begin() +
                static_cast<std::ptrdiff_t>(first_issue),
            d.malformed_lines.end(),
            [](const LineIssue& a, const LineIssue& b) { return a.line < b.line; });
  return out;
}

Run parse_run(std::istream& in, RunFormat format, int k_max,
              std::string default_name, IngestDiagnostics* diag) {
  const std::string text = slurp(in);
  return parse_run(std::string_view(text), format, k_max,
                   std::move(default_name), diag);
}

std::vector<std::string> align(const Qrels& qrels,
                               const std::vector<const Run*>& runs,
                               IngestDiagnostics* diag) {
  if (qrels.judgments.empty())
    throw std::invalid_argument("qrels is empty; no queries to evaluate");
  if (runs.empty()) throw std::invalid_argument("align requires at least one run");

  std::vector<std::string> universe;
  universe.reserve(qrels.judgments.size());
  for (const auto& [qid, docs] : qrels.judgments) universe.push_back(qid);

  if (diag) {
    for (const Run* run : runs) {
      for (const auto& [qid, list] : run->rankings)
        if (!qrels.judgments.count(qid)) ++diag->queries_in_run_not_in_qrels;
      for (const auto& qid : universe)
        if (!run->rankings.count(qid)) ++diag->queries_in_qrels_not_in_run;
    }
  }
  return universe;
}

}  // namespace sotacheck
