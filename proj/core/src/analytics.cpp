#include "acrox/analytics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "acrox/text.hpp"

namespace acrox::analytics {

ContentStats content_stats(const ingest::CleanText& clean,
                           const preprocess::SentenceStream& stream,
                           const extract::AcronymTable& table, const WordSet& stopwords) {
  ContentStats s;
  s.character_count = text::codepoint_count(clean.text);
  for (auto tok : text::split_whitespace(clean.text)) {
    const auto norm = normalize_token(tok);
    if (!norm.empty() && !stopwords.count(norm)) ++s.word_count;
  }
  s.sentence_count = stream.size();
  for (const auto& e : table.entries()) s.acronym_occurrence_count += e.occurrences.size();
  s.unique_acronym_count = table.size();
  return s;
}

namespace {

ResultSummary make_summary(report::Mode mode, std::size_t total, std::size_t found) {
  ResultSummary s;
  s.mode = mode;
  s.total_acronyms = total;
  s.expansions_found = found;
  s.empty = total == 0;
  s.percent_found = total == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(total);
  return s;
}

}  // namespace

ResultSummary result_summary(const std::vector<report::Entry>& entries, report::Mode mode) {
  const auto found = static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.resolved(); }));
  return make_summary(mode, entries.size(), found);
}

ResultSummary result_summary(const report::DocumentReport& doc) {
  return result_summary(doc.entries, doc.mode);
}

ResultSummary corpus_summary(const std::vector<report::DocumentReport>& docs, report::Mode mode) {
  std::size_t total = 0;
  std::size_t found = 0;
  for (const auto& d : docs) {
    const auto s = result_summary(d);
    total += s.total_acronyms;
    found += s.expansions_found;
  }
  return make_summary(mode, total, found);
}

std::vector<StatsRow> aggregate(const std::vector<std::pair<std::string, report::RunReport>>& reports) {
  struct Acc {
    std::vector<report::DocumentReport> docs;
  };
  std::map<std::pair<std::string, std::string>, Acc> groups;
  for (const auto& [domain, run] : reports)
    for (const auto& d : run.documents)
      groups[{domain, std::string(report::to_string(d.mode))}].docs.push_back(d);

  std::vector<StatsRow> rows;
  for (const auto& [key, acc] : groups) {
    StatsRow row;
    row.domain = key.first;
    row.mode = report::parse_mode(key.second);
    row.documents = acc.docs.size();
    row.summary = corpus_summary(acc.docs, row.mode);
    for (const auto& d : acc.docs) {
      row.avg_character_count += static_cast<double>(d.content_stats.character_count);
      row.avg_word_count += static_cast<double>(d.content_stats.word_count);
      row.avg_sentence_count += static_cast<double>(d.content_stats.sentence_count);
      row.avg_acronym_occurrence_count += static_cast<double>(d.content_stats.acronym_occurrence_count);
      row.avg_unique_acronym_count += static_cast<double>(d.content_stats.unique_acronym_count);
    }
    const auto n = static_cast<double>(row.documents);
    row.avg_character_count /= n;
    row.avg_word_count /= n;
    row.avg_sentence_count /= n;
    row.avg_acronym_occurrence_count /= n;
    row.avg_unique_acronym_count /= n;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream out;
  out << "domain,mode,documents,total_acronyms,expansions_found,percent_found,empty,"
         "avg_character_count,avg_word_count,avg_sentence_count,"
         "avg_acronym_occurrence_count,avg_unique_acronym_count\n";
  for (const auto& r : rows) {
    out << csv_field(r.domain) << ',' << report::to_string(r.mode) << ',' << r.documents << ','
        << r.summary.total_acronyms << ',' << r.summary.expansions_found << ','
        << fixed(r.summary.percent_found, 6) << ',' << (r.summary.empty ? "true" : "false") << ','
        << fixed(r.avg_character_count, 2) << ',' << fixed(r.avg_word_count, 2) << ','
        << fixed(r.avg_sentence_count, 2) << ',' << fixed(r.avg_acronym_occurrence_count, 2) << ','
        << fixed(r.avg_unique_acronym_count, 2) << '\n';
  }
  return out.str();
}

}  // namespace acrox::analytics
