#pragma once

// Content statistics and result summaries over run reports.

#include <string>
#include <utility>
#include <vector>

#include "acrox/extract.hpp"
#include "acrox/ingest.hpp"
#include "acrox/preprocess.hpp"
#include "acrox/report.hpp"
#include "acrox/word_list.hpp"

namespace acrox::analytics {

using report::ContentStats;
using report::ResultSummary;

// Characters are codepoints of the cleaned text. Words are whitespace
// tokens that are not stopwords. Acronym counts use the kept (non-excluded)
// occurrences in the table.
ContentStats content_stats(const ingest::CleanText& clean,
                           const preprocess::SentenceStream& stream,
                           const extract::AcronymTable& table, const WordSet& stopwords);

ResultSummary result_summary(const std::vector<report::Entry>& entries, report::Mode mode);
ResultSummary result_summary(const report::DocumentReport& doc);
ResultSummary corpus_summary(const std::vector<report::DocumentReport>& docs, report::Mode mode);

struct StatsRow {
  std::string domain;
  report::Mode mode = report::Mode::kRegex;
  std::size_t documents = 0;
  ResultSummary summary;
  double avg_character_count = 0;
  double avg_word_count = 0;
  double avg_sentence_count = 0;
  double avg_acronym_occurrence_count = 0;
  double avg_unique_acronym_count = 0;
};

// One row per (domain, mode), rows sorted by domain then mode name.
std::vector<StatsRow> aggregate(const std::vector<std::pair<std::string, report::RunReport>>& reports);

std::string to_csv(const std::vector<StatsRow>& rows);

}  // namespace acrox::analytics
