#pragma once

// Run report model and its JSON form (schema version "1").

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acrox::report {

inline constexpr std::string_view kSchemaVersion = "1";

enum class Mode { kRegex, kRegexPre, kLlm, kLlmPre, kCombined };

std::string_view to_string(Mode mode);
// Throws acrox::Error for unknown names.
Mode parse_mode(std::string_view name);
bool uses_llm(Mode mode);
bool uses_preprocessing(Mode mode);

enum class ExpansionMethod { kRegexForward, kRegexBackward, kLlm };
std::string_view to_string(ExpansionMethod method);

struct Expansion {
  std::string text;
  ExpansionMethod method;
  bool operator==(const Expansion&) const = default;
};

struct Entry {
  std::string canonical;
  std::vector<std::string> surfaces;  // distinct, first-seen order
  std::size_t occurrence_count = 0;
  std::vector<Expansion> expansions;
  std::optional<std::string> selected;  // adopted expansion
  std::optional<std::string> context;   // only while unresolved

  bool resolved() const { return !expansions.empty(); }
  bool operator==(const Entry&) const = default;
};

struct Exclusion {
  std::string surface;
  std::string canonical;
  std::string reason;
  std::size_t sentence_index = 0;
  bool operator==(const Exclusion&) const = default;
};

struct ContentStats {
  std::size_t character_count = 0;
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;
  std::size_t acronym_occurrence_count = 0;
  std::size_t unique_acronym_count = 0;
  bool operator==(const ContentStats&) const = default;
};

struct ResultSummary {
  Mode mode = Mode::kRegex;
  std::size_t total_acronyms = 0;
  std::size_t expansions_found = 0;
  double percent_found = 0.0;  // fraction in [0, 1]
  bool empty = true;
  bool operator==(const ResultSummary&) const = default;
};

struct DocumentReport {
  std::string source_id;
  Mode mode = Mode::kRegex;
  std::vector<Entry> entries;
  std::vector<Exclusion> exclusions;
  ContentStats content_stats;
  ResultSummary summary;
  std::vector<std::string> warnings;
  bool operator==(const DocumentReport&) const = default;
};

struct RunReport {
  Mode mode = Mode::kRegex;
  std::vector<DocumentReport> documents;
  ResultSummary summary;
  bool operator==(const RunReport&) const = default;
};

// Deterministic key order, 2-space indent, trailing newline.
std::string to_json(const RunReport& report);
// Throws acrox::Error on malformed or wrong-version input.
RunReport parse_json(std::string_view json);

// Consistency problems; empty when the report is internally valid.
std::vector<std::string> validate(const RunReport& report);

// Writes to a sibling temporary file, then renames over `path`.
// Throws acrox::Error when the file cannot be written.
void write_report(const RunReport& report, const std::filesystem::path& path);

}  // namespace acrox::report
