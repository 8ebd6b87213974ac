#pragma once

// Acronym identification, candidate filtering, and expansion extraction via
// the forward "ACR (expansion)" and backward "expansion (ACR)" patterns.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "acrox/preprocess.hpp"
#include "acrox/word_list.hpp"

namespace acrox::extract {

using preprocess::SentenceStream;

inline constexpr std::size_t kMaxAcronymLength = 10;
inline constexpr double kDefaultStopwordThreshold = 1.0 / 3.0;
inline constexpr std::string_view kContextPrefix = "(context)";

struct AcronymOccurrence {
  std::string surface;
  std::string canonical;
  std::size_t sentence_index = 0;
  std::size_t char_offset = 0;  // byte offset within the sentence

  bool operator==(const AcronymOccurrence&) const = default;
};

enum class ExclusionReason { kRoman, kChromosome, kGene, kTooLong, kDigitPrefixed };
enum class Method { kForward, kBackward };

std::string_view to_string(ExclusionReason reason);
std::string_view to_string(Method method);

struct Expanded {
  std::string expansion;
  Method method;
};
struct Contextual {
  std::string context;
};
struct Excluded {
  ExclusionReason reason;
};
using Resolution = std::variant<Expanded, Contextual, Excluded>;

// Leftmost-longest, non-overlapping matches of the identification pattern
// bounded by word boundaries.
std::vector<AcronymOccurrence> scan_acronyms(std::string_view sentence,
                                             std::size_t sentence_index = 0);

bool is_roman_numeral_1_to_30(std::string_view s);
bool is_chromosome_formula(std::string_view s);
bool is_gene_sequence(std::string_view s);

// Returns the exclusion that applies, checked in the order roman,
// chromosome, gene, too_long, digit_prefixed; nullopt means keep.
std::optional<Excluded> filter_candidate(const AcronymOccurrence& occ,
                                         std::string_view sentence);

// Both matchers return the phrase with whitespace runs collapsed to one space.
std::optional<std::string> match_forward(std::string_view sentence, std::string_view acronym);

// stopword tokens / all tokens <= threshold. Empty expansions fail.
bool stopword_ratio_ok(std::string_view expansion, const WordSet& stopwords,
                       double threshold = kDefaultStopwordThreshold);

// Phrase before "(acronym)" that starts with the acronym's first letter and
// contains its last letter (case-insensitive), built from ASCII letters,
// spaces and hyphens. The phrase is taken as far left as possible.
std::optional<std::string> match_backward(std::string_view sentence, std::string_view acronym);

// Shortens a backward expansion whose word count exceeds the acronym's
// length to its longest word suffix that starts with the acronym's first
// letter and fits within that length.
std::string refine_expansion(std::string_view acronym, std::string_view expansion);

// "(context) " + preceding sentence (if any) + " " + containing sentence.
std::string capture_context(const SentenceStream& stream, const AcronymOccurrence& occ);

struct ExpansionRecord {
  std::string text;
  Method method;

  bool operator==(const ExpansionRecord&) const = default;
};

struct TableEntry {
  std::string canonical;
  std::vector<AcronymOccurrence> occurrences;
  std::vector<ExpansionRecord> expansions;  // distinct texts, first-seen order
  std::optional<std::string> context;       // set only when expansions is empty

  Resolution resolution() const;
  bool operator==(const TableEntry&) const = default;
};

struct ExclusionRecord {
  AcronymOccurrence occurrence;
  ExclusionReason reason;

  bool operator==(const ExclusionRecord&) const = default;
};

// Entries keyed by canonical form, in order of first occurrence.
class AcronymTable {
 public:
  const std::vector<TableEntry>& entries() const { return entries_; }
  const std::vector<ExclusionRecord>& exclusions() const { return exclusions_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const TableEntry* find(std::string_view canonical) const;

  TableEntry& upsert(const std::string& canonical);
  void add_exclusion(ExclusionRecord record) { exclusions_.push_back(std::move(record)); }
  // Returns false when the text was already present for this entry.
  bool add_expansion(TableEntry& entry, std::string text, Method method);

  bool operator==(const AcronymTable& other) const {
    return entries_ == other.entries_ && exclusions_ == other.exclusions_;
  }

 private:
  std::vector<TableEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ExclusionRecord> exclusions_;
};

struct ExtractOptions {
  WordSet stopwords = default_stopwords();
  double stopword_threshold = kDefaultStopwordThreshold;
};

AcronymTable build_table(const SentenceStream& stream, const ExtractOptions& options = {});

}  // namespace acrox::extract
