#pragma once

// Region removal (references, front matter, equation lines, uppercase
// headings) and case-preserving sentence segmentation.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "acrox/ingest.hpp"
#include "acrox/word_list.hpp"

namespace acrox::preprocess {

using ingest::CleanText;
using ingest::Span;

struct Sentence {
  std::size_t index = 0;
  std::string text;
  Span span;  // offsets into the CleanText the stream was split from

  bool operator==(const Sentence&) const = default;
};

struct SentenceStream {
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
  bool operator==(const SentenceStream&) const = default;
};

using acrox::WordSet;

// True when `line` is a section heading for `word`: trimmed, compared
// case-insensitively, after dropping a leading section number ("3", "3.1.")
// or Roman numeral ("VII."). A trailing ':' or '.' is tolerated.
bool is_heading(std::string_view line, std::string_view word);

// Truncates the text at the last "References"/"Bibliography" heading.
CleanText strip_references(const CleanText& clean);

// Removes everything up to and including the "Introduction" heading when an
// "Abstract" heading precedes it on the first page.
CleanText strip_front_matter(const CleanText& clean);

inline constexpr double kMathSymbolThreshold = 0.30;

// Share of non-space characters outside ASCII letters, digits and . , ; : ( ) - ' "
double symbol_fraction(std::string_view line);

// Lines whose symbol fraction exceeds the threshold are emptied. Their line
// breaks stay so paragraph structure is kept.
CleanText strip_math_lines(const CleanText& clean,
                           double threshold = kMathSymbolThreshold);

bool is_uppercase_heading(std::string_view line);
CleanText strip_uppercase_headings(const CleanText& clean);

// Tokens that end with a period without ending a sentence. Multi-word
// entries such as "et al." are matched against the preceding tokens.
struct AbbreviationGuard {
  std::vector<std::string> entries;

  static AbbreviationGuard defaults();
  bool suppresses_break(std::string_view text, std::size_t period_pos) const;
};

SentenceStream split_sentences(const CleanText& clean,
                               const AbbreviationGuard& guard = AbbreviationGuard::defaults());

// Dictionary words one edit away from `word`: a deletion, insertion,
// substitution or swap of two adjacent letters.
std::vector<std::string> edit_distance_one_neighbors(std::string_view word,
                                                     const WordSet& dictionary);

// Replaces an all-lowercase token missing from `dictionary` when it has
// exactly one dictionary neighbour at edit distance 1. Acronym-shaped tokens
// are never touched. Spans keep pointing at the uncorrected text.
SentenceStream correct_spelling(const SentenceStream& stream, const WordSet& dictionary);

}  // namespace acrox::preprocess
