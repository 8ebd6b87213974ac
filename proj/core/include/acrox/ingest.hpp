#pragma once

// Page-delimited text intake: page parsing, running header/footer removal,
// ligature replacement, hyphenation repair and whitespace normalization.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acrox::ingest {

inline constexpr char kPageSeparator = '\f';

using Page = std::vector<std::string>;

struct RawDocument {
  std::string source_id;
  std::vector<Page> pages;  // never empty

  bool operator==(const RawDocument&) const = default;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// Normalized document text. Every non-empty page slice ends with '\n' so
// that page slices can be concatenated without gluing lines together.
struct CleanText {
  std::string text;
  std::vector<Span> page_spans;

  static CleanText from_pages(const std::vector<std::string>& pages);
  std::vector<std::string> pages() const;
  bool operator==(const CleanText&) const = default;
};

// Splits on form feeds, then on line breaks ("\r\n" is accepted). A trailing
// empty page left by a final form feed is dropped.
// Throws EmptyDocumentError when `raw` is empty.
RawDocument parse_pages(std::string_view raw, std::string source_id);

// Inverse of parse_pages for documents without a trailing empty page.
std::string serialize_pages(const RawDocument& doc);

// Replaces each run of decimal digits with one '#', used to compare running headers
// and footers that carry page numbers.
std::string digit_normalized(std::string_view line);

// Removes repeated first/last lines. A first (last) line goes when its
// digit-normalized form matches the first (last) line of at least half of
// the other pages. Repeats until stable so stacked header lines are taken
// off as well; single-page documents are returned unchanged.
RawDocument strip_headers_footers(RawDocument doc);

std::string replace_ligatures(std::string_view text);

// "exper-\niment" -> "experiment", "LC-\nMS" -> "LC-MS", other breaks inside
// a paragraph become one space. Blank lines separate paragraphs and survive.
std::string repair_hyphenation(std::string_view text);

// Tabs to spaces, collapse space runs, trim each line. Line breaks are kept.
std::string normalize_whitespace(std::string_view text);

// One page per RawDocument page: lines joined with '\n', each non-empty page
// terminated by '\n'. No other transformation.
CleanText to_clean_text(const RawDocument& doc);

// Rejoins a word hyphenated across a page break: when a page's last line
// ends in "<alnum>-" and the next page's first line starts with a lowercase
// letter, that line's first word moves up to replace the hyphen.
CleanText join_page_hyphenation(const CleanText& clean);

// Applies a text transform to each page slice independently.
template <typename Fn>
CleanText map_pages(const CleanText& clean, Fn&& fn) {
  std::vector<std::string> pages = clean.pages();
  for (auto& p : pages) p = fn(std::string_view(p));
  return CleanText::from_pages(pages);
}

}  // namespace acrox::ingest
