#include "acrox/pipeline.hpp"

#include <vector>

#include "acrox/text.hpp"

namespace acrox {

namespace {

// Drops blank lines at the page edges and squeezes runs of blank lines to one.
std::string tidy_blank_lines(std::string_view page) {
  std::vector<std::string> kept;
  bool blank_pending = false;
  for (auto line : text::split_lines(page)) {
    if (line.empty()) {
      blank_pending = !kept.empty();
      continue;
    }
    if (blank_pending) kept.emplace_back();
    blank_pending = false;
    kept.emplace_back(line);
  }
  return text::join(kept, "\n");
}

}  // namespace

ingest::CleanText ingest_stack(const ingest::RawDocument& doc) {
  auto clean = ingest::to_clean_text(ingest::strip_headers_footers(doc));
  return ingest::map_pages(clean, [](std::string_view page) {
    return ingest::normalize_whitespace(ingest::replace_ligatures(page));
  });
}

ingest::CleanText preprocess_stack(const ingest::CleanText& clean) {
  auto out = preprocess::strip_references(clean);
  out = preprocess::strip_front_matter(out);
  out = preprocess::strip_math_lines(out);
  out = preprocess::strip_uppercase_headings(out);
  out = ingest::join_page_hyphenation(out);
  return ingest::map_pages(out, [](std::string_view page) {
    return tidy_blank_lines(ingest::normalize_whitespace(ingest::repair_hyphenation(page)));
  });
}

ingest::CleanText full_stack(const ingest::RawDocument& doc) {
  return preprocess_stack(ingest_stack(doc));
}

DocumentProducts process_document(std::string_view raw_text, std::string source_id,
                                  const PipelineOptions& options) {
  DocumentProducts out;
  const auto doc = ingest::parse_pages(raw_text, source_id);
  out.source_id = std::move(source_id);
  out.clean = options.preprocess ? full_stack(doc) : ingest::to_clean_text(doc);
  out.stream = preprocess::split_sentences(out.clean, options.guard);
  if (options.dictionary) out.stream = preprocess::correct_spelling(out.stream, *options.dictionary);
  out.table = extract::build_table(out.stream, options.extract);
  return out;
}

}  // namespace acrox
