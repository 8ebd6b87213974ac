#pragma once

// Per-document processing shared by all run modes.

#include <optional>
#include <string>
#include <string_view>

#include "acrox/extract.hpp"
#include "acrox/ingest.hpp"
#include "acrox/preprocess.hpp"

namespace acrox {

// Header/footer removal, ligature replacement and per-line whitespace
// cleanup. Line structure is kept for the region filters that follow.
ingest::CleanText ingest_stack(const ingest::RawDocument& doc);

// References, front matter, equation lines and uppercase headings are
// removed, then hyphenation is repaired (across page breaks too),
// whitespace normalized and blank lines squeezed.
ingest::CleanText preprocess_stack(const ingest::CleanText& clean);

// ingest_stack followed by preprocess_stack.
ingest::CleanText full_stack(const ingest::RawDocument& doc);

struct PipelineOptions {
  bool preprocess = true;
  extract::ExtractOptions extract;
  preprocess::AbbreviationGuard guard = preprocess::AbbreviationGuard::defaults();
  std::optional<WordSet> dictionary;  // spelling correction when set
};

struct DocumentProducts {
  std::string source_id;
  ingest::CleanText clean;
  preprocess::SentenceStream stream;
  extract::AcronymTable table;
};

// Throws EmptyDocumentError for empty input.
DocumentProducts process_document(std::string_view raw_text, std::string source_id,
                                  const PipelineOptions& options);

}  // namespace acrox
