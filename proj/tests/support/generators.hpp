#pragma once

// Random inputs for property and acceptance tests.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace acrox::testing {

using Rng = std::mt19937_64;

// Letters (upper-case heavy), digits, hyphens and spaces.
std::string random_scan_sentence(Rng& rng, std::size_t max_len = 120);

struct GeneratedDocument {
  std::string raw;                    // form-feed separated pages
  std::vector<std::string> headers;   // planted running header/footer lines
};

// Multi-page paper-like text: running header and "Page N" footer, body
// lines of lowercase words with some acronyms and ligatures, hyphenated
// line and page breaks, blank lines, equation lines, uppercase headings, and
// optionally an Abstract/Introduction block and one References section.
GeneratedDocument random_document(Rng& rng);

struct PlantedPair {
  std::string acronym;
  std::string expansion;
  bool forward = false;
  std::size_t document = 0;
};

struct SyntheticCorpus {
  std::vector<std::string> documents;
  std::vector<PlantedPair> pairs;
};

// Plants `pairs` acronym definitions, half "ACR (expansion)" and half
// "expansion (ACR)", into filler prose spread over `documents` paginated
// documents. Acronyms are the initials of their expansions and are unique.
SyntheticCorpus synthetic_corpus(Rng& rng, std::size_t pairs, std::size_t documents);

// (key, value) entries with distinct keys.
std::vector<std::pair<std::string, std::string>> random_entries(Rng& rng, std::size_t n);

}  // namespace acrox::testing
