#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "acrox/extract.hpp"
#include "acrox/ingest.hpp"
#include "acrox/llm_resolve.hpp"
#include "acrox/pipeline.hpp"
#include "acrox/preprocess.hpp"
#include "acrox/text.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace acrox;
using acrox::testing::Rng;

namespace {

std::size_t word_count(std::string_view s) { return text::split_whitespace(s).size(); }

// Optimal string alignment distance, computed by full dynamic programming.
std::size_t osa_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
    }
  }
  return d[a.size()][b.size()];
}

std::string random_word(Rng& rng, std::size_t max_len, const std::string& alphabet) {
  const auto len = 1 + rng() % max_len;
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
  return w;
}

preprocess::SentenceStream stream_of(const std::vector<std::string>& sentences) {
  preprocess::SentenceStream s;
  for (std::size_t i = 0; i < sentences.size(); ++i) s.sentences.push_back({i, sentences[i], {}});
  return s;
}

}  // namespace

TEST(Property, ScannerAgreesWithBruteForce) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    const auto s = acrox::testing::random_scan_sentence(rng);
    const auto got = extract::scan_acronyms(s, 7);
    const auto want = acrox::testing::brute_force_scan(s);
    ASSERT_EQ(got.size(), want.size()) << s;
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_EQ(got[k].char_offset, want[k].first) << s;
      EXPECT_EQ(got[k].surface, want[k].second) << s;
      EXPECT_EQ(got[k].sentence_index, 7u);
    }
  }
}

TEST(Property, RefineKeepsASuffix) {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    std::string acronym = random_word(rng, 5, "ABCD");
    if (acronym.size() < 2) acronym += "A";
    std::string expansion;
    for (std::size_t k = 0, n = 1 + rng() % 9; k < n; ++k)
      expansion += (k ? " " : "") + random_word(rng, 6, "abcd");
    const auto out = extract::refine_expansion(acronym, expansion);
    ASSERT_FALSE(out.empty());
    EXPECT_TRUE(expansion.size() >= out.size() &&
                expansion.compare(expansion.size() - out.size(), out.size(), out) == 0)
        << acronym << " / " << expansion;
    EXPECT_LE(word_count(out), std::max(word_count(expansion), acronym.size()));
    if (out != expansion) {
      EXPECT_LE(word_count(out), acronym.size());
      EXPECT_EQ(text::to_lower(out[0]), text::to_lower(acronym[0]));
    }
  }
}

TEST(Property, BackwardMatchShape) {
  Rng rng(13);
  for (int i = 0; i < 3000; ++i) {
    std::string acronym = random_word(rng, 4, "ABCE");
    if (acronym.size() < 2) acronym += "B";
    std::string sentence;
    for (std::size_t k = 0, n = rng() % 8; k < n; ++k) sentence += random_word(rng, 6, "abce- ") + " ";
    sentence += "(" + acronym + ") tail.";
    const auto m = extract::match_backward(sentence, acronym);
    if (!m) continue;
    ASSERT_FALSE(m->empty());
    EXPECT_EQ(text::to_lower((*m)[0]), text::to_lower(acronym[0])) << sentence;
    EXPECT_NE(text::to_lower(*m).find(text::to_lower(acronym.back())), std::string::npos) << sentence;
    EXPECT_EQ(m->find_first_of("()"), std::string::npos);
  }
}

TEST(Property, TableInvariantsOnSyntheticText) {
  Rng rng(14);
  const auto corpus = acrox::testing::synthetic_corpus(rng, 120, 4);
  PipelineOptions opts;
  for (const auto& doc : corpus.documents) {
    const auto a = process_document(doc, "d", opts);
    const auto b = process_document(doc, "d", opts);
    EXPECT_EQ(a.table, b.table);
    for (const auto& e : a.table.entries()) {
      EXPECT_FALSE(!e.expansions.empty() && e.context.has_value()) << e.canonical;
      EXPECT_TRUE(!e.expansions.empty() || e.context.has_value()) << e.canonical;
      for (const auto& x : e.expansions) EXPECT_EQ(x.text.find_first_of("()"), std::string::npos);
      if (e.context) EXPECT_EQ(e.context->rfind("(context) ", 0), 0u);
    }
  }
}

TEST(Property, SentencesCoverText) {
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const auto g = acrox::testing::random_document(rng);
    const auto clean = full_stack(ingest::parse_pages(g.raw, "g"));
    const auto stream = preprocess::split_sentences(clean);
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < stream.size(); ++k) {
      const auto& s = stream.sentences[k];
      EXPECT_EQ(s.index, k);
      ASSERT_GE(s.span.begin, cursor);
      for (std::size_t p = cursor; p < s.span.begin; ++p) EXPECT_TRUE(text::is_space(clean.text[p]));
      EXPECT_EQ(clean.text.substr(s.span.begin, s.span.size()), s.text);
      EXPECT_FALSE(s.text.empty());
      cursor = s.span.end;
    }
    for (std::size_t p = cursor; p < clean.text.size(); ++p) EXPECT_TRUE(text::is_space(clean.text[p]));
  }
}

TEST(Property, NeighborsMatchDistanceOracle) {
  Rng rng(16);
  WordSet dict;
  for (int i = 0; i < 400; ++i) dict.insert(random_word(rng, 5, "abcde"));
  for (int i = 0; i < 400; ++i) {
    const auto w = random_word(rng, 5, "abcde");
    auto got = preprocess::edit_distance_one_neighbors(w, dict);
    std::sort(got.begin(), got.end());
    std::vector<std::string> want;
    for (const auto& d : dict)
      if (osa_distance(w, d) == 1) want.push_back(d);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << w;
  }
}

TEST(Property, SpellingNeverTouchesAcronyms) {
  Rng rng(17);
  WordSet dict;
  for (int i = 0; i < 300; ++i) dict.insert(random_word(rng, 4, "abcd"));
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> words;
    for (std::size_t k = 0, n = 1 + rng() % 10; k < n; ++k)
      words.push_back(rng() % 3 == 0 ? random_word(rng, 4, "ABCD") + "D" : random_word(rng, 4, "abcd"));
    const auto stream = stream_of({text::join(words, " ")});
    const auto out = preprocess::correct_spelling(stream, dict);
    const auto after = text::split_whitespace(out.sentences[0].text);
    ASSERT_EQ(after.size(), words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (!extract::scan_acronyms(words[k]).empty()) EXPECT_EQ(after[k], words[k]);
      if (after[k] != words[k]) {
        EXPECT_EQ(dict.count(words[k]), 0u);
        EXPECT_EQ(dict.count(std::string(after[k])), 1u);
      }
    }
  }
}

TEST(Property, LigatureReplacementNeverShrinks) {
  Rng rng(18);
  const std::vector<std::string> pieces = {"a", " ", "\xEF\xAC\x80", "\xEF\xAC\x81", "\xEF\xAC\x82",
                                           "\xEF\xAC\x83", "\xEF\xAC\x84", "\xC3\xA9", "-"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (std::size_t k = 0, n = rng() % 30; k < n; ++k) s += pieces[rng() % pieces.size()];
    const auto out = ingest::replace_ligatures(s);
    EXPECT_GE(text::codepoint_count(out), text::codepoint_count(s));
    EXPECT_EQ(out.find("\xEF\xAC"), std::string::npos);
    EXPECT_EQ(ingest::replace_ligatures(out), out);
  }
}

TEST(Property, ChunksPartitionEntries) {
  Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto entries = acrox::testing::random_entries(rng, rng() % 80);
    const std::size_t k = 1 + rng() % llm::kMaxChunkSize;
    const auto chunks = llm::chunk_entries(entries, k);
    std::vector<llm::Entry> flat;
    for (const auto& c : chunks) {
      EXPECT_GE(c.entries.size(), 1u);
      EXPECT_LE(c.entries.size(), k);
      EXPECT_EQ(llm::PromptChunk::parse_serialized(c.serialized), c.entries);
      flat.insert(flat.end(), c.entries.begin(), c.entries.end());
    }
    EXPECT_EQ(flat, entries);
  }
}

TEST(Property, ReplyKeysAreRequestKeys) {
  Rng rng(20);
  for (int i = 0; i < 300; ++i) {
    const auto request = acrox::testing::random_entries(rng, 1 + rng() % 10);
    std::vector<std::string> keys;
    for (const auto& [k, v] : request) keys.push_back(k);
    auto reply_entries = acrox::testing::random_entries(rng, rng() % 12);
    for (auto& [k, v] : reply_entries)
      if (rng() % 2) k = keys[rng() % keys.size()];
    std::sort(reply_entries.begin(), reply_entries.end());
    reply_entries.erase(std::unique(reply_entries.begin(), reply_entries.end(),
                                    [](const auto& a, const auto& b) { return a.first == b.first; }),
                        reply_entries.end());
    const auto reply = llm::PromptChunk::from_entries(reply_entries).serialized;
    const auto parsed = llm::parse_reply(reply, &keys);
    std::set<std::string> seen;
    for (const auto& [k, v] : parsed.resolved) {
      EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end());
      seen.insert(k);
    }
    for (const auto& k : parsed.unresolved) {
      EXPECT_EQ(seen.count(k), 0u);
      seen.insert(k);
    }
    EXPECT_EQ(seen.size(), std::set<std::string>(keys.begin(), keys.end()).size());
  }
}
