#include <gtest/gtest.h>

#include "acrox/preprocess.hpp"

using namespace acrox;
using namespace acrox::preprocess;

namespace {

CleanText one_page(const std::string& text) { return CleanText::from_pages({text}); }

std::vector<std::string> texts(const SentenceStream& s) {
  std::vector<std::string> out;
  for (const auto& x : s.sentences) out.push_back(x.text);
  return out;
}

}  // namespace

TEST(Headings, Matching) {
  EXPECT_TRUE(is_heading("REFERENCES", "References"));
  EXPECT_TRUE(is_heading("  VII. References ", "References"));
  EXPECT_TRUE(is_heading("6 Bibliography", "Bibliography"));
  EXPECT_TRUE(is_heading("3.1. References:", "References"));
  EXPECT_FALSE(is_heading("References to prior work", "References"));
  EXPECT_FALSE(is_heading("Preferences", "References"));
}

TEST(StripReferences, TruncatesAtHeading) {
  EXPECT_EQ(strip_references(one_page("body text\nREFERENCES\n[1] Smith...\n")).text, "body text\n");
  EXPECT_EQ(strip_references(one_page("body text\nVII. References\n[1] ...\n")).text, "body text\n");
  const auto plain = one_page("body text without any such heading\n");
  EXPECT_EQ(strip_references(plain), plain);
}

TEST(StripReferences, LaterPagesBecomeEmpty) {
  const auto out = strip_references(CleanText::from_pages({"a\nReferences\nr1\n", "r2\n"}));
  EXPECT_EQ(out.text, "a\n");
  EXPECT_EQ(out.pages(), (std::vector<std::string>{"a\n", ""}));
}

TEST(StripFrontMatter, RemovesThroughIntroduction) {
  EXPECT_EQ(strip_front_matter(one_page("Title\nAbstract\nsummary\n1. Introduction\nBody\n")).text, "Body\n");
  const auto no_abstract = one_page("Title\n1. Introduction\nBody\n");
  EXPECT_EQ(strip_front_matter(no_abstract), no_abstract);
  const auto late = CleanText::from_pages({"p1\n", "p2\n", "Abstract\nx\nIntroduction\nBody\n"});
  EXPECT_EQ(strip_front_matter(late), late);
}

TEST(MathLines, SymbolFraction) {
  // Character-class count: 9 of the 12 non-space characters are symbols.
  EXPECT_NEAR(symbol_fraction("\xE2\x88\x91\xE1\xB5\xA2 \xCE\xB1\xE1\xB5\xA2 x\xC2\xB2 = "
                              "\xE2\x88\x82" "f/\xE2\x88\x82x"),
              0.75, 1e-12);
  EXPECT_EQ(symbol_fraction("We use TCP for transport."), 0.0);
}

TEST(MathLines, DropsEquationsKeepsProse) {
  const auto out = strip_math_lines(one_page(
      "We use TCP for transport.\n\xE2\x88\x91\xE1\xB5\xA2 \xCE\xB1\xE1\xB5\xA2 x\xC2\xB2 = "
      "\xE2\x88\x82" "f/\xE2\x88\x82x\n\nnext\n"));
  EXPECT_EQ(out.text, "We use TCP for transport.\n\n\nnext\n");
}

TEST(UppercaseHeadings, Rules) {
  EXPECT_TRUE(is_uppercase_heading("RESULTS AND DISCUSSION"));
  EXPECT_FALSE(is_uppercase_heading("DNA"));
  EXPECT_FALSE(is_uppercase_heading("THE END."));
  EXPECT_TRUE(is_uppercase_heading("2. RELATED WORK"));
  EXPECT_FALSE(is_uppercase_heading("Results And Discussion"));
  EXPECT_EQ(strip_uppercase_headings(one_page("RESULTS AND DISCUSSION\nDNA\nTHE END.\n")).text,
            "\nDNA\nTHE END.\n");
}

TEST(Strip, OperationsIdempotentAndDeleteOnly) {
  const auto in = CleanText::from_pages(
      {"Title\nAbstract\nx\nIntroduction\nMETHODS USED\nwe \xE2\x88\x91\xE2\x88\x91\xE2\x88\x91\n", "Body\nReferences\n[1]\n"});
  for (auto fn : {+[](const CleanText& c) { return strip_references(c); },
                  +[](const CleanText& c) { return strip_front_matter(c); },
                  +[](const CleanText& c) { return strip_math_lines(c); },
                  +[](const CleanText& c) { return strip_uppercase_headings(c); }}) {
    const auto once = fn(in);
    EXPECT_EQ(fn(once), once);
    EXPECT_LE(once.text.size(), in.text.size());
  }
}

TEST(SplitSentences, Basics) {
  EXPECT_EQ(texts(split_sentences(one_page("BERT is new. It works."))),
            (std::vector<std::string>{"BERT is new.", "It works."}));
  EXPECT_EQ(texts(split_sentences(one_page("See Fig. 3 for details."))),
            (std::vector<std::string>{"See Fig. 3 for details."}));
  EXPECT_TRUE(split_sentences(one_page("")).empty());
}

TEST(SplitSentences, Guards) {
  EXPECT_EQ(split_sentences(one_page("Work by J. Smith et al. Shows gains.")).size(), 1u);
  EXPECT_EQ(split_sentences(one_page("Made in the U.S. Today it ships.")).size(), 1u);
  EXPECT_EQ(split_sentences(one_page("Use tools, e.g. Python. Then test!")).size(), 2u);
  EXPECT_EQ(split_sentences(one_page("It rose. then fell.")).size(), 1u);
  EXPECT_EQ(texts(split_sentences(one_page("Is it? Yes! Done."))),
            (std::vector<std::string>{"Is it?", "Yes!", "Done."}));
}

TEST(SplitSentences, CustomGuardList) {
  AbbreviationGuard guard{{"approx."}};
  EXPECT_EQ(split_sentences(one_page("It is approx. Ten units."), guard).size(), 1u);
  EXPECT_EQ(split_sentences(one_page("See Fig. Two shows it."), guard).size(), 2u);
}

TEST(SplitSentences, SpansIndexesAndCase) {
  const auto clean = one_page("First line\ncontinues here. Second  one.\n\nThird.");
  const auto s = split_sentences(clean);
  ASSERT_EQ(s.size(), 3u);
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.sentences[i].index, i);
    EXPECT_GE(s.sentences[i].span.begin, prev_end);
    prev_end = s.sentences[i].span.end;
    EXPECT_EQ(clean.text.substr(s.sentences[i].span.begin, s.sentences[i].span.size()),
              s.sentences[i].text);
  }
  EXPECT_EQ(s.sentences[0].text, "First line\ncontinues here.");
}

TEST(Spelling, Neighbors) {
  const WordSet dict{"experiment", "the", "ten"};
  EXPECT_EQ(edit_distance_one_neighbors("experimentt", dict), (std::vector<std::string>{"experiment"}));
  EXPECT_EQ(edit_distance_one_neighbors("teh", dict), (std::vector<std::string>{"ten", "the"}));
  EXPECT_TRUE(edit_distance_one_neighbors("xyz", dict).empty());
}

TEST(Spelling, CorrectsOnlyUnambiguousLowercaseTokens) {
  const WordSet dict{"experiment", "the", "ten", "was", "run", "and"};
  const auto s = split_sentences(one_page("The experimentt was run. LPARs and teh ABCs."));
  const auto out = correct_spelling(s, dict);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.sentences[0].text, "The experiment was run.");
  EXPECT_EQ(out.sentences[1].text, "LPARs and teh ABCs.");
  EXPECT_EQ(out.sentences[0].span, s.sentences[0].span);
}
