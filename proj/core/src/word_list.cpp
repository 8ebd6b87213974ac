#include "acrox/word_list.hpp"

#include <fstream>

#include "acrox/errors.hpp"
#include "acrox/text.hpp"

namespace acrox {

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read word list: " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

WordSet load_word_set(const std::filesystem::path& path) {
  auto words = load_word_list(path);
  return {words.begin(), words.end()};
}

const std::vector<std::string>& default_stopword_list() {
  // English function words: articles, pronouns, auxiliaries, prepositions,
  // conjunctions and a few high-frequency adverbs.
  static const std::vector<std::string> kWords = {
      "a", "about", "above", "after", "again", "against", "all", "am", "an", "and",
      "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing",
      "down", "during", "each", "either", "few", "for", "from", "further", "had", "has",
      "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
      "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
      "may", "me", "might", "more", "most", "must", "my", "myself", "neither", "no",
      "nor", "not", "now", "of", "off", "on", "once", "only", "or", "other",
      "ought", "our", "ours", "ourselves", "out", "over", "own", "same", "shall", "she",
      "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those", "through", "to", "too",
      "under", "until", "up", "upon", "very", "via", "was", "we", "were", "what",
      "when", "where", "whether", "which", "while", "who", "whom", "whose", "why", "will",
      "with", "within", "without", "would", "yet", "you", "your", "yours", "yourself", "yourselves",
      "also", "among", "onto", "per", "since", "thus", "toward", "towards", "whereas", "whereby",
  };
  return kWords;
}

WordSet default_stopwords() {
  const auto& words = default_stopword_list();
  return {words.begin(), words.end()};
}

std::string normalize_token(std::string_view token) {
  auto keep = [](char c) { return text::is_alnum(c) || c == '\''; };
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && !keep(token[b])) ++b;
  while (e > b && !keep(token[e - 1])) --e;
  return text::to_lower(token.substr(b, e - b));
}

}  // namespace acrox
