#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace acrox {

using WordSet = std::unordered_set<std::string>;

// One entry per line; surrounding whitespace and blank lines are skipped.
// Lines starting with '#' are comments. Throws acrox::Error when unreadable.
std::vector<std::string> load_word_list(const std::filesystem::path& path);
WordSet load_word_set(const std::filesystem::path& path);

// Built-in English function-word list (also shipped as data/stopwords_en.txt).
const std::vector<std::string>& default_stopword_list();
WordSet default_stopwords();

// Lowercases and strips leading/trailing characters that are neither ASCII
// alphanumerics nor apostrophes: "(The," -> "the".
std::string normalize_token(std::string_view token);

}  // namespace acrox
