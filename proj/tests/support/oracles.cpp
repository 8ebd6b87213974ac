#include "support/oracles.hpp"

#include <cctype>
#include <sstream>

namespace acrox::testing {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool boundary(std::string_view s, std::size_t pos) {
  const bool before = pos > 0 && word_char(s[pos - 1]);
  const bool after = pos < s.size() && word_char(s[pos]);
  return before != after;
}

bool upper(char c) { return c >= 'A' && c <= 'Z'; }
bool letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool shape_matches(std::string_view t) {
  // Try both readings of a trailing 's'.
  auto body_ok = [](std::string_view b) {
    if (b.size() < 2 || !upper(b.front()) || !upper(b.back())) return false;
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
      if (!letter(b[i]) && b[i] != '-') return false;
    return true;
  };
  if (body_ok(t)) return true;
  return t.size() > 2 && t.back() == 's' && body_ok(t.substr(0, t.size() - 1));
}

}  // namespace

std::vector<std::pair<std::size_t, std::string>> brute_force_scan(std::string_view s) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t best = 0;
    if (boundary(s, i)) {
      for (std::size_t j = i + 2; j <= s.size(); ++j)
        if (boundary(s, j) && shape_matches(s.substr(i, j - i))) best = j;
    }
    if (best) {
      out.emplace_back(i, std::string(s.substr(i, best - i)));
      i = best;
    } else {
      ++i;
    }
  }
  return out;
}

bool oracle_stopword_ok(std::string_view expansion, const std::set<std::string>& stopwords,
                        double threshold) {
  std::istringstream in{std::string(expansion)};
  std::string tok;
  int total = 0;
  int hits = 0;
  while (in >> tok) {
    std::string w;
    for (char c : tok) w += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    while (!w.empty() && !std::isalnum(static_cast<unsigned char>(w.back())) && w.back() != '\'') w.pop_back();
    while (!w.empty() && !std::isalnum(static_cast<unsigned char>(w.front())) && w.front() != '\'') w.erase(0, 1);
    ++total;
    if (stopwords.count(w)) ++hits;
  }
  if (total == 0) return false;
  return hits <= threshold * total + 1e-9;
}

const std::vector<std::string>& roman_numerals_1_to_30() {
  static const std::vector<std::string> k = {
      "I",     "II",    "III",  "IV",    "V",     "VI",     "VII",   "VIII",  "IX",   "X",
      "XI",    "XII",   "XIII", "XIV",   "XV",    "XVI",    "XVII",  "XVIII", "XIX",  "XX",
      "XXI",   "XXII",  "XXIII", "XXIV", "XXV",   "XXVI",   "XXVII", "XXVIII", "XXIX", "XXX"};
  return k;
}

const std::vector<std::string>& chromosome_formulas() {
  static const std::vector<std::string> k = {"XX",  "XY",   "XO",    "ZO",    "XXYY", "ZW",
                                             "ZWW", "XXX", "XXXX", "XXXXX", "YYYYY"};
  return k;
}

}  // namespace acrox::testing
