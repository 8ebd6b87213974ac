#include "acrox/extract.hpp"

#include <algorithm>
#include <array>

#include "acrox/acronym_pattern.hpp"
#include "acrox/text.hpp"

namespace acrox {

bool matches_acronym_pattern(std::string_view token) {
  if (token.size() < 2 || !text::is_upper(token.front())) return false;
  std::size_t end = token.size();
  if (token.back() == 's' && end >= 3 && text::is_upper(token[end - 2])) --end;
  if (!text::is_upper(token[end - 1]) || end < 2) return false;
  for (std::size_t i = 1; i + 1 < end; ++i)
    if (!text::is_alpha(token[i]) && token[i] != '-') return false;
  return true;
}

std::string canonical_form(std::string_view surface) {
  if (surface.size() >= 2 && surface.back() == 's' && text::is_upper(surface[surface.size() - 2]))
    surface.remove_suffix(1);
  return std::string(surface);
}

}  // namespace acrox

namespace acrox::extract {

std::string_view to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::kRoman: return "roman";
    case ExclusionReason::kChromosome: return "chromosome";
    case ExclusionReason::kGene: return "gene";
    case ExclusionReason::kTooLong: return "too_long";
    case ExclusionReason::kDigitPrefixed: return "digit_prefixed";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  return method == Method::kForward ? "forward" : "backward";
}

namespace {

bool is_run_char(char c) { return text::is_alpha(c) || c == '-'; }

// End of the longest match starting at `i`, or 0 when none. `i` holds an
// uppercase letter preceded by a word boundary.
std::size_t longest_match_end(std::string_view s, std::size_t i) {
  std::size_t run_end = i + 1;
  while (run_end < s.size() && is_run_char(s[run_end])) ++run_end;

  // A match must stop where a word boundary follows: at the end of the run,
  // or just before a hyphen inside it.
  for (std::size_t e = run_end; e > i + 1; --e) {
    if (e != run_end && s[e] != '-') continue;
    if (!text::is_word_boundary(s, e)) continue;
    if (text::is_upper(s[e - 1])) return e;
    if (s[e - 1] == 's' && e >= i + 3 && text::is_upper(s[e - 2])) return e;
  }
  return 0;
}

}  // namespace

std::vector<AcronymOccurrence> scan_acronyms(std::string_view sentence,
                                             std::size_t sentence_index) {
  std::vector<AcronymOccurrence> out;
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (text::is_upper(sentence[i]) && text::is_word_boundary(sentence, i)) {
      if (const std::size_t end = longest_match_end(sentence, i)) {
        const auto surface = sentence.substr(i, end - i);
        out.push_back({std::string(surface), canonical_form(surface), sentence_index, i});
        i = end;
        continue;
      }
    }
    ++i;
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 30> kRomanNumerals = {
    "I",     "II",   "III",   "IV",   "V",    "VI",    "VII",    "VIII",  "IX",   "X",
    "XI",    "XII",  "XIII",  "XIV",  "XV",   "XVI",   "XVII",   "XVIII", "XIX",  "XX",
    "XXI",   "XXII", "XXIII", "XXIV", "XXV",  "XXVI",  "XXVII",  "XXVIII", "XXIX", "XXX"};

constexpr std::array<std::string_view, 11> kChromosomeFormulas = {
    "XX", "XY", "XO", "ZO", "XXYY", "ZW", "ZWW", "XXX", "XXXX", "XXXXX", "YYYYY"};

}  // namespace

bool is_roman_numeral_1_to_30(std::string_view s) {
  return std::find(kRomanNumerals.begin(), kRomanNumerals.end(), s) != kRomanNumerals.end();
}

bool is_chromosome_formula(std::string_view s) {
  return std::find(kChromosomeFormulas.begin(), kChromosomeFormulas.end(), s) !=
         kChromosomeFormulas.end();
}

bool is_gene_sequence(std::string_view s) {
  return s.size() >= 6 && std::all_of(s.begin(), s.end(), [](char c) {
           return c == 'A' || c == 'T' || c == 'C' || c == 'G' || c == 'U';
         });
}

std::optional<Excluded> filter_candidate(const AcronymOccurrence& occ,
                                         std::string_view sentence) {
  const std::string_view c = occ.canonical;
  if (is_roman_numeral_1_to_30(c)) return Excluded{ExclusionReason::kRoman};
  if (is_chromosome_formula(c)) return Excluded{ExclusionReason::kChromosome};
  if (is_gene_sequence(c)) return Excluded{ExclusionReason::kGene};
  if (c.size() > kMaxAcronymLength) return Excluded{ExclusionReason::kTooLong};

  const std::size_t at = occ.char_offset;
  if (at >= 1 && at <= sentence.size()) {
    if (text::is_digit(sentence[at - 1]) ||
        (sentence[at - 1] == '-' && at >= 2 && text::is_digit(sentence[at - 2])))
      return Excluded{ExclusionReason::kDigitPrefixed};
  }
  return std::nullopt;
}

namespace {

// Offsets of `needle` in `s` where it stands as a whole word.
std::vector<std::size_t> whole_word_hits(std::string_view s, std::string_view needle) {
  std::vector<std::size_t> hits;
  if (needle.empty()) return hits;
  for (std::size_t pos = s.find(needle); pos != std::string_view::npos;
       pos = s.find(needle, pos + 1)) {
    const bool left_ok = !text::is_word_codepoint(static_cast<unsigned char>(needle.front())) ||
                         text::is_word_boundary(s, pos);
    const bool right_ok = !text::is_word_codepoint(static_cast<unsigned char>(needle.back())) ||
                          text::is_word_boundary(s, pos + needle.size());
    if (left_ok && right_ok) hits.push_back(pos);
  }
  return hits;
}

constexpr std::string_view kRightQuote = "\xE2\x80\x99";  // U+2019

// Length of a word character, apostrophe or right single quote at `i`, or 0.
std::size_t word_piece_at(std::string_view s, std::size_t i) {
  if (i >= s.size()) return 0;
  if (s[i] == '\'') return 1;
  if (s.substr(i, kRightQuote.size()) == kRightQuote) return kRightQuote.size();
  const auto d = text::decode_at(s, i);
  return text::is_word_codepoint(d.codepoint) ? d.length : 0;
}

// Parses one expansion word at `i`: a letter, word pieces, then optional
// "-piece+" segments. Returns the end offset or 0.
std::size_t parse_forward_word(std::string_view s, std::size_t i) {
  if (i >= s.size() || !text::is_alpha(s[i])) return 0;
  ++i;
  while (std::size_t n = word_piece_at(s, i)) i += n;
  while (i < s.size() && s[i] == '-' && word_piece_at(s, i + 1)) {
    ++i;
    while (std::size_t n = word_piece_at(s, i)) i += n;
  }
  return i;
}

}  // namespace

std::optional<std::string> match_forward(std::string_view sentence, std::string_view acronym) {
  for (const std::size_t hit : whole_word_hits(sentence, acronym)) {
    std::size_t i = hit + acronym.size();
    while (i < sentence.size() && text::is_space(sentence[i])) ++i;
    if (i >= sentence.size() || sentence[i] != '(') continue;
    const std::size_t group_start = ++i;

    bool ok = false;
    while (true) {
      const std::size_t end = parse_forward_word(sentence, i);
      if (!end) break;
      i = end;
      const std::size_t before_space = i;
      while (i < sentence.size() && text::is_space(sentence[i])) ++i;
      if (i < sentence.size() && sentence[i] == ')') {
        ok = true;
        break;
      }
      if (i == before_space) break;  // words must be separated by whitespace
    }
    if (ok) return text::squeeze_whitespace(sentence.substr(group_start, i - group_start));
  }
  return std::nullopt;
}

bool stopword_ratio_ok(std::string_view expansion, const WordSet& stopwords, double threshold) {
  const auto tokens = text::split_whitespace(expansion);
  if (tokens.empty()) return false;
  std::size_t hits = 0;
  for (auto t : tokens)
    if (stopwords.count(normalize_token(t))) ++hits;
  // Compare hits/total <= threshold without rounding noise at exact thirds.
  return static_cast<double>(hits) <= threshold * static_cast<double>(tokens.size()) + 1e-9;
}

std::optional<std::string> match_backward(std::string_view sentence, std::string_view acronym) {
  const std::string canon = canonical_form(acronym);
  if (canon.empty()) return std::nullopt;
  const char first = text::to_lower(canon.front());
  const char last = text::to_lower(canon.back());

  const std::string needle = "(" + std::string(acronym) + ")";
  for (std::size_t q = sentence.find(needle); q != std::string_view::npos;
       q = sentence.find(needle, q + 1)) {
    std::size_t region = q;
    while (region > 0) {
      const char c = sentence[region - 1];
      if (!text::is_alpha(c) && !text::is_space(c) && c != '-') break;
      --region;
    }
    std::size_t last_pos = q;
    for (std::size_t k = q; k-- > region;) {
      if (text::to_lower(sentence[k]) == last) {
        last_pos = k;
        break;
      }
    }
    if (last_pos == q) continue;

    for (std::size_t p = region; p < last_pos; ++p) {
      const bool starts_word = p == 0 || text::is_space(sentence[p - 1]);
      if (starts_word && text::to_lower(sentence[p]) == first && text::is_alpha(sentence[p]))
        return text::squeeze_whitespace(sentence.substr(p, q - p));
    }
  }
  return std::nullopt;
}

std::string refine_expansion(std::string_view acronym, std::string_view expansion) {
  const std::size_t limit = acronym.size();
  const auto words = text::split_whitespace(expansion);
  if (words.size() <= limit || acronym.empty()) return std::string(expansion);

  const char first = text::to_lower(acronym.front());
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (words.size() - k > limit) continue;
    if (text::to_lower(words[k].front()) != first) continue;
    const std::size_t offset = static_cast<std::size_t>(words[k].data() - expansion.data());
    return std::string(expansion.substr(offset));
  }
  return std::string(expansion);
}

std::string capture_context(const SentenceStream& stream, const AcronymOccurrence& occ) {
  std::string out(kContextPrefix);
  out += ' ';
  const std::size_t i = occ.sentence_index;
  if (i > 0) {
    out += stream.sentences[i - 1].text;
    out += ' ';
  }
  out += stream.sentences[i].text;
  return out;
}

Resolution TableEntry::resolution() const {
  if (!expansions.empty()) return Expanded{expansions.front().text, expansions.front().method};
  return Contextual{context.value_or(std::string(kContextPrefix))};
}

const TableEntry* AcronymTable::find(std::string_view canonical) const {
  const auto it = index_.find(std::string(canonical));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

TableEntry& AcronymTable::upsert(const std::string& canonical) {
  const auto [it, inserted] = index_.try_emplace(canonical, entries_.size());
  if (inserted) entries_.push_back(TableEntry{canonical, {}, {}, std::nullopt});
  return entries_[it->second];
}

bool AcronymTable::add_expansion(TableEntry& entry, std::string text, Method method) {
  for (const auto& e : entry.expansions)
    if (e.text == text) return false;
  entry.expansions.push_back({std::move(text), method});
  entry.context.reset();
  return true;
}

namespace {

bool acceptable_expansion(std::string_view expansion, std::string_view acronym) {
  if (text::split_whitespace(expansion).empty()) return false;
  if (expansion.find_first_of("()") != std::string_view::npos) return false;
  return !text::iequals(expansion, acronym) && !text::iequals(expansion, canonical_form(acronym));
}

}  // namespace

AcronymTable build_table(const SentenceStream& stream, const ExtractOptions& options) {
  AcronymTable table;
  for (const auto& sentence : stream.sentences) {
    for (auto& occ : scan_acronyms(sentence.text, sentence.index)) {
      if (const auto excluded = filter_candidate(occ, sentence.text)) {
        table.add_exclusion({occ, excluded->reason});
        continue;
      }
      TableEntry& entry = table.upsert(occ.canonical);
      entry.occurrences.push_back(occ);

      if (auto fwd = match_forward(sentence.text, occ.surface);
          fwd && stopword_ratio_ok(*fwd, options.stopwords, options.stopword_threshold) &&
          acceptable_expansion(*fwd, occ.surface)) {
        table.add_expansion(entry, std::move(*fwd), Method::kForward);
        continue;
      }
      if (auto bwd = match_backward(sentence.text, occ.surface)) {
        auto refined = refine_expansion(occ.canonical, *bwd);
        if (acceptable_expansion(refined, occ.surface))
          table.add_expansion(entry, std::move(refined), Method::kBackward);
      }
    }
  }

  for (const auto& entry : table.entries()) {
    if (!entry.expansions.empty()) continue;
    auto& mutable_entry = table.upsert(entry.canonical);
    mutable_entry.context = capture_context(stream, entry.occurrences.front());
  }
  return table;
}

}  // namespace acrox::extract
