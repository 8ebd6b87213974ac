#include "acrox/preprocess.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "acrox/acronym_pattern.hpp"
#include "acrox/text.hpp"

namespace acrox::preprocess {

namespace {

bool is_roman_char(char c) {
  switch (text::to_lower(c)) {
    case 'i': case 'v': case 'x': case 'l': case 'c': case 'd': case 'm':
      return true;
    default:
      return false;
  }
}

// Drops "3", "3.", "3.1.2", "VII." style prefixes followed by whitespace.
std::optional<std::string_view> without_section_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && text::is_digit(s[i])) {
    while (i < s.size() && (text::is_digit(s[i]) || s[i] == '.')) ++i;
  } else {
    while (i < s.size() && is_roman_char(s[i])) ++i;
    if (i == 0) return std::nullopt;
    if (i < s.size() && s[i] == '.') ++i;
  }
  if (i == 0 || i >= s.size() || !text::is_space(s[i])) return std::nullopt;
  return text::trim_left(s.substr(i));
}

bool heading_word_equals(std::string_view s, std::string_view word) {
  if (!s.empty() && (s.back() == ':' || s.back() == '.')) s.remove_suffix(1);
  return text::iequals(text::trim_right(s), word);
}

// Line views of one page slice, each without its '\n'.
std::vector<std::string_view> page_lines(std::string_view page) {
  auto lines = text::split_lines(page);
  if (!page.empty() && page.back() == '\n') lines.pop_back();
  if (page.empty()) lines.clear();
  return lines;
}

std::string rejoin(const std::vector<std::string_view>& lines) {
  std::string out;
  for (auto l : lines) {
    out.append(l);
    out += '\n';
  }
  return out;
}

template <typename Pred>
CleanText blank_lines_where(const CleanText& clean, Pred drop) {
  return ingest::map_pages(clean, [&](std::string_view page) {
    auto lines = page_lines(page);
    for (auto& l : lines)
      if (!l.empty() && drop(l)) l = std::string_view();
    return rejoin(lines);
  });
}

}  // namespace

bool is_heading(std::string_view line, std::string_view word) {
  const auto s = text::trim(line);
  if (heading_word_equals(s, word)) return true;
  const auto rest = without_section_number(s);
  return rest && heading_word_equals(*rest, word);
}

CleanText strip_references(const CleanText& clean) {
  auto pages = clean.pages();
  std::optional<std::pair<std::size_t, std::size_t>> hit;
  for (std::size_t p = 0; p < pages.size(); ++p) {
    const auto lines = page_lines(pages[p]);
    for (std::size_t l = 0; l < lines.size(); ++l)
      if (is_heading(lines[l], "References") || is_heading(lines[l], "Bibliography"))
        hit = {p, l};
  }
  if (!hit) return clean;

  const auto [page, line] = *hit;
  auto lines = page_lines(pages[page]);
  lines.resize(line);
  pages[page] = rejoin(lines);
  for (std::size_t p = page + 1; p < pages.size(); ++p) pages[p].clear();
  return CleanText::from_pages(pages);
}

CleanText strip_front_matter(const CleanText& clean) {
  auto pages = clean.pages();
  if (pages.empty()) return clean;
  auto lines = page_lines(pages.front());

  std::size_t abstract = lines.size();
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (is_heading(lines[l], "Abstract")) {
      abstract = l;
      break;
    }
  }
  for (std::size_t l = abstract + 1; l < lines.size(); ++l) {
    if (is_heading(lines[l], "Introduction")) {
      lines.erase(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(l + 1));
      pages.front() = rejoin(lines);
      return CleanText::from_pages(pages);
    }
  }
  return clean;
}

double symbol_fraction(std::string_view line) {
  static constexpr std::string_view kAllowedPunct = ".,;:()-'\"";
  std::size_t total = 0;
  std::size_t exotic = 0;
  for (std::size_t i = 0; i < line.size();) {
    const auto d = text::decode_at(line, i);
    i += d.length;
    if (d.codepoint < 0x80 && text::is_space(static_cast<char>(d.codepoint))) continue;
    ++total;
    if (d.codepoint < 0x80) {
      const char c = static_cast<char>(d.codepoint);
      if (text::is_alnum(c) || kAllowedPunct.find(c) != std::string_view::npos) continue;
    }
    ++exotic;
  }
  return total == 0 ? 0.0 : static_cast<double>(exotic) / static_cast<double>(total);
}

CleanText strip_math_lines(const CleanText& clean, double threshold) {
  return blank_lines_where(clean, [threshold](std::string_view l) {
    return symbol_fraction(l) > threshold;
  });
}

bool is_uppercase_heading(std::string_view line) {
  const auto s = text::trim(line);
  if (text::split_whitespace(s).size() < 2) return false;
  const char last = s.back();
  if (last == '.' || last == '!' || last == '?') return false;
  bool any_alpha = false;
  for (char c : s) {
    if (text::is_lower(c)) return false;
    any_alpha = any_alpha || text::is_upper(c);
  }
  return any_alpha;
}

CleanText strip_uppercase_headings(const CleanText& clean) {
  return blank_lines_where(clean, [](std::string_view l) { return is_uppercase_heading(l); });
}

AbbreviationGuard AbbreviationGuard::defaults() {
  return {{"e.g.", "i.e.", "et al.", "Fig.", "Eq.", "vs.", "Dr.", "cf."}};
}

namespace {

std::string_view token_ending_at(std::string_view s, std::size_t end) {
  std::size_t start = end;
  while (start > 0 && !text::is_space(s[start - 1])) --start;
  auto tok = s.substr(start, end - start);
  while (!tok.empty() && (tok.front() == '(' || tok.front() == '[' || tok.front() == '"'))
    tok.remove_prefix(1);
  return tok;
}

bool is_dotted_acronym(std::string_view tok) {
  if (tok.size() < 4 || tok.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < tok.size(); i += 2)
    if (!text::is_alpha(tok[i]) || tok[i + 1] != '.') return false;
  return true;
}

}  // namespace

bool AbbreviationGuard::suppresses_break(std::string_view s, std::size_t period_pos) const {
  const auto tok = token_ending_at(s, period_pos + 1);
  if (tok.size() == 2 && text::is_upper(tok[0])) return true;
  if (is_dotted_acronym(tok)) return true;

  for (const auto& entry : entries) {
    const auto want = text::split_whitespace(entry);
    if (want.empty()) continue;
    std::size_t end = period_pos + 1;
    bool ok = true;
    for (std::size_t k = want.size(); k-- > 0;) {
      const auto got = k + 1 == want.size() ? tok : token_ending_at(s, end);
      if (!text::iequals(got, want[k])) {
        ok = false;
        break;
      }
      // Step back over this token and the whitespace before it.
      std::size_t start = end;
      while (start > 0 && !text::is_space(s[start - 1])) --start;
      end = start;
      while (end > 0 && text::is_space(s[end - 1])) --end;
      if (k > 0 && end == start) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

SentenceStream split_sentences(const CleanText& clean, const AbbreviationGuard& guard) {
  const std::string_view s = clean.text;
  SentenceStream out;
  std::size_t start = 0;

  auto emit = [&](std::size_t end) {
    while (start < end && text::is_space(s[start])) ++start;
    std::size_t stop = end;
    while (stop > start && text::is_space(s[stop - 1])) --stop;
    if (stop > start) {
      out.sentences.push_back(
          {out.sentences.size(), std::string(s.substr(start, stop - start)), {start, stop}});
    }
    start = end;
  };

  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    if (j < s.size() && !text::is_space(s[j])) continue;
    while (j < s.size() && text::is_space(s[j])) ++j;
    if (j < s.size() && !text::is_upper(s[j])) continue;
    if (c == '.' && j < s.size() && guard.suppresses_break(s, i)) continue;
    emit(i + 1);
  }
  emit(s.size());
  return out;
}

std::vector<std::string> edit_distance_one_neighbors(std::string_view word,
                                                     const WordSet& dictionary) {
  std::set<std::string> found;
  auto probe = [&](std::string candidate) {
    if (candidate != word && dictionary.count(candidate)) found.insert(std::move(candidate));
  };
  const std::string w(word);
  for (std::size_t i = 0; i < w.size(); ++i) probe(w.substr(0, i) + w.substr(i + 1));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::string swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    probe(std::move(swapped));
  }
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (char c = 'a'; c <= 'z'; ++c) {
      probe(w.substr(0, i) + c + w.substr(i));
      if (i < w.size() && w[i] != c) {
        std::string sub = w;
        sub[i] = c;
        probe(std::move(sub));
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

bool is_token_byte(char c) {
  return text::is_alnum(c) || c == '\'' || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

std::string correct_sentence(std::string_view s, const WordSet& dictionary) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_token_byte(s[i])) {
      out += s[i++];
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && is_token_byte(s[i])) ++i;
    const auto tok = s.substr(start, i - start);
    const bool lowercase = std::all_of(tok.begin(), tok.end(), [](char c) { return text::is_lower(c); });
    if (lowercase && !dictionary.count(std::string(tok)) && !matches_acronym_pattern(tok)) {
      const auto near = edit_distance_one_neighbors(tok, dictionary);
      if (near.size() == 1) {
        out += near.front();
        continue;
      }
    }
    out.append(tok);
  }
  return out;
}

}  // namespace

SentenceStream correct_spelling(const SentenceStream& stream, const WordSet& dictionary) {
  SentenceStream out = stream;
  for (auto& sentence : out.sentences) sentence.text = correct_sentence(sentence.text, dictionary);
  return out;
}

}  // namespace acrox::preprocess
