#include "acrox/ingest.hpp"

#include <algorithm>
#include <array>

#include "acrox/errors.hpp"
#include "acrox/text.hpp"

namespace acrox::ingest {

CleanText CleanText::from_pages(const std::vector<std::string>& pages) {
  CleanText out;
  out.page_spans.reserve(pages.size());
  for (const auto& p : pages) {
    const std::size_t begin = out.text.size();
    out.text += p;
    if (!p.empty() && p.back() != '\n') out.text += '\n';
    out.page_spans.push_back({begin, out.text.size()});
  }
  return out;
}

std::vector<std::string> CleanText::pages() const {
  std::vector<std::string> out;
  out.reserve(page_spans.size());
  for (const auto& s : page_spans) out.emplace_back(text.substr(s.begin, s.size()));
  return out;
}

RawDocument parse_pages(std::string_view raw, std::string source_id) {
  if (raw.empty()) throw EmptyDocumentError(source_id);

  std::vector<std::string_view> page_texts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == kPageSeparator) {
      page_texts.push_back(raw.substr(start, i - start));
      start = i + 1;
    }
  }
  page_texts.push_back(raw.substr(start));
  if (page_texts.size() > 1 && page_texts.back().empty()) page_texts.pop_back();

  RawDocument doc;
  doc.source_id = std::move(source_id);
  for (auto pt : page_texts) {
    Page page;
    if (!pt.empty()) {
      for (auto line : text::split_lines(pt)) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        page.emplace_back(line);
      }
    }
    doc.pages.push_back(std::move(page));
  }
  return doc;
}

std::string serialize_pages(const RawDocument& doc) {
  std::string out;
  for (std::size_t p = 0; p < doc.pages.size(); ++p) {
    if (p) out += kPageSeparator;
    out += text::join(doc.pages[p], "\n");
  }
  return out;
}

std::string digit_normalized(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (text::is_digit(line[i])) {
      out += '#';
      while (i + 1 < line.size() && text::is_digit(line[i + 1])) ++i;
    } else {
      out += line[i];
    }
  }
  return out;
}

namespace {

// Flags pages whose selected edge line repeats on at least half of the
// other pages.
template <typename EdgeFn>
std::vector<bool> repeated_edges(const std::vector<Page>& pages, EdgeFn edge) {
  const std::size_t n = pages.size();
  std::vector<std::string> keys(n);
  std::vector<bool> present(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (pages[p].empty()) continue;
    present[p] = true;
    keys[p] = digit_normalized(edge(pages[p]));
  }
  std::vector<bool> flagged(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (!present[p]) continue;
    std::size_t agree = 0;
    for (std::size_t q = 0; q < n; ++q)
      if (q != p && present[q] && keys[q] == keys[p]) ++agree;
    flagged[p] = agree >= 1 && 2 * agree >= n - 1;
  }
  return flagged;
}

}  // namespace

RawDocument strip_headers_footers(RawDocument doc) {
  if (doc.pages.size() < 2) return doc;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto first = repeated_edges(doc.pages, [](const Page& p) -> const std::string& { return p.front(); });
    const auto last = repeated_edges(doc.pages, [](const Page& p) -> const std::string& { return p.back(); });
    for (std::size_t p = 0; p < doc.pages.size(); ++p) {
      Page& page = doc.pages[p];
      if (page.empty() || !(first[p] || last[p])) continue;
      changed = true;
      if (page.size() == 1) {
        page.clear();
        continue;
      }
      if (last[p]) page.pop_back();
      if (first[p]) page.erase(page.begin());
    }
  }
  return doc;
}

namespace {

struct Ligature {
  std::string_view glyph;
  std::string_view letters;
};

constexpr std::array<Ligature, 7> kLigatures{{
    {"\xEF\xAC\x80", "ff"},   // U+FB00
    {"\xEF\xAC\x81", "fi"},   // U+FB01
    {"\xEF\xAC\x82", "fl"},   // U+FB02
    {"\xEF\xAC\x83", "ffi"},  // U+FB03
    {"\xEF\xAC\x84", "ffl"},  // U+FB04
    {"\xEF\xAC\x85", "ft"},   // U+FB05
    {"\xEF\xAC\x86", "st"},   // U+FB06
}};

}  // namespace

std::string replace_ligatures(std::string_view text) {
  std::string out(text);
  for (const auto& lig : kLigatures) {
    if (out.find(lig.glyph) != std::string::npos)
      out = text::replace_all(out, lig.glyph, lig.letters);
  }
  return out;
}

std::string repair_hyphenation(std::string_view input) {
  const auto lines = text::split_lines(input);
  std::vector<std::string> out;
  std::string paragraph;
  bool open = false;

  auto flush = [&] {
    if (open) out.push_back(std::move(paragraph));
    paragraph.clear();
    open = false;
  };

  for (auto line : lines) {
    if (text::trim(line).empty()) {
      flush();
      out.emplace_back(line);
      continue;
    }
    if (!open) {
      paragraph.assign(line);
      open = true;
      continue;
    }
    const std::size_t n = paragraph.size();
    const bool soft_hyphen = n >= 2 && paragraph[n - 1] == '-' &&
                             text::is_alnum(paragraph[n - 2]);
    if (soft_hyphen && text::is_lower(line.front())) {
      paragraph.pop_back();
    } else if (!soft_hyphen) {
      paragraph += ' ';
    }
    paragraph.append(line);
  }
  flush();
  return text::join(out, "\n");
}

CleanText join_page_hyphenation(const CleanText& clean) {
  std::vector<std::vector<std::string>> pages;
  for (const auto& page : clean.pages()) {
    std::vector<std::string> lines;
    for (auto l : text::split_lines(page)) lines.emplace_back(l);
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    pages.push_back(std::move(lines));
  }
  auto blank = [](const std::string& l) { return text::trim(l).empty(); };
  for (std::size_t i = 0; i + 1 < pages.size(); ++i) {
    auto& prev = pages[i];
    auto& next = pages[i + 1];
    // Blank lines at page edges do not separate paragraphs across the break.
    const auto last = std::find_if_not(prev.rbegin(), prev.rend(), blank);
    const auto first = std::find_if_not(next.begin(), next.end(), blank);
    if (last == prev.rend() || first == next.end()) continue;
    const std::string_view tail = text::trim_right(*last);
    const std::size_t n = tail.size();
    if (n < 2 || tail[n - 1] != '-' || !text::is_alnum(tail[n - 2])) continue;
    const std::string_view head = text::trim_left(*first);
    if (!text::is_lower(head.front())) continue;
    std::size_t w = 0;
    while (w < head.size() && !text::is_space(head[w])) ++w;
    *last = std::string(tail.substr(0, n - 1)) + std::string(head.substr(0, w));
    const std::string rest(text::trim_left(head.substr(w)));
    if (rest.empty())
      next.erase(first);
    else
      *first = rest;
  }
  std::vector<std::string> out;
  for (const auto& lines : pages) out.push_back(text::join(lines, "\n"));
  return CleanText::from_pages(out);
}

std::string normalize_whitespace(std::string_view input) {
  std::vector<std::string> out;
  for (auto line : text::split_lines(input)) {
    std::string cleaned;
    cleaned.reserve(line.size());
    bool pending_space = false;
    for (char c : line) {
      if (text::is_space(c)) {
        pending_space = !cleaned.empty();
        continue;
      }
      if (pending_space) cleaned += ' ';
      pending_space = false;
      cleaned += c;
    }
    out.push_back(std::move(cleaned));
  }
  return text::join(out, "\n");
}

CleanText to_clean_text(const RawDocument& doc) {
  std::vector<std::string> pages;
  pages.reserve(doc.pages.size());
  for (const auto& page : doc.pages) {
    if (page.empty()) {
      pages.emplace_back();
      continue;
    }
    pages.push_back(text::join(page, "\n") + "\n");
  }
  return CleanText::from_pages(pages);
}

}  // namespace acrox::ingest
