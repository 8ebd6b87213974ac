#pragma once

// Small UTF-8 and ASCII helpers shared by the pipeline stages. Text is kept
// as UTF-8 in std::string throughout; offsets are byte offsets.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace acrox::text {

inline constexpr char32_t kInvalidCodepoint = 0xFFFD;

struct Decoded {
  char32_t codepoint;
  std::size_t length;  // bytes consumed, >= 1
};

// Decodes one codepoint starting at `pos`. Malformed sequences decode as
// U+FFFD consuming a single byte.
Decoded decode_at(std::string_view s, std::size_t pos);

// Start offset of the codepoint that ends just before `pos`.
std::size_t previous_start(std::string_view s, std::size_t pos);

std::size_t codepoint_count(std::string_view s);

// Approximation of a regex `\w` character: ASCII alphanumerics, underscore,
// and codepoints in the common alphabetic blocks (Latin, Greek, Cyrillic,
// CJK, Hangul). Punctuation and symbols outside ASCII are not word chars.
bool is_word_codepoint(char32_t cp);

// Word-boundary test between the codepoint before `pos` and the one at it.
bool is_word_boundary(std::string_view s, std::size_t pos);

constexpr bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }
constexpr bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }
constexpr bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}
constexpr char to_lower(char c) { return is_upper(c) ? char(c - 'A' + 'a') : c; }

std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

std::string_view trim(std::string_view s);
std::string_view trim_left(std::string_view s);
std::string_view trim_right(std::string_view s);

// Whitespace-separated tokens (ASCII whitespace).
std::vector<std::string_view> split_whitespace(std::string_view s);

// Splits on '\n'. "a\nb" -> {"a","b"}; "a\n" -> {"a",""}; "" -> {""}.
std::vector<std::string_view> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces every occurrence of `from` (non-empty) with `to`.
std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to);

// Collapses all whitespace runs to one space and trims the ends.
std::string squeeze_whitespace(std::string_view s);

}  // namespace acrox::text
