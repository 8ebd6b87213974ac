#pragma once

#include <string>
#include <string_view>

namespace acrox {

// Whole-token form of the identification pattern: an uppercase letter, any
// run of ASCII letters and hyphens, an uppercase letter, an optional
// trailing 's'.
bool matches_acronym_pattern(std::string_view token);

// Drops one trailing plural 's' that follows an uppercase letter
// ("LPARs" -> "LPAR").
std::string canonical_form(std::string_view surface);

}  // namespace acrox
