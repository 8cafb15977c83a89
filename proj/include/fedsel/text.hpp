#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fedsel {

/// Porter's 1980 suffix-stripping algorithm. Input must already be lowercase.
std::string porter_stem(std::string_view word);

/// Lowercase, split on non-alphanumeric bytes, Porter-stem every token.
/// No stopword removal.
std::vector<std::string> tokenize_stem(std::string_view text);

/// Tokenization without stemming (query-log construction, URL slugs).
std::vector<std::string> tokenize_raw(std::string_view text);

} // namespace fedsel
