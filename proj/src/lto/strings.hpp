#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lto::str {

// Unicode NFC normalization of UTF-8 input. Throws std::runtime_error on
// malformed UTF-8; everything downstream may assume well-formed input.
std::string nfc(std::string_view utf8);

// Full case folding (non-Turkic) for case-insensitive matching.
std::string casefold(std::string_view utf8);

bool valid_utf8(std::string_view bytes);

// ASCII-only trimming; Unicode spaces are significant in names.
std::string_view trim(std::string_view s);
std::string_view rtrim(std::string_view s);

bool contains_fold(std::string_view haystack, std::string_view needle);

std::vector<std::string_view> split_lines(std::string_view text);

} // namespace lto::str
