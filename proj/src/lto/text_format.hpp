#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace lto {

// The only fatal parse condition; everything else degrades to diagnostics.
struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsers accept arbitrary text and never throw except on invalid UTF-8.
// filename is only used to attribute diagnostics.
ThemeDocument parse_theme_document(std::string_view bytes, std::string_view filename,
                                   std::vector<Diagnostic>& diags);
StoryDocument parse_story_document(std::string_view bytes, std::string_view filename,
                                   std::vector<Diagnostic>& diags);

// Canonical form: blocks sorted by name, fixed field order, LF endings,
// one blank line between sections, two between blocks. Reparsing the output
// yields an equal model.
std::string serialize_theme_document(const ThemeDocument& doc);
std::string serialize_story_document(const StoryDocument& doc);

} // namespace lto
