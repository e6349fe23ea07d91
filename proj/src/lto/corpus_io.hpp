#pragma once

#include <optional>
#include <string>
#include <vector>

#include "model.hpp"
#include "ontology.hpp"

namespace lto {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);  // throws IoError

struct LoadResult {
    std::optional<ThemeOntology> ontology;  // nullopt when build failed
    AnnotatedCorpus corpus;
    std::vector<Diagnostic> diagnostics;    // parse + build + cross-check, sorted
    ThemeDocument themes;                   // raw parse, declaration order
};

// Parses every file, builds the ontology, cross-checks annotations.
// Throws IoError/EncodingError for unreadable or non-UTF-8 input; an
// ontology that fails to build is reported via ontology == nullopt with
// the errors in diagnostics.
LoadResult load_corpus(const std::vector<std::string>& theme_paths,
                       const std::vector<std::string>& story_paths);

} // namespace lto
