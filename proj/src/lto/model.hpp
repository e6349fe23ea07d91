#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lto {

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;     // stable machine-readable identifier, e.g. "CYCLE"
    std::string message;  // human-readable, single line
    std::string subject;  // theme name or story id the issue is about, may be empty
    std::string file;     // empty when not file-associated
    int line = 0;         // 1-based; 0 when unknown
};

struct ThemeEntry {
    std::string definition;
    std::vector<std::string> parents;
    std::vector<std::string> aliases;
    std::vector<std::string> references;
    std::string examples;
    std::string notes;
    std::string source_file;
    int source_line = 0;  // header line of the defining block
};

enum class Tier : uint8_t { Choice = 0, Major = 1, Minor = 2 };

inline int tier_weight(Tier t) {
    switch (t) {
    case Tier::Choice: return 3;
    case Tier::Major: return 2;
    case Tier::Minor: return 1;
    }
    return 0;
}

struct Annotation {
    std::string theme;  // as written; alias resolution happens at corpus level
    Tier tier = Tier::Minor;
    std::string comment;  // optional trailing [comment], may be empty
};

struct StoryEntry {
    std::string title;
    std::string date;
    std::string collection;
    std::string description;
    std::vector<Annotation> annotations;
    std::string source_file;
    int source_line = 0;
};

// Parsed documents preserve declaration order; ontology/corpus construction
// sorts and validates.
struct ThemeDocument {
    std::vector<std::pair<std::string, ThemeEntry>> themes;
};

struct StoryDocument {
    std::vector<std::pair<std::string, StoryEntry>> stories;
};

struct ValidationReport {
    std::vector<Diagnostic> diagnostics;
    int error_count = 0;
    int warning_count = 0;
};

// Post-validation corpus: ids unique, annotations alias-resolved and known
// to the ontology, stories sorted by id.
struct AnnotatedCorpus {
    std::vector<std::pair<std::string, StoryEntry>> stories;
    std::map<std::string, std::vector<std::string>> collections;

    const StoryEntry* find(const std::string& id) const {
        auto it = std::lower_bound(
            stories.begin(), stories.end(), id,
            [](const auto& s, const std::string& key) { return s.first < key; });
        return it != stories.end() && it->first == id ? &it->second : nullptr;
    }
    int index_of(const std::string& id) const {
        auto it = std::lower_bound(
            stories.begin(), stories.end(), id,
            [](const auto& s, const std::string& key) { return s.first < key; });
        return it != stories.end() && it->first == id
                   ? static_cast<int>(it - stories.begin())
                   : -1;
    }
};

} // namespace lto
