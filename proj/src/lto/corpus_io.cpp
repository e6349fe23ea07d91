#include "corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "text_format.hpp"

namespace lto {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed for '" + path + "'");
    return std::move(buf).str();
}

LoadResult load_corpus(const std::vector<std::string>& theme_paths,
                       const std::vector<std::string>& story_paths) {
    LoadResult res;

    for (const auto& path : theme_paths) {
        std::string text = read_file(path);
        ThemeDocument doc = parse_theme_document(text, path, res.diagnostics);
        for (auto& t : doc.themes)
            res.themes.themes.push_back(std::move(t));
    }

    ValidationReport build_report;
    res.ontology = ThemeOntology::build(res.themes.themes, build_report);
    for (auto& d : build_report.diagnostics)
        res.diagnostics.push_back(std::move(d));

    StoryDocument all_stories;
    for (const auto& path : story_paths) {
        std::string text = read_file(path);
        StoryDocument doc = parse_story_document(text, path, res.diagnostics);
        for (auto& s : doc.stories)
            all_stories.stories.push_back(std::move(s));
    }

    std::set<std::string> ids;
    for (auto& [id, story] : all_stories.stories) {
        if (!ids.insert(id).second) {
            Diagnostic d;
            d.severity = Severity::Error;
            d.code = "DUP_STORY";
            d.subject = id;
            d.message = "story '" + id + "' is defined more than once; first kept";
            d.file = story.source_file;
            d.line = story.source_line;
            res.diagnostics.push_back(std::move(d));
            continue;
        }
        if (res.ontology) {
            // alias-resolve and drop annotations the ontology does not know
            std::vector<Annotation> kept;
            std::set<std::string> seen;
            for (auto& a : story.annotations) {
                const std::string* canon = res.ontology->resolve(a.theme);
                if (!canon) {
                    Diagnostic d;
                    d.severity = Severity::Warning;
                    d.code = "UNKNOWN_THEME";
                    d.subject = id;
                    d.message = "story '" + id + "' annotates unknown theme '" +
                                a.theme + "'; annotation dropped";
                    d.file = story.source_file;
                    d.line = story.source_line;
                    res.diagnostics.push_back(std::move(d));
                    continue;
                }
                if (!seen.insert(*canon).second) {
                    Diagnostic d;
                    d.severity = Severity::Warning;
                    d.code = "DUP_ANNOTATION";
                    d.subject = id;
                    d.message = "story '" + id + "' annotates theme '" + *canon +
                                "' more than once after alias resolution";
                    d.file = story.source_file;
                    d.line = story.source_line;
                    res.diagnostics.push_back(std::move(d));
                    continue;
                }
                a.theme = *canon;
                kept.push_back(std::move(a));
            }
            story.annotations = std::move(kept);
        }
        res.corpus.stories.emplace_back(id, std::move(story));
    }

    std::sort(res.corpus.stories.begin(), res.corpus.stories.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [id, story] : res.corpus.stories)
        if (!story.collection.empty())
            res.corpus.collections[story.collection].push_back(id);

    ValidationReport sorter;
    sorter.diagnostics = std::move(res.diagnostics);
    finalize_report(sorter);
    res.diagnostics = std::move(sorter.diagnostics);
    return res;
}

} // namespace lto
