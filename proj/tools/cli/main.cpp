// lto command-line tool. Talks to the library strictly through the public
// C interface; all data goes to stdout, every diagnostic to stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lto/lto.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFatal = 3;

struct Options {
    std::vector<std::string> theme_paths;
    std::vector<std::string> story_paths;
    std::string format = "tsv";
};

struct TableDeleter {
    void operator()(lto_table* t) const { lto_table_free(t); }
};
using TablePtr = std::unique_ptr<lto_table, TableDeleter>;

struct OntologyDeleter {
    void operator()(lto_ontology* o) const { lto_ontology_free(o); }
};
using OntologyPtr = std::unique_ptr<lto_ontology, OntologyDeleter>;

struct CorpusDeleter {
    void operator()(lto_corpus* c) const { lto_corpus_free(c); }
};
using CorpusPtr = std::unique_ptr<lto_corpus, CorpusDeleter>;

// Non-fatal library statuses point at bad request data; everything touching
// files or the ontology structure is fatal.
int exit_code_for(lto_status status) {
    switch (status) {
    case LTO_OK:
        return kExitOk;
    case LTO_E_IO:
    case LTO_E_ENCODING:
    case LTO_E_BUILD_FAILED:
        return kExitFatal;
    default:
        return kExitUsage;
    }
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.c_str());
    return out;
}

void print_diagnostics(const lto_table* table) {
    if (!table)
        return;
    const size_t rows = lto_table_nrows(table);
    for (size_t r = 0; r < rows; ++r) {
        const char* severity = lto_table_cell_text(table, r, 0);
        const char* code = lto_table_cell_text(table, r, 1);
        const char* file = lto_table_cell_text(table, r, 3);
        long long line = lto_table_cell_int(table, r, 4);
        const char* message = lto_table_cell_text(table, r, 5);
        std::string loc;
        if (file && *file) {
            loc = std::string(file);
            if (line > 0)
                loc += ":" + std::to_string(line);
            loc += ": ";
        }
        std::cerr << loc << (severity ? severity : "error") << ": "
                  << (code ? code : "") << ": " << (message ? message : "")
                  << "\n";
    }
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void print_table(const lto_table* table, const std::string& format) {
    const size_t rows = lto_table_nrows(table);
    const size_t cols = lto_table_ncols(table);
    std::ostringstream out;
    if (format == "tsv") {
        for (size_t c = 0; c < cols; ++c) {
            if (c)
                out << '\t';
            out << lto_table_col_name(table, c);
        }
        out << '\n';
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                if (c)
                    out << '\t';
                switch (lto_table_cell_kind(table, r, c)) {
                case LTO_CELL_TEXT:
                    out << lto_table_cell_text(table, r, c);
                    break;
                case LTO_CELL_INT:
                    out << lto_table_cell_int(table, r, c);
                    break;
                case LTO_CELL_REAL:
                    out << format_real(lto_table_cell_real(table, r, c));
                    break;
                case LTO_CELL_BOOL:
                    out << (lto_table_cell_int(table, r, c) ? "true" : "false");
                    break;
                case LTO_CELL_NONE:
                    break;
                }
            }
            out << '\n';
        }
    } else {
        for (size_t r = 0; r < rows; ++r) {
            ordered_json obj;
            for (size_t c = 0; c < cols; ++c) {
                const char* name = lto_table_col_name(table, c);
                switch (lto_table_cell_kind(table, r, c)) {
                case LTO_CELL_TEXT:
                    obj[name] = lto_table_cell_text(table, r, c);
                    break;
                case LTO_CELL_INT:
                    obj[name] = lto_table_cell_int(table, r, c);
                    break;
                case LTO_CELL_REAL:
                    obj[name] = lto_table_cell_real(table, r, c);
                    break;
                case LTO_CELL_BOOL:
                    obj[name] = lto_table_cell_int(table, r, c) != 0;
                    break;
                case LTO_CELL_NONE:
                    obj[name] = nullptr;
                    break;
                }
            }
            out << obj.dump() << '\n';
        }
    }
    std::cout << out.str();
}

int report_failure(lto_status status) {
    std::cerr << "error: " << lto_status_name(status) << ": " << lto_last_error()
              << "\n";
    return exit_code_for(status);
}

OntologyPtr load_ontology(const Options& opt, int& exit_code) {
    lto_ontology* ont = nullptr;
    lto_table* diags = nullptr;
    auto paths = c_strings(opt.theme_paths);
    lto_status status =
        lto_ontology_load_files(paths.data(), paths.size(), &ont, &diags);
    TablePtr diag_guard(diags);
    print_diagnostics(diags);
    if (status != LTO_OK) {
        exit_code = report_failure(status);
        return nullptr;
    }
    exit_code = kExitOk;
    return OntologyPtr(ont);
}

CorpusPtr load_corpus(const Options& opt, int& exit_code) {
    lto_corpus* corpus = nullptr;
    lto_table* diags = nullptr;
    auto tpaths = c_strings(opt.theme_paths);
    auto spaths = c_strings(opt.story_paths);
    lto_status status =
        lto_corpus_load_files(tpaths.data(), tpaths.size(), spaths.data(),
                              spaths.size(), &corpus, &diags);
    TablePtr diag_guard(diags);
    print_diagnostics(diags);
    if (status != LTO_OK) {
        exit_code = report_failure(status);
        return nullptr;
    }
    exit_code = kExitOk;
    return CorpusPtr(corpus);
}

bool read_id_file(const std::string& path, std::vector<std::string>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: I/O error: cannot open '" << path << "'\n";
        return false;
    }
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        out.push_back(line.substr(start));
    }
    return true;
}

std::string data_dir() {
    if (const char* env = std::getenv("LTO_DATA_DIR"))
        return env;
#ifdef LTO_DATA_DIR_DEFAULT
    return LTO_DATA_DIR_DEFAULT;
#else
    return "";
#endif
}

std::string version_text() {
    std::string text = std::string("lto ") + lto_version();
    std::string manifest_path = data_dir();
    if (!manifest_path.empty()) {
        std::ifstream in(manifest_path + "/snapshot/manifest.json");
        if (in) {
            try {
                ordered_json manifest = ordered_json::parse(in);
                text += "\nbundled snapshot: " +
                        manifest.value("name", std::string("unnamed")) + " " +
                        manifest.value("version", std::string("?")) + " (" +
                        std::to_string(manifest.value("class_count", 0)) +
                        " classes)";
                return text;
            } catch (const std::exception&) {
                // fall through to the no-snapshot line
            }
        }
    }
    text += "\nbundled snapshot: none";
    return text;
}

void print_summary(const Options& opt, int themes, int errors, int warnings) {
    if (opt.format == "tsv") {
        std::cout << themes << " themes, " << errors << " errors, " << warnings
                  << " warnings\n";
    } else {
        ordered_json obj;
        obj["themes"] = themes;
        obj["errors"] = errors;
        obj["warnings"] = warnings;
        std::cout << obj.dump() << '\n';
    }
}

int run_validate(const Options& opt, bool strict, bool fail_on_warning) {
    lto_table* report = nullptr;
    int themes = 0, errors = 0, warnings = 0;
    auto paths = c_strings(opt.theme_paths);
    lto_status status = lto_validate_files(paths.data(), paths.size(),
                                           strict ? 1 : 0, &report, &themes,
                                           &errors, &warnings);
    TablePtr guard(report);
    if (status != LTO_OK)
        return report_failure(status);
    print_diagnostics(report);
    print_summary(opt, themes, errors, warnings);
    if (errors > 0 || (fail_on_warning && warnings > 0))
        return kExitValidation;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Literary theme ontology toolkit"};
    app.set_version_flag("--version", version_text);
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--themes", opt.theme_paths,
                   "Theme document path (repeatable); defaults to "
                   "$LTO_THEME_PATH, colon-separated");
    app.add_option("--stories", opt.story_paths,
                   "Story document path (repeatable)");
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json-lines"}))
        ->capture_default_str();

    // validate / lint
    auto* validate = app.add_subcommand("validate", "Check theme documents");
    auto* lint = app.add_subcommand("lint", "Check theme documents");
    bool strict = false;
    lint->add_flag("--strict", strict,
                   "Enable naming-convention checks; warnings become fatal");

    // stats
    auto* stats = app.add_subcommand("stats", "Ontology statistics");

    // query
    auto* query = app.add_subcommand("query", "Closure queries");
    query->require_subcommand(1);
    std::string q_name, q_general, q_specific;
    auto* q_anc = query->add_subcommand("ancestors", "All ancestors of a theme");
    q_anc->add_option("name", q_name, "Theme name or alias")->required();
    auto* q_desc = query->add_subcommand("descendants",
                                         "All descendants of a theme");
    q_desc->add_option("name", q_name, "Theme name or alias")->required();
    auto* q_sub = query->add_subcommand("subsumes",
                                        "Does the first theme subsume the second");
    q_sub->add_option("general", q_general, "Candidate ancestor")->required();
    q_sub->add_option("specific", q_specific, "Candidate descendant")->required();

    // search
    auto* search = app.add_subcommand("search", "Substring search over themes");
    std::string search_query;
    search->add_option("query", search_query, "Search text")->required();

    // enrich
    auto* enrich = app.add_subcommand("enrich", "Over-represented themes");
    std::string enrich_query_file, enrich_background_file;
    int min_count = 2;
    bool bonferroni = false;
    enrich->add_option("--query", enrich_query_file,
                       "File with one story id per line")
        ->required();
    enrich->add_option("--background", enrich_background_file,
                       "Background id file (default: all stories)");
    enrich->add_option("--min-count", min_count,
                       "Minimum background hits for a row")
        ->capture_default_str();
    enrich->add_flag("--bonferroni", bonferroni,
                     "Bonferroni adjustment instead of Benjamini-Hochberg");

    // diff
    auto* diff = app.add_subcommand("diff", "Differential theme usage");
    std::string group_a_file, group_b_file;
    diff->add_option("--group-a", group_a_file, "File with one story id per line")
        ->required();
    diff->add_option("--group-b", group_b_file, "File with one story id per line")
        ->required();
    diff->add_option("--min-count", min_count, "Minimum total hits for a row")
        ->capture_default_str();
    diff->add_flag("--bonferroni", bonferroni,
                   "Bonferroni adjustment instead of Benjamini-Hochberg");

    // similar / recommend / cluster
    auto* similar = app.add_subcommand("similar", "Similarity of two stories");
    std::string story_a, story_b;
    similar->add_option("story_a", story_a, "First story id")->required();
    similar->add_option("story_b", story_b, "Second story id")->required();

    auto* recommend = app.add_subcommand("recommend", "Most similar stories");
    std::string rec_story;
    int topk = 10;
    recommend->add_option("story", rec_story, "Story id")->required();
    recommend->add_option("-k,--top", topk, "Number of results")
        ->capture_default_str();

    auto* cluster = app.add_subcommand("cluster", "Average-linkage clustering");
    double threshold = 0.5;
    cluster->add_option("--threshold", threshold,
                        "Stop once the smallest inter-cluster distance "
                        "exceeds this")
        ->capture_default_str();

    // export-owl
    auto* export_owl = app.add_subcommand("export-owl",
                                          "OWL2 functional-syntax export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    if (opt.theme_paths.empty()) {
        if (const char* env = std::getenv("LTO_THEME_PATH")) {
            std::string joined(env);
            size_t pos = 0;
            while (pos <= joined.size()) {
                size_t colon = joined.find(':', pos);
                if (colon == std::string::npos)
                    colon = joined.size();
                if (colon > pos)
                    opt.theme_paths.push_back(joined.substr(pos, colon - pos));
                pos = colon + 1;
            }
        }
    }
    if (opt.theme_paths.empty()) {
        std::cerr << "error: no theme documents given; use --themes or "
                     "LTO_THEME_PATH\n";
        return kExitUsage;
    }

    if (validate->parsed())
        return run_validate(opt, false, false);
    if (lint->parsed())
        return run_validate(opt, strict, strict);

    int exit_code = kExitOk;
    if (stats->parsed() || query->parsed() || search->parsed() ||
        export_owl->parsed()) {
        OntologyPtr ont = load_ontology(opt, exit_code);
        if (!ont)
            return exit_code;
        lto_status status = LTO_OK;
        TablePtr table;
        if (stats->parsed()) {
            lto_table* t = nullptr;
            status = lto_stats(ont.get(), &t);
            table.reset(t);
        } else if (q_anc->parsed() || q_desc->parsed()) {
            lto_table* t = nullptr;
            status = q_anc->parsed() ? lto_ancestors(ont.get(), q_name.c_str(), &t)
                                     : lto_descendants(ont.get(), q_name.c_str(), &t);
            table.reset(t);
        } else if (q_sub->parsed()) {
            int result = 0;
            status = lto_subsumes(ont.get(), q_general.c_str(),
                                  q_specific.c_str(), &result);
            if (status == LTO_OK) {
                if (opt.format == "tsv") {
                    std::cout << "general\tspecific\tsubsumes\n"
                              << q_general << '\t' << q_specific << '\t'
                              << (result ? "true" : "false") << '\n';
                } else {
                    ordered_json obj;
                    obj["general"] = q_general;
                    obj["specific"] = q_specific;
                    obj["subsumes"] = result != 0;
                    std::cout << obj.dump() << '\n';
                }
                return kExitOk;
            }
        } else if (search->parsed()) {
            lto_table* t = nullptr;
            status = lto_search(ont.get(), search_query.c_str(), &t);
            table.reset(t);
        } else if (export_owl->parsed()) {
            char* text = nullptr;
            status = lto_export_owl(ont.get(), &text);
            if (status == LTO_OK) {
                std::cout << text;
                lto_text_free(text);
                return kExitOk;
            }
        }
        if (status != LTO_OK)
            return report_failure(status);
        print_table(table.get(), opt.format);
        return kExitOk;
    }

    // everything below needs stories
    CorpusPtr corpus = load_corpus(opt, exit_code);
    if (!corpus)
        return exit_code;

    lto_status status = LTO_OK;
    TablePtr table;
    if (enrich->parsed()) {
        std::vector<std::string> query_ids, background_ids;
        if (!read_id_file(enrich_query_file, query_ids))
            return kExitFatal;
        if (!enrich_background_file.empty() &&
            !read_id_file(enrich_background_file, background_ids))
            return kExitFatal;
        auto q = c_strings(query_ids);
        auto b = c_strings(background_ids);
        lto_table* t = nullptr;
        status = lto_enrich(corpus.get(), q.data(), q.size(), b.data(), b.size(),
                            min_count, bonferroni ? 1 : 0, &t);
        table.reset(t);
    } else if (diff->parsed()) {
        std::vector<std::string> ga, gb;
        if (!read_id_file(group_a_file, ga) || !read_id_file(group_b_file, gb))
            return kExitFatal;
        auto a = c_strings(ga);
        auto b = c_strings(gb);
        lto_table* t = nullptr;
        status = lto_differential(corpus.get(), a.data(), a.size(), b.data(),
                                  b.size(), min_count, bonferroni ? 1 : 0, &t);
        table.reset(t);
    } else if (similar->parsed()) {
        double value = 0.0;
        status = lto_similarity(corpus.get(), story_a.c_str(), story_b.c_str(),
                                &value);
        if (status == LTO_OK) {
            if (opt.format == "tsv") {
                std::cout << "story_a\tstory_b\tsimilarity\n"
                          << story_a << '\t' << story_b << '\t'
                          << format_real(value) << '\n';
            } else {
                ordered_json obj;
                obj["story_a"] = story_a;
                obj["story_b"] = story_b;
                obj["similarity"] = value;
                std::cout << obj.dump() << '\n';
            }
            return kExitOk;
        }
    } else if (recommend->parsed()) {
        lto_table* t = nullptr;
        status = lto_recommend(corpus.get(), rec_story.c_str(), topk, &t);
        table.reset(t);
    } else if (cluster->parsed()) {
        lto_table* t = nullptr;
        status = lto_cluster(corpus.get(), threshold, &t);
        table.reset(t);
    }
    if (status != LTO_OK)
        return report_failure(status);
    print_table(table.get(), opt.format);
    return kExitOk;
}
