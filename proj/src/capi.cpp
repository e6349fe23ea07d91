#include "lto/lto.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "lto/analytics.hpp"
#include "lto/corpus_io.hpp"
#include "lto/exact_stats.hpp"
#include "lto/model.hpp"
#include "lto/ontology.hpp"
#include "lto/owl.hpp"
#include "lto/table.hpp"
#include "lto/text_format.hpp"

using lto::Table;

struct lto_ontology {
    lto::ThemeOntology impl;
};

struct lto_corpus {
    lto_ontology ontology;
    lto::AnnotatedCorpus corpus;
    std::unique_ptr<lto::Analytics> analytics;
};

struct lto_table {
    Table impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

lto_status fail(lto_status status, std::string msg) {
    set_error(std::move(msg));
    return status;
}

lto_status from_exception() {
    try {
        throw;
    } catch (const lto::IoError& e) {
        return fail(LTO_E_IO, e.what());
    } catch (const lto::EncodingError& e) {
        return fail(LTO_E_ENCODING, e.what());
    } catch (const lto::AnalyticsInputError& e) {
        if (e.code == "EMPTY_QUERY")
            return fail(LTO_E_EMPTY_QUERY, e.what());
        if (e.code == "QUERY_NOT_IN_BACKGROUND")
            return fail(LTO_E_QUERY_NOT_IN_BACKGROUND, e.what());
        if (e.code == "EMPTY_GROUP")
            return fail(LTO_E_EMPTY_GROUP, e.what());
        if (e.code == "GROUP_OVERLAP")
            return fail(LTO_E_GROUP_OVERLAP, e.what());
        if (e.code == "UNKNOWN_STORY")
            return fail(LTO_E_UNKNOWN_STORY, e.what());
        return fail(LTO_E_INVALID_ARG, e.what());
    } catch (const std::domain_error& e) {
        return fail(LTO_E_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LTO_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LTO_E_INTERNAL, e.what());
    } catch (...) {
        return fail(LTO_E_INTERNAL, "unknown error");
    }
}

std::vector<std::string> to_strings(const char* const* items, size_t count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i)
        out.emplace_back(items[i] ? items[i] : "");
    return out;
}

lto_table* make_table(Table t) {
    auto* out = new lto_table;
    out->impl = std::move(t);
    return out;
}

Table diagnostics_table(const std::vector<lto::Diagnostic>& diags) {
    Table t;
    t.columns = {"severity", "code", "subject", "file", "line", "message"};
    for (const auto& d : diags) {
        auto& row = t.add_row();
        row[0].value = std::string(d.severity == lto::Severity::Error ? "error"
                                                                      : "warning");
        row[1].value = d.code;
        row[2].value = d.subject;
        row[3].value = d.file;
        if (d.line > 0)
            row[4].value = static_cast<long long>(d.line);
        row[5].value = d.message;
    }
    return t;
}

char* dup_text(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lto_status load_ontology_common(lto::ThemeDocument doc,
                                std::vector<lto::Diagnostic> diags,
                                lto_ontology** out_ontology,
                                lto_table** out_diagnostics) {
    lto::ValidationReport report;
    auto built = lto::ThemeOntology::build(doc.themes, report);
    for (auto& d : report.diagnostics)
        diags.push_back(std::move(d));
    lto::ValidationReport sorter;
    sorter.diagnostics = std::move(diags);
    lto::finalize_report(sorter);
    if (out_diagnostics)
        *out_diagnostics = make_table(diagnostics_table(sorter.diagnostics));
    if (!built) {
        std::string msg = "ontology build failed";
        for (const auto& d : sorter.diagnostics) {
            if (d.severity == lto::Severity::Error) {
                msg += ": " + d.message;
                break;
            }
        }
        return fail(LTO_E_BUILD_FAILED, msg);
    }
    auto* handle = new lto_ontology{std::move(*built)};
    *out_ontology = handle;
    return LTO_OK;
}

} // namespace

extern "C" {

const char* lto_version(void) { return "0.1.0"; }

const char* lto_status_name(lto_status status) {
    switch (status) {
    case LTO_OK: return "ok";
    case LTO_E_INVALID_ARG: return "invalid argument";
    case LTO_E_IO: return "I/O error";
    case LTO_E_ENCODING: return "encoding error";
    case LTO_E_BUILD_FAILED: return "ontology build failed";
    case LTO_E_UNKNOWN_THEME: return "unknown theme";
    case LTO_E_UNKNOWN_STORY: return "unknown story";
    case LTO_E_DOMAIN: return "parameter out of domain";
    case LTO_E_EMPTY_QUERY: return "empty query";
    case LTO_E_QUERY_NOT_IN_BACKGROUND: return "query not in background";
    case LTO_E_EMPTY_GROUP: return "empty group";
    case LTO_E_GROUP_OVERLAP: return "groups overlap";
    case LTO_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lto_last_error(void) { return g_last_error.c_str(); }

void lto_text_free(char* text) { delete[] text; }

size_t lto_table_nrows(const lto_table* table) {
    return table ? table->impl.rows.size() : 0;
}

size_t lto_table_ncols(const lto_table* table) {
    return table ? table->impl.columns.size() : 0;
}

const char* lto_table_col_name(const lto_table* table, size_t col) {
    if (!table || col >= table->impl.columns.size())
        return nullptr;
    return table->impl.columns[col].c_str();
}

static const lto::Cell* cell_at(const lto_table* table, size_t row, size_t col) {
    if (!table || row >= table->impl.rows.size() ||
        col >= table->impl.columns.size())
        return nullptr;
    return &table->impl.rows[row][col];
}

lto_cell_kind lto_table_cell_kind(const lto_table* table, size_t row, size_t col) {
    const lto::Cell* c = cell_at(table, row, col);
    if (!c)
        return LTO_CELL_NONE;
    switch (c->value.index()) {
    case 1: return LTO_CELL_TEXT;
    case 2: return LTO_CELL_INT;
    case 3: return LTO_CELL_REAL;
    case 4: return LTO_CELL_BOOL;
    default: return LTO_CELL_NONE;
    }
}

const char* lto_table_cell_text(const lto_table* table, size_t row, size_t col) {
    const lto::Cell* c = cell_at(table, row, col);
    if (!c || !std::holds_alternative<std::string>(c->value))
        return nullptr;
    return std::get<std::string>(c->value).c_str();
}

long long lto_table_cell_int(const lto_table* table, size_t row, size_t col) {
    const lto::Cell* c = cell_at(table, row, col);
    if (!c)
        return 0;
    if (std::holds_alternative<long long>(c->value))
        return std::get<long long>(c->value);
    if (std::holds_alternative<bool>(c->value))
        return std::get<bool>(c->value) ? 1 : 0;
    return 0;
}

double lto_table_cell_real(const lto_table* table, size_t row, size_t col) {
    const lto::Cell* c = cell_at(table, row, col);
    if (!c || !std::holds_alternative<double>(c->value))
        return 0.0;
    return std::get<double>(c->value);
}

void lto_table_free(lto_table* table) { delete table; }

lto_status lto_ontology_load_files(const char* const* theme_paths,
                                   size_t path_count, lto_ontology** out_ontology,
                                   lto_table** out_diagnostics) {
    if (out_diagnostics)
        *out_diagnostics = nullptr;
    if (!out_ontology || (!theme_paths && path_count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_ontology_load_files");
    *out_ontology = nullptr;
    try {
        lto::ThemeDocument doc;
        std::vector<lto::Diagnostic> diags;
        for (size_t i = 0; i < path_count; ++i) {
            std::string path = theme_paths[i] ? theme_paths[i] : "";
            std::string text = lto::read_file(path);
            lto::ThemeDocument d = lto::parse_theme_document(text, path, diags);
            for (auto& t : d.themes)
                doc.themes.push_back(std::move(t));
        }
        return load_ontology_common(std::move(doc), std::move(diags),
                                    out_ontology, out_diagnostics);
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_ontology_load_text(const char* text, size_t length,
                                  lto_ontology** out_ontology,
                                  lto_table** out_diagnostics) {
    if (out_diagnostics)
        *out_diagnostics = nullptr;
    if (!out_ontology || (!text && length))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_ontology_load_text");
    *out_ontology = nullptr;
    try {
        std::vector<lto::Diagnostic> diags;
        lto::ThemeDocument doc = lto::parse_theme_document(
            std::string_view(text ? text : "", length), "<memory>", diags);
        return load_ontology_common(std::move(doc), std::move(diags),
                                    out_ontology, out_diagnostics);
    } catch (...) {
        return from_exception();
    }
}

void lto_ontology_free(lto_ontology* ontology) { delete ontology; }

lto_status lto_validate_files(const char* const* theme_paths, size_t path_count,
                              int strict_lint, lto_table** out_report,
                              int* out_theme_count, int* out_errors,
                              int* out_warnings) {
    if (!out_report || (!theme_paths && path_count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_validate_files");
    *out_report = nullptr;
    try {
        lto::ThemeDocument doc;
        std::vector<lto::Diagnostic> diags;
        for (size_t i = 0; i < path_count; ++i) {
            std::string path = theme_paths[i] ? theme_paths[i] : "";
            std::string text = lto::read_file(path);
            lto::ThemeDocument d = lto::parse_theme_document(text, path, diags);
            for (auto& t : d.themes)
                doc.themes.push_back(std::move(t));
        }
        lto::ValidationReport report = lto::validate_themes(doc.themes,
                                                            strict_lint != 0);
        for (auto& d : diags)
            report.diagnostics.push_back(std::move(d));
        lto::finalize_report(report);
        *out_report = make_table(diagnostics_table(report.diagnostics));
        if (out_theme_count)
            *out_theme_count = static_cast<int>(doc.themes.size());
        if (out_errors)
            *out_errors = report.error_count;
        if (out_warnings)
            *out_warnings = report.warning_count;
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

int lto_ontology_class_count(const lto_ontology* ontology) {
    return ontology ? ontology->impl.size() : 0;
}

const char* lto_ontology_root(const lto_ontology* ontology) {
    return ontology ? ontology->impl.root().c_str() : nullptr;
}

const char* lto_resolve(const lto_ontology* ontology, const char* name) {
    if (!ontology || !name)
        return nullptr;
    const std::string* canon = ontology->impl.resolve(name);
    return canon ? canon->c_str() : nullptr;
}

lto_status lto_stats(const lto_ontology* ontology, lto_table** out_table) {
    if (!ontology || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_stats");
    *out_table = nullptr;
    try {
        lto::OntologyStats s = ontology->impl.stats();
        Table t;
        t.columns = {"stat", "value"};
        auto add = [&](const std::string& key, long long value) {
            auto& row = t.add_row();
            row[0].value = key;
            row[1].value = value;
        };
        add("class_count", s.class_count);
        add("leaf_count", s.leaf_count);
        add("max_depth", s.max_depth);
        add("multi_parent_count", s.multi_parent_count);
        for (const auto& [branch, size] : s.root_branch_sizes)
            add("root_branch_size:" + branch, size);
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

static lto_status closure_table(const lto_ontology* ontology, const char* name,
                                bool up, lto_table** out_table) {
    if (!ontology || !name || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to closure query");
    *out_table = nullptr;
    try {
        auto list = up ? ontology->impl.ancestors(name)
                       : ontology->impl.descendants(name);
        if (!list)
            return fail(LTO_E_UNKNOWN_THEME,
                        "unknown theme '" + std::string(name) + "'");
        Table t;
        t.columns = {"name", "depth"};
        for (const auto& n : *list) {
            auto& row = t.add_row();
            row[0].value = n;
            row[1].value = static_cast<long long>(
                ontology->impl.depth_at(ontology->impl.index_of(n)));
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_ancestors(const lto_ontology* ontology, const char* name,
                         lto_table** out_table) {
    return closure_table(ontology, name, true, out_table);
}

lto_status lto_descendants(const lto_ontology* ontology, const char* name,
                           lto_table** out_table) {
    return closure_table(ontology, name, false, out_table);
}

lto_status lto_subsumes(const lto_ontology* ontology, const char* general,
                        const char* specific, int* out_subsumes) {
    if (!ontology || !general || !specific || !out_subsumes)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_subsumes");
    try {
        auto r = ontology->impl.subsumes(general, specific);
        if (!r)
            return fail(LTO_E_UNKNOWN_THEME, "unknown theme in subsumes query");
        *out_subsumes = *r ? 1 : 0;
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_search(const lto_ontology* ontology, const char* query,
                      lto_table** out_table) {
    if (!ontology || !query || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_search");
    *out_table = nullptr;
    try {
        Table t;
        t.columns = {"name", "field", "score"};
        for (const auto& hit : ontology->impl.search(query)) {
            auto& row = t.add_row();
            row[0].value = hit.name;
            row[1].value = hit.field;
            row[2].value = hit.score;
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_export_owl(const lto_ontology* ontology, char** out_text) {
    if (!ontology || !out_text)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_export_owl");
    *out_text = nullptr;
    try {
        *out_text = dup_text(lto::export_owl(ontology->impl));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_corpus_load_files(const char* const* theme_paths,
                                 size_t theme_path_count,
                                 const char* const* story_paths,
                                 size_t story_path_count, lto_corpus** out_corpus,
                                 lto_table** out_diagnostics) {
    if (out_diagnostics)
        *out_diagnostics = nullptr;
    if (!out_corpus || (!theme_paths && theme_path_count) ||
        (!story_paths && story_path_count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_corpus_load_files");
    *out_corpus = nullptr;
    try {
        lto::LoadResult res = lto::load_corpus(
            to_strings(theme_paths, theme_path_count),
            to_strings(story_paths, story_path_count));
        if (out_diagnostics)
            *out_diagnostics = make_table(diagnostics_table(res.diagnostics));
        if (!res.ontology) {
            std::string msg = "ontology build failed";
            for (const auto& d : res.diagnostics) {
                if (d.severity == lto::Severity::Error) {
                    msg += ": " + d.message;
                    break;
                }
            }
            return fail(LTO_E_BUILD_FAILED, msg);
        }
        auto* handle = new lto_corpus{lto_ontology{std::move(*res.ontology)},
                                      std::move(res.corpus), nullptr};
        handle->analytics = std::make_unique<lto::Analytics>(
            handle->ontology.impl, handle->corpus);
        *out_corpus = handle;
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

void lto_corpus_free(lto_corpus* corpus) { delete corpus; }

const lto_ontology* lto_corpus_ontology(const lto_corpus* corpus) {
    return corpus ? &corpus->ontology : nullptr;
}

int lto_corpus_story_count(const lto_corpus* corpus) {
    return corpus ? static_cast<int>(corpus->corpus.stories.size()) : 0;
}

lto_status lto_incidence(const lto_corpus* corpus, const char* theme,
                         lto_table** out_table) {
    if (!corpus || !theme || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_incidence");
    *out_table = nullptr;
    try {
        auto inc = corpus->analytics->incidence_of(theme);
        if (!inc)
            return fail(LTO_E_UNKNOWN_THEME,
                        "unknown theme '" + std::string(theme) + "'");
        Table t;
        t.columns = {"story_id"};
        for (const auto& id : *inc) {
            auto& row = t.add_row();
            row[0].value = id;
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_enrich(const lto_corpus* corpus, const char* const* query_ids,
                      size_t query_count, const char* const* background_ids,
                      size_t background_count, int min_count, int use_bonferroni,
                      lto_table** out_table) {
    if (!corpus || !out_table || (!query_ids && query_count) ||
        (!background_ids && background_count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_enrich");
    *out_table = nullptr;
    try {
        auto rows = corpus->analytics->enrich(
            to_strings(query_ids, query_count),
            to_strings(background_ids, background_count), min_count,
            use_bonferroni ? lto::Adjust::Bonferroni : lto::Adjust::BH);
        Table t;
        t.columns = {"theme", "k", "n", "K", "N", "p", "q"};
        for (const auto& r : rows) {
            auto& row = t.add_row();
            row[0].value = r.theme;
            row[1].value = static_cast<long long>(r.k);
            row[2].value = static_cast<long long>(r.n);
            row[3].value = static_cast<long long>(r.K);
            row[4].value = static_cast<long long>(r.N);
            row[5].value = r.p;
            row[6].value = r.q;
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_differential(const lto_corpus* corpus, const char* const* group_a,
                            size_t a_count, const char* const* group_b,
                            size_t b_count, int min_count, int use_bonferroni,
                            lto_table** out_table) {
    if (!corpus || !out_table || (!group_a && a_count) || (!group_b && b_count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_differential");
    *out_table = nullptr;
    try {
        auto rows = corpus->analytics->differential(
            to_strings(group_a, a_count), to_strings(group_b, b_count), min_count,
            use_bonferroni ? lto::Adjust::Bonferroni : lto::Adjust::BH);
        Table t;
        t.columns = {"theme", "hits_a", "misses_a", "hits_b", "misses_b", "p", "q"};
        for (const auto& r : rows) {
            auto& row = t.add_row();
            row[0].value = r.theme;
            row[1].value = static_cast<long long>(r.hits_a);
            row[2].value = static_cast<long long>(r.misses_a);
            row[3].value = static_cast<long long>(r.hits_b);
            row[4].value = static_cast<long long>(r.misses_b);
            row[5].value = r.p;
            row[6].value = r.q;
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_similarity(const lto_corpus* corpus, const char* story_a,
                          const char* story_b, double* out_similarity) {
    if (!corpus || !story_a || !story_b || !out_similarity)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_similarity");
    try {
        auto s = corpus->analytics->similarity(story_a, story_b);
        if (!s)
            return fail(LTO_E_UNKNOWN_STORY, "unknown story in similarity query");
        *out_similarity = *s;
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_recommend(const lto_corpus* corpus, const char* story_id, int k,
                         lto_table** out_table) {
    if (!corpus || !story_id || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_recommend");
    if (k < 1)
        return fail(LTO_E_INVALID_ARG, "k must be at least 1");
    *out_table = nullptr;
    try {
        auto recs = corpus->analytics->recommend(story_id, k);
        if (!recs)
            return fail(LTO_E_UNKNOWN_STORY,
                        "unknown story '" + std::string(story_id) + "'");
        Table t;
        t.columns = {"story_id", "similarity"};
        for (const auto& r : *recs) {
            auto& row = t.add_row();
            row[0].value = r.story_id;
            row[1].value = r.similarity;
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_cluster(const lto_corpus* corpus, double threshold,
                       lto_table** out_table) {
    if (!corpus || !out_table)
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_cluster");
    if (!(threshold >= 0.0 && threshold <= 1.0))
        return fail(LTO_E_DOMAIN, "threshold must be in [0, 1]");
    *out_table = nullptr;
    try {
        Table t;
        t.columns = {"cluster", "story_id"};
        for (const auto& c : corpus->analytics->cluster(threshold)) {
            for (const auto& m : c.members) {
                auto& row = t.add_row();
                row[0].value = c.label;
                row[1].value = m;
            }
        }
        *out_table = make_table(std::move(t));
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_hypergeom_upper_tail(long long k, long long big_k, long long n,
                                    long long big_n, double* out_p) {
    if (!out_p)
        return fail(LTO_E_INVALID_ARG, "out_p is NULL");
    try {
        *out_p = lto::stats::hypergeom_upper_tail(k, big_k, n, big_n);
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_fisher_two_sided(long long a, long long b, long long c,
                                long long d, double* out_p) {
    if (!out_p)
        return fail(LTO_E_INVALID_ARG, "out_p is NULL");
    try {
        *out_p = lto::stats::fisher_two_sided(a, b, c, d);
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_bh_adjust(const double* pvalues, size_t count, double* out_q) {
    if ((!pvalues && count) || (!out_q && count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_bh_adjust");
    try {
        std::vector<double> p(pvalues, pvalues + count);
        std::vector<double> q = lto::stats::bh_adjust(p);
        for (size_t i = 0; i < count; ++i)
            out_q[i] = q[i];
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_bonferroni_adjust(const double* pvalues, size_t count,
                                 double* out_q) {
    if ((!pvalues && count) || (!out_q && count))
        return fail(LTO_E_INVALID_ARG, "bad arguments to lto_bonferroni_adjust");
    try {
        std::vector<double> p(pvalues, pvalues + count);
        std::vector<double> q = lto::stats::bonferroni_adjust(p);
        for (size_t i = 0; i < count; ++i)
            out_q[i] = q[i];
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

static lto_status canonicalize_common(const char* text, size_t length,
                                      bool themes, char** out_text,
                                      lto_table** out_diagnostics) {
    if (out_diagnostics)
        *out_diagnostics = nullptr;
    if (!out_text || (!text && length))
        return fail(LTO_E_INVALID_ARG, "bad arguments to canonicalize");
    *out_text = nullptr;
    try {
        std::vector<lto::Diagnostic> diags;
        std::string_view in(text ? text : "", length);
        std::string out;
        if (themes) {
            lto::ThemeDocument doc = lto::parse_theme_document(in, "<memory>",
                                                               diags);
            out = lto::serialize_theme_document(doc);
        } else {
            lto::StoryDocument doc = lto::parse_story_document(in, "<memory>",
                                                               diags);
            out = lto::serialize_story_document(doc);
        }
        if (out_diagnostics)
            *out_diagnostics = make_table(diagnostics_table(diags));
        *out_text = dup_text(out);
        return LTO_OK;
    } catch (...) {
        return from_exception();
    }
}

lto_status lto_theme_doc_canonicalize(const char* text, size_t length,
                                      char** out_text,
                                      lto_table** out_diagnostics) {
    return canonicalize_common(text, length, true, out_text, out_diagnostics);
}

lto_status lto_story_doc_canonicalize(const char* text, size_t length,
                                      char** out_text,
                                      lto_table** out_diagnostics) {
    return canonicalize_common(text, length, false, out_text, out_diagnostics);
}

} // extern "C"
