/* lto - Literary Theme Ontology toolkit, public C interface.
 *
 * The library models a rooted is-a DAG of literary themes, parses and
 * canonicalizes the plain-text theme/story formats, exports OWL2, and runs
 * ontology-aware statistics over annotated story corpora.
 *
 * Conventions:
 *   - Every function that can fail returns lto_status; LTO_OK is 0.
 *   - On failure, lto_last_error() returns a message for the calling thread.
 *   - Objects returned through out-parameters are owned by the caller and
 *     released with the matching *_free function. Out-parameters are left
 *     NULL on failure unless documented otherwise.
 *   - Tabular results come back as lto_table: a column-named grid of typed
 *     cells. Row order is deterministic for fixed input.
 *   - All strings are UTF-8. Theme names are NFC-normalized internally;
 *     anywhere a theme name is accepted, an alias is accepted too.
 */

#ifndef LTO_H
#define LTO_H

#include <stddef.h>

#if defined(_WIN32)
#  define LTO_API __declspec(dllexport)
#else
#  define LTO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lto_status {
    LTO_OK = 0,
    LTO_E_INVALID_ARG = 1,             /* NULL handle, bad range, etc. */
    LTO_E_IO = 2,                      /* file unreadable */
    LTO_E_ENCODING = 3,                /* input is not valid UTF-8 */
    LTO_E_BUILD_FAILED = 4,            /* ontology has structural errors */
    LTO_E_UNKNOWN_THEME = 5,
    LTO_E_UNKNOWN_STORY = 6,
    LTO_E_DOMAIN = 7,                  /* statistical parameter out of range */
    LTO_E_EMPTY_QUERY = 8,
    LTO_E_QUERY_NOT_IN_BACKGROUND = 9,
    LTO_E_EMPTY_GROUP = 10,
    LTO_E_GROUP_OVERLAP = 11,
    LTO_E_INTERNAL = 12
} lto_status;

typedef enum lto_cell_kind {
    LTO_CELL_NONE = 0,
    LTO_CELL_TEXT = 1,
    LTO_CELL_INT = 2,
    LTO_CELL_REAL = 3,
    LTO_CELL_BOOL = 4
} lto_cell_kind;

typedef struct lto_ontology lto_ontology;
typedef struct lto_corpus lto_corpus;
typedef struct lto_table lto_table;

/* ------------------------------------------------------------------ misc */

LTO_API const char* lto_version(void);
LTO_API const char* lto_status_name(lto_status status);
/* Message for the most recent failure on this thread; never NULL. */
LTO_API const char* lto_last_error(void);
LTO_API void lto_text_free(char* text);

/* ----------------------------------------------------------------- table */

LTO_API size_t lto_table_nrows(const lto_table* table);
LTO_API size_t lto_table_ncols(const lto_table* table);
LTO_API const char* lto_table_col_name(const lto_table* table, size_t col);
LTO_API lto_cell_kind lto_table_cell_kind(const lto_table* table, size_t row,
                                          size_t col);
/* NULL / 0 / 0.0 when the cell has a different kind or is out of range. */
LTO_API const char* lto_table_cell_text(const lto_table* table, size_t row,
                                        size_t col);
LTO_API long long lto_table_cell_int(const lto_table* table, size_t row,
                                     size_t col);
LTO_API double lto_table_cell_real(const lto_table* table, size_t row, size_t col);
LTO_API void lto_table_free(lto_table* table);

/* -------------------------------------------------------------- ontology */

/* Parse + build from theme files. diagnostics (nullable out) always carries
 * the parse/build report with columns severity, code, subject, file, line,
 * message, even when the build fails. */
LTO_API lto_status lto_ontology_load_files(const char* const* theme_paths,
                                           size_t path_count,
                                           lto_ontology** out_ontology,
                                           lto_table** out_diagnostics);
LTO_API lto_status lto_ontology_load_text(const char* text, size_t length,
                                          lto_ontology** out_ontology,
                                          lto_table** out_diagnostics);
LTO_API void lto_ontology_free(lto_ontology* ontology);

/* Full validation pass over theme files, independent of build success.
 * Report columns as above. strict_lint adds the naming-convention lint. */
LTO_API lto_status lto_validate_files(const char* const* theme_paths,
                                      size_t path_count, int strict_lint,
                                      lto_table** out_report,
                                      int* out_theme_count, int* out_errors,
                                      int* out_warnings);

LTO_API int lto_ontology_class_count(const lto_ontology* ontology);
LTO_API const char* lto_ontology_root(const lto_ontology* ontology);
/* Canonical theme name for a name or alias; NULL when unknown. The pointer
 * stays valid for the ontology's lifetime. */
LTO_API const char* lto_resolve(const lto_ontology* ontology, const char* name);

/* Columns: stat TEXT, value INT. Branch rows use "root_branch_size:<name>". */
LTO_API lto_status lto_stats(const lto_ontology* ontology, lto_table** out_table);
/* Columns: name TEXT, depth INT. Ordered by (depth, name). */
LTO_API lto_status lto_ancestors(const lto_ontology* ontology, const char* name,
                                 lto_table** out_table);
LTO_API lto_status lto_descendants(const lto_ontology* ontology, const char* name,
                                   lto_table** out_table);
LTO_API lto_status lto_subsumes(const lto_ontology* ontology, const char* general,
                                const char* specific, int* out_subsumes);
/* Columns: name TEXT, field TEXT, score REAL. */
LTO_API lto_status lto_search(const lto_ontology* ontology, const char* query,
                              lto_table** out_table);
/* OWL2 functional-style syntax; release with lto_text_free. */
LTO_API lto_status lto_export_owl(const lto_ontology* ontology, char** out_text);

/* ---------------------------------------------------------------- corpus */

LTO_API lto_status lto_corpus_load_files(const char* const* theme_paths,
                                         size_t theme_path_count,
                                         const char* const* story_paths,
                                         size_t story_path_count,
                                         lto_corpus** out_corpus,
                                         lto_table** out_diagnostics);
LTO_API void lto_corpus_free(lto_corpus* corpus);
/* Borrowed view, valid while the corpus lives. */
LTO_API const lto_ontology* lto_corpus_ontology(const lto_corpus* corpus);
LTO_API int lto_corpus_story_count(const lto_corpus* corpus);

/* Columns: story_id TEXT. Stories annotated with the theme or a descendant. */
LTO_API lto_status lto_incidence(const lto_corpus* corpus, const char* theme,
                                 lto_table** out_table);

/* Columns: theme TEXT, k INT, n INT, K INT, N INT, p REAL, q REAL.
 * background_ids may be NULL/0 for "all stories". use_bonferroni != 0 swaps
 * the BH adjustment for Bonferroni. */
LTO_API lto_status lto_enrich(const lto_corpus* corpus,
                              const char* const* query_ids, size_t query_count,
                              const char* const* background_ids,
                              size_t background_count, int min_count,
                              int use_bonferroni, lto_table** out_table);

/* Columns: theme TEXT, hits_a INT, misses_a INT, hits_b INT, misses_b INT,
 * p REAL, q REAL. */
LTO_API lto_status lto_differential(const lto_corpus* corpus,
                                    const char* const* group_a, size_t a_count,
                                    const char* const* group_b, size_t b_count,
                                    int min_count, int use_bonferroni,
                                    lto_table** out_table);

LTO_API lto_status lto_similarity(const lto_corpus* corpus, const char* story_a,
                                  const char* story_b, double* out_similarity);
/* Columns: story_id TEXT, similarity REAL. Top-k, ties by id. */
LTO_API lto_status lto_recommend(const lto_corpus* corpus, const char* story_id,
                                 int k, lto_table** out_table);
/* Columns: cluster TEXT, story_id TEXT. One row per member; cluster label is
 * its smallest member id. */
LTO_API lto_status lto_cluster(const lto_corpus* corpus, double threshold,
                               lto_table** out_table);

/* ------------------------------------------------------------ statistics */

LTO_API lto_status lto_hypergeom_upper_tail(long long k, long long big_k,
                                            long long n, long long big_n,
                                            double* out_p);
LTO_API lto_status lto_fisher_two_sided(long long a, long long b, long long c,
                                        long long d, double* out_p);
/* out_q must hold count values. */
LTO_API lto_status lto_bh_adjust(const double* pvalues, size_t count,
                                 double* out_q);
LTO_API lto_status lto_bonferroni_adjust(const double* pvalues, size_t count,
                                         double* out_q);

/* --------------------------------------------------------- canonical form */

/* Reformat a document to canonical bytes (sorted blocks, fixed field order,
 * LF). Diagnostics as for loading. Fails only on invalid UTF-8. */
LTO_API lto_status lto_theme_doc_canonicalize(const char* text, size_t length,
                                              char** out_text,
                                              lto_table** out_diagnostics);
LTO_API lto_status lto_story_doc_canonicalize(const char* text, size_t length,
                                              char** out_text,
                                              lto_table** out_diagnostics);

#ifdef __cplusplus
}
#endif

#endif /* LTO_H */
