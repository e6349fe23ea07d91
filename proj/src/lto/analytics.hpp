#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "ontology.hpp"

namespace lto {

// Bad caller input (empty query, overlapping groups, unknown ids). The code
// is a stable identifier suitable for exit paths and the C API.
struct AnalyticsInputError : std::runtime_error {
    std::string code;
    AnalyticsInputError(std::string code_, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code_)) {}
};

struct EnrichmentRow {
    std::string theme;
    int k = 0, n = 0, K = 0, N = 0;
    double p = 1.0, q = 1.0;
};

struct DifferentialRow {
    std::string theme;
    int hits_a = 0, misses_a = 0, hits_b = 0, misses_b = 0;
    double p = 1.0, q = 1.0;
};

struct Recommendation {
    std::string story_id;
    double similarity = 0.0;
};

struct Cluster {
    std::string label;  // smallest member id
    std::vector<std::string> members;
};

enum class Adjust { BH, Bonferroni };

// Immutable view over (ontology, corpus) with the ancestor propagation done
// once up front. All queries are const and deterministic.
class Analytics {
public:
    Analytics(const ThemeOntology& ont, const AnnotatedCorpus& corpus);

    // Stories carrying the theme or any descendant of it, ids sorted.
    std::optional<std::vector<std::string>> incidence_of(std::string_view theme) const;

    // background empty means "all stories".
    std::vector<EnrichmentRow> enrich(const std::vector<std::string>& query_ids,
                                      const std::vector<std::string>& background_ids,
                                      int min_count, Adjust adjust) const;

    std::vector<DifferentialRow> differential(
        const std::vector<std::string>& group_a,
        const std::vector<std::string>& group_b, int min_count,
        Adjust adjust) const;

    std::optional<double> similarity(const std::string& a, const std::string& b) const;
    std::optional<std::vector<Recommendation>> recommend(const std::string& story_id,
                                                         int k) const;
    std::vector<Cluster> cluster(double threshold) const;

    const ThemeOntology& ontology() const { return ont_; }
    const AnnotatedCorpus& corpus() const { return corpus_; }

private:
    double similarity_at(int a, int b) const;
    std::vector<int> resolve_stories(const std::vector<std::string>& ids,
                                     const char* what) const;

    const ThemeOntology& ont_;
    const AnnotatedCorpus& corpus_;
    // per story: (theme index, weight) sorted by theme index; root excluded
    std::vector<std::vector<std::pair<int, int>>> weights_;
    // per theme index: sorted story indices (root included here)
    std::vector<std::vector<int>> incidence_;
};

} // namespace lto
