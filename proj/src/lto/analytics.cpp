#include "analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "exact_stats.hpp"

namespace lto {

Analytics::Analytics(const ThemeOntology& ont, const AnnotatedCorpus& corpus)
    : ont_(ont), corpus_(corpus) {
    const int nthemes = ont.size();
    const int nstories = static_cast<int>(corpus.stories.size());
    weights_.resize(nstories);
    incidence_.resize(nthemes);

    for (int si = 0; si < nstories; ++si) {
        const StoryEntry& story = corpus.stories[si].second;
        std::map<int, int> w;         // similarity weights, no root
        std::set<int> touched;        // incidence closure, root included
        for (const Annotation& a : story.annotations) {
            int ti = ont.index_of(a.theme);
            if (ti < 0)
                continue;  // corpus was cross-checked; stay safe anyway
            int tw = tier_weight(a.tier);
            for (int anc : ont.self_and_ancestors(ti, false)) {
                auto [it, fresh] = w.emplace(anc, tw);
                if (!fresh)
                    it->second = std::max(it->second, tw);
            }
            for (int anc : ont.self_and_ancestors(ti, true))
                touched.insert(anc);
        }
        weights_[si].assign(w.begin(), w.end());
        for (int ti : touched)
            incidence_[ti].push_back(si);
    }
}

std::optional<std::vector<std::string>> Analytics::incidence_of(
    std::string_view theme) const {
    int ti = ont_.index_of(theme);
    if (ti < 0)
        return std::nullopt;
    std::vector<std::string> out;
    out.reserve(incidence_[ti].size());
    for (int si : incidence_[ti])
        out.push_back(corpus_.stories[si].first);
    return out;
}

std::vector<int> Analytics::resolve_stories(const std::vector<std::string>& ids,
                                            const char* what) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        int si = corpus_.index_of(id);
        if (si < 0)
            throw AnalyticsInputError(
                "UNKNOWN_STORY",
                std::string(what) + " names unknown story '" + id + "'");
        out.push_back(si);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EnrichmentRow> Analytics::enrich(
    const std::vector<std::string>& query_ids,
    const std::vector<std::string>& background_ids, int min_count,
    Adjust adjust) const {
    std::vector<int> query = resolve_stories(query_ids, "query");
    if (query.empty())
        throw AnalyticsInputError("EMPTY_QUERY", "query set is empty");
    std::vector<int> background;
    if (background_ids.empty()) {
        background.resize(corpus_.stories.size());
        for (size_t i = 0; i < background.size(); ++i)
            background[i] = static_cast<int>(i);
    } else {
        background = resolve_stories(background_ids, "background");
    }
    if (!std::includes(background.begin(), background.end(), query.begin(),
                       query.end()))
        throw AnalyticsInputError("QUERY_NOT_IN_BACKGROUND",
                                  "query contains stories outside the background");

    const int n = static_cast<int>(query.size());
    const int N = static_cast<int>(background.size());
    std::vector<EnrichmentRow> rows;
    for (int ti = 0; ti < ont_.size(); ++ti) {
        if (ti == ont_.root_index())
            continue;  // trivially p = 1 whenever the query is annotated
        const auto& inc = incidence_[ti];
        if (static_cast<int>(inc.size()) < min_count)
            continue;  // K can never reach min_count
        int K = static_cast<int>(std::count_if(
            background.begin(), background.end(), [&](int si) {
                return std::binary_search(inc.begin(), inc.end(), si);
            }));
        if (K < min_count)
            continue;
        int k = static_cast<int>(
            std::count_if(query.begin(), query.end(), [&](int si) {
                return std::binary_search(inc.begin(), inc.end(), si);
            }));
        EnrichmentRow row;
        row.theme = ont_.names()[ti];
        row.k = k;
        row.n = n;
        row.K = K;
        row.N = N;
        row.p = stats::hypergeom_upper_tail(k, K, n, N);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.p != b.p)
            return a.p < b.p;
        return a.theme < b.theme;
    });
    std::vector<double> ps;
    ps.reserve(rows.size());
    for (const auto& r : rows)
        ps.push_back(r.p);
    std::vector<double> qs = adjust == Adjust::BH ? stats::bh_adjust(ps)
                                                  : stats::bonferroni_adjust(ps);
    for (size_t i = 0; i < rows.size(); ++i)
        rows[i].q = qs[i];
    return rows;
}

std::vector<DifferentialRow> Analytics::differential(
    const std::vector<std::string>& group_a, const std::vector<std::string>& group_b,
    int min_count, Adjust adjust) const {
    std::vector<int> ga = resolve_stories(group_a, "group A");
    std::vector<int> gb = resolve_stories(group_b, "group B");
    if (ga.empty() || gb.empty())
        throw AnalyticsInputError("EMPTY_GROUP", "both groups must be nonempty");
    std::vector<int> overlap;
    std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
        throw AnalyticsInputError(
            "GROUP_OVERLAP", "story '" + corpus_.stories[overlap[0]].first +
                                 "' appears in both groups");

    std::vector<DifferentialRow> rows;
    for (int ti = 0; ti < ont_.size(); ++ti) {
        const auto& inc = incidence_[ti];
        if (static_cast<int>(inc.size()) < min_count)
            continue;  // hits_a + hits_b can never reach min_count
        auto hits = [&](const std::vector<int>& g) {
            return static_cast<int>(
                std::count_if(g.begin(), g.end(), [&](int si) {
                    return std::binary_search(inc.begin(), inc.end(), si);
                }));
        };
        DifferentialRow row;
        row.hits_a = hits(ga);
        row.hits_b = hits(gb);
        if (row.hits_a + row.hits_b < min_count)
            continue;
        row.theme = ont_.names()[ti];
        row.misses_a = static_cast<int>(ga.size()) - row.hits_a;
        row.misses_b = static_cast<int>(gb.size()) - row.hits_b;
        row.p = stats::fisher_two_sided(row.hits_a, row.misses_a, row.hits_b,
                                        row.misses_b);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.p != b.p)
            return a.p < b.p;
        return a.theme < b.theme;
    });
    std::vector<double> ps;
    ps.reserve(rows.size());
    for (const auto& r : rows)
        ps.push_back(r.p);
    std::vector<double> qs = adjust == Adjust::BH ? stats::bh_adjust(ps)
                                                  : stats::bonferroni_adjust(ps);
    for (size_t i = 0; i < rows.size(); ++i)
        rows[i].q = qs[i];
    return rows;
}

double Analytics::similarity_at(int a, int b) const {
    const auto& wa = weights_[a];
    const auto& wb = weights_[b];
    long long num = 0, den = 0;
    size_t i = 0, j = 0;
    while (i < wa.size() || j < wb.size()) {
        int va = 0, vb = 0;
        if (j >= wb.size() || (i < wa.size() && wa[i].first < wb[j].first)) {
            va = wa[i++].second;
        } else if (i >= wa.size() || wb[j].first < wa[i].first) {
            vb = wb[j++].second;
        } else {
            va = wa[i++].second;
            vb = wb[j++].second;
        }
        num += std::min(va, vb);
        den += std::max(va, vb);
    }
    if (den == 0)
        return 0.0;  // at least one story carries no themes
    return double(num) / double(den);
}

std::optional<double> Analytics::similarity(const std::string& a,
                                            const std::string& b) const {
    int ia = corpus_.index_of(a), ib = corpus_.index_of(b);
    if (ia < 0 || ib < 0)
        return std::nullopt;
    return similarity_at(ia, ib);
}

std::optional<std::vector<Recommendation>> Analytics::recommend(
    const std::string& story_id, int k) const {
    int si = corpus_.index_of(story_id);
    if (si < 0)
        return std::nullopt;
    std::vector<Recommendation> recs;
    for (size_t j = 0; j < corpus_.stories.size(); ++j) {
        if (static_cast<int>(j) == si)
            continue;
        recs.push_back({corpus_.stories[j].first,
                        similarity_at(si, static_cast<int>(j))});
    }
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
        if (a.similarity != b.similarity)
            return a.similarity > b.similarity;
        return a.story_id < b.story_id;
    });
    if (k >= 0 && recs.size() > static_cast<size_t>(k))
        recs.resize(k);
    return recs;
}

std::vector<Cluster> Analytics::cluster(double threshold) const {
    const int m = static_cast<int>(corpus_.stories.size());
    // average linkage tracked as exact pair sums: sums merge additively, so
    // the division happens only at comparison time
    std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            dist[i][j] = dist[j][i] = 1.0 - similarity_at(i, j);

    struct Node {
        std::vector<int> members;  // sorted
        bool alive = true;
    };
    std::vector<Node> nodes(m);
    std::vector<std::vector<double>> sum(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        nodes[i].members = {i};
        for (int j = 0; j < m; ++j)
            sum[i][j] = dist[i][j];
    }

    auto label_of = [&](const Node& n) -> const std::string& {
        return corpus_.stories[n.members.front()].first;
    };

    while (true) {
        int best_a = -1, best_b = -1;
        double best_d = 0.0;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
            if (!nodes[i].alive)
                continue;
            for (int j = i + 1; j < static_cast<int>(nodes.size()); ++j) {
                if (!nodes[j].alive)
                    continue;
                double d = sum[i][j] / (double(nodes[i].members.size()) *
                                        double(nodes[j].members.size()));
                if (best_a < 0) {
                    best_a = i, best_b = j, best_d = d;
                    continue;
                }
                // tie-break on the lexicographically smallest label pair
                auto key = [&](int x, int y) {
                    const std::string &lx = label_of(nodes[x]), &ly = label_of(nodes[y]);
                    return lx < ly ? std::pair(lx, ly) : std::pair(ly, lx);
                };
                if (d < best_d || (d == best_d && key(i, j) < key(best_a, best_b))) {
                    best_a = i, best_b = j, best_d = d;
                }
            }
        }
        if (best_a < 0 || best_d > threshold)
            break;

        Node merged;
        merged.members.resize(nodes[best_a].members.size() +
                              nodes[best_b].members.size());
        std::merge(nodes[best_a].members.begin(), nodes[best_a].members.end(),
                   nodes[best_b].members.begin(), nodes[best_b].members.end(),
                   merged.members.begin());
        nodes[best_a].alive = false;
        nodes[best_b].alive = false;
        int ni = static_cast<int>(nodes.size());
        for (auto& row : sum)
            row.push_back(0.0);
        sum.emplace_back(ni + 1, 0.0);
        for (int i = 0; i < ni; ++i) {
            if (!nodes[i].alive)
                continue;
            sum[ni][i] = sum[i][ni] = sum[std::min(i, best_a)][std::max(i, best_a)] +
                                      sum[std::min(i, best_b)][std::max(i, best_b)];
        }
        nodes.push_back(std::move(merged));
        if (std::count_if(nodes.begin(), nodes.end(),
                          [](const Node& n) { return n.alive; }) < 2)
            break;
    }

    std::vector<Cluster> out;
    for (const Node& n : nodes) {
        if (!n.alive)
            continue;
        Cluster c;
        c.label = corpus_.stories[n.members.front()].first;
        for (int si : n.members)
            c.members.push_back(corpus_.stories[si].first);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.label < b.label; });
    return out;
}

} // namespace lto
