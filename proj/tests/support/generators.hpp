// Deterministic data generators for property tests. A fixed-seed splitmix64
// keeps every run identical; no <random> distributions because their output
// may differ across library versions.
#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lto/model.hpp"

namespace gen {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    int range(int lo, int hi) { return lo + int(below(uint64_t(hi - lo + 1))); }
    bool chance(int percent) { return int(below(100)) < percent; }
    template <typename T> void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }
};

inline std::string theme_name(Rng& rng, int index) {
    static const char* heads[] = {"quiet", "burning", "lost",   "iron",
                                  "hollow", "bright",  "broken", "silent"};
    static const char* tails[] = {"voyage", "bargain", "garden", "engine",
                                  "harbor", "signal",  "covenant", "method"};
    std::string name = heads[rng.below(8)];
    name += " ";
    name += tails[rng.below(8)];
    name += " " + std::to_string(index);
    return name;
}

// Random rooted DAG rendered as a theme document: node 0 is the only
// parentless entry, every later node picks parents among earlier nodes.
inline lto::ThemeDocument random_theme_document(Rng& rng, int n_nodes) {
    lto::ThemeDocument doc;
    std::vector<std::string> names;
    names.reserve(size_t(n_nodes));
    for (int i = 0; i < n_nodes; ++i)
        names.push_back(theme_name(rng, i));
    for (int i = 0; i < n_nodes; ++i) {
        lto::ThemeEntry entry;
        entry.definition = "About " + names[size_t(i)] + ".";
        if (rng.chance(80))
            entry.references.push_back("https://example.org/ref/" +
                                       std::to_string(i));
        if (i > 0) {
            int n_parents = rng.chance(15) ? rng.range(2, 3) : 1;
            std::set<int> picked;
            for (int p = 0; p < n_parents; ++p)
                picked.insert(int(rng.below(uint64_t(i))));
            for (int p : picked)
                entry.parents.push_back(names[size_t(p)]);
        }
        if (rng.chance(20))
            entry.aliases.push_back("aka " + std::to_string(i) + " " +
                                    std::to_string(rng.below(1000)));
        if (rng.chance(30))
            entry.notes = "Note line " + std::to_string(rng.below(50));
        if (rng.chance(25))
            entry.examples = "Example " + std::to_string(rng.below(50));
        doc.themes.emplace_back(names[size_t(i)], std::move(entry));
    }
    return doc;
}

inline std::map<std::string, std::vector<std::string>>
parent_map(const lto::ThemeDocument& doc) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& kv : doc.themes)
        out[kv.first] = kv.second.parents;
    return out;
}

// Random corpus over an existing list of theme names.
inline lto::StoryDocument random_story_document(
    Rng& rng, const std::vector<std::string>& themes, int n_stories) {
    lto::StoryDocument doc;
    for (int s = 0; s < n_stories; ++s) {
        std::string id = "story-" + std::to_string(s);
        lto::StoryEntry entry;
        entry.title = "Story " + std::to_string(s);
        entry.date = std::to_string(1950 + int(rng.below(70)));
        if (rng.chance(60))
            entry.collection = "collection-" + std::to_string(rng.below(3));
        int n_tags = rng.range(1, std::min<int>(6, int(themes.size())));
        std::set<std::string> used;
        for (int t = 0; t < n_tags; ++t) {
            const std::string& theme = themes[rng.below(themes.size())];
            if (!used.insert(theme).second)
                continue;
            lto::Annotation a;
            a.theme = theme;
            int tier = rng.range(0, 2);
            a.tier = tier == 0 ? lto::Tier::Choice
                    : tier == 1 ? lto::Tier::Major
                                : lto::Tier::Minor;
            if (rng.chance(25))
                a.comment = "comment " + std::to_string(rng.below(100));
            entry.annotations.push_back(std::move(a));
        }
        doc.stories.emplace_back(std::move(id), std::move(entry));
    }
    return doc;
}

// Random integer weight vectors keyed by small ints, for clustering oracles.
inline std::vector<std::pair<std::string, std::map<int, long long>>>
random_weight_vectors(Rng& rng, int n_items, int n_keys) {
    std::vector<std::pair<std::string, std::map<int, long long>>> out;
    for (int i = 0; i < n_items; ++i) {
        std::map<int, long long> w;
        int n = rng.range(1, n_keys);
        for (int t = 0; t < n; ++t)
            w[int(rng.below(uint64_t(n_keys)))] = rng.range(1, 3);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "item-%03d", i);
        out.emplace_back(buf, std::move(w));
    }
    return out;
}

} // namespace gen
