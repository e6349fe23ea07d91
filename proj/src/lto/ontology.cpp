#include "ontology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strings.hpp"

namespace lto {

namespace {

Diagnostic err(std::string code, std::string subject, std::string message,
               const ThemeEntry* at = nullptr) {
    Diagnostic d;
    d.severity = Severity::Error;
    d.code = std::move(code);
    d.subject = std::move(subject);
    d.message = std::move(message);
    if (at) {
        d.file = at->source_file;
        d.line = at->source_line;
    }
    return d;
}

struct BuildState {
    std::vector<std::string> names;
    std::vector<ThemeEntry> entries;
    std::unordered_map<std::string, int> by_name;
    std::unordered_map<std::string, int> by_alias;
    std::vector<std::vector<int>> parents;  // resolved edges only
};

// Name dedup + alias table + parent resolution. Appends errors; the caller
// decides whether the result is usable.
BuildState prepare(const std::vector<std::pair<std::string, ThemeEntry>>& input,
                   ValidationReport& report) {
    BuildState st;

    std::vector<std::pair<std::string, ThemeEntry>> sorted;
    sorted.reserve(input.size());
    for (const auto& [raw_name, entry] : input) {
        std::string name = str::nfc(str::trim(raw_name));
        ThemeEntry e = entry;
        for (auto& p : e.parents)
            p = str::nfc(str::trim(p));
        for (auto& a : e.aliases)
            a = str::nfc(str::trim(a));
        sorted.emplace_back(std::move(name), std::move(e));
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [name, entry] : sorted) {
        auto [it, fresh] = st.by_name.emplace(name, static_cast<int>(st.names.size()));
        if (!fresh) {
            report.diagnostics.push_back(err(
                "DUP_NAME", name, "theme '" + name + "' is defined more than once",
                &entry));
            continue;
        }
        st.names.push_back(name);
        st.entries.push_back(std::move(entry));
    }

    const int n = static_cast<int>(st.names.size());
    for (int i = 0; i < n; ++i) {
        for (const auto& alias : st.entries[i].aliases) {
            if (st.by_name.count(alias)) {
                report.diagnostics.push_back(err(
                    "ALIAS_CLASH", st.names[i],
                    "alias '" + alias + "' of theme '" + st.names[i] +
                        "' collides with a theme name",
                    &st.entries[i]));
                continue;
            }
            auto [it, fresh] = st.by_alias.emplace(alias, i);
            if (!fresh) {
                report.diagnostics.push_back(err(
                    "ALIAS_CLASH", st.names[i],
                    "alias '" + alias + "' of theme '" + st.names[i] +
                        "' is already claimed by theme '" + st.names[it->second] + "'",
                    &st.entries[i]));
            }
        }
    }

    st.parents.resize(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& pname : st.entries[i].parents) {
            int pi;
            if (auto it = st.by_name.find(pname); it != st.by_name.end()) {
                pi = it->second;
            } else if (auto ai = st.by_alias.find(pname); ai != st.by_alias.end()) {
                pi = ai->second;  // parents may be written as aliases
            } else {
                report.diagnostics.push_back(err(
                    "DANGLING_PARENT", st.names[i],
                    "theme '" + st.names[i] + "' names unknown parent '" + pname + "'",
                    &st.entries[i]));
                continue;
            }
            if (std::find(st.parents[i].begin(), st.parents[i].end(), pi) ==
                st.parents[i].end())
                st.parents[i].push_back(pi);
        }
    }
    return st;
}

// One witness per strongly connected component with a cycle. Tarjan for the
// components, then shortest parent-walk from the smallest member back to
// itself for a readable, reproducible path.
void report_cycles(const BuildState& st, ValidationReport& report) {
    const int n = static_cast<int>(st.names.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;

    // iterative Tarjan; frame = (node, next parent position)
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1)
            continue;
        std::vector<std::pair<int, size_t>> frames{{start, 0}};
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos == 0) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (pos < st.parents[v].size()) {
                int w = st.parents[v][pos++];
                if (index[w] == -1)
                    frames.emplace_back(w, 0);
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if (w == v)
                            break;
                    }
                    ++ncomp;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] =
                        std::min(low[frames.back().first], low[done]);
            }
        }
    }

    std::vector<std::vector<int>> members(ncomp);
    for (int i = 0; i < n; ++i)
        members[comp[i]].push_back(i);

    std::vector<int> cyclic;  // component representative = smallest index
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        bool self_loop = m.size() == 1 &&
                         std::find(st.parents[m[0]].begin(), st.parents[m[0]].end(),
                                   m[0]) != st.parents[m[0]].end();
        if (m.size() > 1 || self_loop)
            cyclic.push_back(m[0]);
    }
    std::sort(cyclic.begin(), cyclic.end());

    for (int s : cyclic) {
        // BFS over parent edges inside the component, smallest index first
        std::vector<int> prev(n, -1);
        std::vector<int> queue{s};
        std::vector<bool> seen(n, false);
        seen[s] = true;
        int back = -1;
        for (size_t qi = 0; qi < queue.size() && back == -1; ++qi) {
            int v = queue[qi];
            std::vector<int> ps = st.parents[v];
            std::sort(ps.begin(), ps.end());
            for (int w : ps) {
                if (comp[w] != comp[s])
                    continue;
                if (w == s) {
                    back = v;
                    break;
                }
                if (!seen[w]) {
                    seen[w] = true;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        std::vector<int> path;  // s .. back along parent edges
        for (int v = back; v != -1; v = prev[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        // child-to-parent walk closing on s: s -> parent-of-s -> ... -> s
        std::string msg = "cycle:";
        for (int v : path)
            msg += " " + st.names[v] + " ->";
        msg += " " + st.names[s];
        report.diagnostics.push_back(err("CYCLE", st.names[s], msg,
                                         &st.entries[s]));
    }
}

} // namespace

void finalize_report(ValidationReport& report) {
    std::stable_sort(report.diagnostics.begin(), report.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                         return std::tie(a.code, a.subject, a.file, a.line) <
                                std::tie(b.code, b.subject, b.file, b.line);
                     });
    report.error_count = 0;
    report.warning_count = 0;
    for (const auto& d : report.diagnostics)
        (d.severity == Severity::Error ? report.error_count : report.warning_count)++;
}

std::optional<ThemeOntology> ThemeOntology::build(
    const std::vector<std::pair<std::string, ThemeEntry>>& themes,
    ValidationReport& report) {
    BuildState st = prepare(themes, report);
    const int n = static_cast<int>(st.names.size());

    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
        if (st.parents[i].empty())
            roots.push_back(i);
    if (roots.size() != 1) {
        std::string msg;
        if (roots.empty()) {
            msg = "no parentless theme exists";
        } else {
            msg = "found " + std::to_string(roots.size()) + " parentless themes:";
            for (int r : roots)
                msg += " '" + st.names[r] + "'";
        }
        report.diagnostics.push_back(
            err("MULTI_ROOT", roots.empty() ? "" : st.names[roots[0]], msg,
                roots.empty() ? nullptr : &st.entries[roots[0]]));
    }

    report_cycles(st, report);

    finalize_report(report);
    if (report.error_count > 0)
        return std::nullopt;

    ThemeOntology ont;
    ont.names_ = std::move(st.names);
    ont.entries_ = std::move(st.entries);
    ont.by_name_ = std::move(st.by_name);
    ont.by_alias_ = std::move(st.by_alias);
    ont.parents_ = std::move(st.parents);
    ont.root_ = roots[0];
    for (auto& ps : ont.parents_)
        std::sort(ps.begin(), ps.end());

    // the exposed model carries canonical parent names: aliases resolved,
    // duplicates dropped, name order
    for (int i = 0; i < n; ++i) {
        auto& canon = ont.entries_[size_t(i)].parents;
        canon.clear();
        for (int p : ont.parents_[size_t(i)])
            canon.push_back(ont.names_[size_t(p)]);
    }

    ont.children_.resize(n);
    for (int i = 0; i < n; ++i)
        for (int p : ont.parents_[i])
            ont.children_[p].push_back(i);
    for (auto& cs : ont.children_)
        std::sort(cs.begin(), cs.end());

    // topological order via DFS over parents (acyclic by now)
    std::vector<int> topo;
    topo.reserve(n);
    {
        std::vector<int> state(n, 0);
        for (int i = 0; i < n; ++i) {
            if (state[i])
                continue;
            std::vector<std::pair<int, size_t>> frames{{i, 0}};
            state[i] = 1;
            while (!frames.empty()) {
                auto& [v, pos] = frames.back();
                if (pos < ont.parents_[v].size()) {
                    int w = ont.parents_[v][pos++];
                    if (!state[w]) {
                        state[w] = 1;
                        frames.emplace_back(w, 0);
                    }
                } else {
                    topo.push_back(v);  // parents first
                    frames.pop_back();
                }
            }
        }
    }

    ont.words_ = static_cast<size_t>((n + 63) / 64);
    ont.anc_.assign(static_cast<size_t>(n) * ont.words_, 0);
    ont.depth_.assign(n, 0);
    for (int v : topo) {
        uint64_t* row = ont.anc_.data() + static_cast<size_t>(v) * ont.words_;
        int d = 0;
        for (int p : ont.parents_[v]) {
            const uint64_t* prow = ont.anc_.data() + static_cast<size_t>(p) * ont.words_;
            for (size_t w = 0; w < ont.words_; ++w)
                row[w] |= prow[w];
            row[p >> 6] |= uint64_t{1} << (p & 63);
            d = std::max(d, ont.depth_[p] + 1);
        }
        ont.depth_[v] = d;
    }
    return ont;
}

const std::string* ThemeOntology::resolve(std::string_view name_or_alias) const {
    int i = index_of(name_or_alias);
    return i < 0 ? nullptr : &names_[i];
}

int ThemeOntology::index_of(std::string_view name_or_alias) const {
    std::string key = str::nfc(str::trim(name_or_alias));
    if (auto it = by_name_.find(key); it != by_name_.end())
        return it->second;
    if (auto it = by_alias_.find(key); it != by_alias_.end())
        return it->second;
    return -1;
}

const ThemeEntry* ThemeOntology::entry(std::string_view name_or_alias) const {
    int i = index_of(name_or_alias);
    return i < 0 ? nullptr : &entries_[i];
}

std::optional<std::vector<std::string>> ThemeOntology::ancestors(
    std::string_view name) const {
    int i = index_of(name);
    if (i < 0)
        return std::nullopt;
    std::vector<int> idx;
    const uint64_t* row = anc_.data() + static_cast<size_t>(i) * words_;
    for (int j = 0; j < size(); ++j)
        if (bit_test(row, j))
            idx.push_back(j);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::pair(depth_[a], a) < std::pair(depth_[b], b);
    });
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int j : idx)
        out.push_back(names_[j]);
    return out;
}

std::optional<std::vector<std::string>> ThemeOntology::descendants(
    std::string_view name) const {
    int i = index_of(name);
    if (i < 0)
        return std::nullopt;
    std::vector<int> idx;
    for (int j = 0; j < size(); ++j)
        if (is_ancestor(i, j))
            idx.push_back(j);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::pair(depth_[a], a) < std::pair(depth_[b], b);
    });
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int j : idx)
        out.push_back(names_[j]);
    return out;
}

std::optional<bool> ThemeOntology::subsumes(std::string_view general,
                                            std::string_view specific) const {
    int g = index_of(general), s = index_of(specific);
    if (g < 0 || s < 0)
        return std::nullopt;
    return g == s || is_ancestor(g, s);
}

std::vector<int> ThemeOntology::self_and_ancestors(int idx, bool include_root) const {
    std::vector<int> out;
    if (include_root || idx != root_)
        out.push_back(idx);
    const uint64_t* row = anc_.data() + static_cast<size_t>(idx) * words_;
    for (int j = 0; j < size(); ++j)
        if ((include_root || j != root_) && bit_test(row, j))
            out.push_back(j);
    return out;
}

OntologyStats ThemeOntology::stats() const {
    OntologyStats s;
    s.class_count = size();
    for (int i = 0; i < size(); ++i) {
        if (children_[i].empty())
            s.leaf_count++;
        if (parents_[i].size() > 1)
            s.multi_parent_count++;
        s.max_depth = std::max(s.max_depth, depth_[i]);
    }
    for (int c : children_[root_]) {
        int count = 0;
        for (int j = 0; j < size(); ++j)
            if (is_ancestor(c, j))
                count++;
        s.root_branch_sizes.emplace_back(names_[c], count);
    }
    return s;
}

std::vector<SearchHit> ThemeOntology::search(std::string_view query) const {
    std::string q = str::casefold(str::nfc(query));
    std::vector<SearchHit> hits;
    if (q.empty())
        return hits;
    // field priority: name beats alias beats definition
    for (int i = 0; i < size(); ++i) {
        const ThemeEntry& e = entries_[i];
        const char* field = nullptr;
        double score = 0;
        if (str::casefold(names_[i]).find(q) != std::string::npos) {
            field = "name";
            score = 3;
        } else {
            for (const auto& a : e.aliases) {
                if (str::casefold(a).find(q) != std::string::npos) {
                    field = "alias";
                    score = 2;
                    break;
                }
            }
            if (!field && str::casefold(e.definition).find(q) != std::string::npos) {
                field = "definition";
                score = 1;
            }
        }
        if (field)
            hits.push_back({names_[i], field, score});
    }
    std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score)
            return a.score > b.score;
        return a.name < b.name;
    });
    return hits;
}

ValidationReport validate_themes(
    const std::vector<std::pair<std::string, ThemeEntry>>& themes, bool strict_lint) {
    ValidationReport report;
    auto ont = ThemeOntology::build(themes, report);

    // curation lints are per-theme and do not need a valid DAG
    std::vector<std::pair<std::string, const ThemeEntry*>> sorted;
    for (const auto& [raw, e] : themes)
        sorted.emplace_back(str::nfc(str::trim(raw)), &e);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::set<std::string> seen;
    for (const auto& [name, e] : sorted) {
        if (!seen.insert(name).second)
            continue;  // duplicate already reported as DUP_NAME
        if (str::trim(e->definition).empty()) {
            Diagnostic d;
            d.severity = Severity::Warning;
            d.code = "NO_DEFINITION";
            d.subject = name;
            d.message = "theme '" + name + "' has no definition";
            d.file = e->source_file;
            d.line = e->source_line;
            report.diagnostics.push_back(d);
        }
        if (e->references.empty()) {
            Diagnostic d;
            d.severity = Severity::Warning;
            d.code = "NO_REFERENCE";
            d.subject = name;
            d.message = "theme '" + name + "' has no reference";
            d.file = e->source_file;
            d.line = e->source_line;
            report.diagnostics.push_back(d);
        }
    }

    // naming convention for the upper structure; needs depths, so only
    // applicable when the DAG built
    if (strict_lint && ont) {
        for (int i = 0; i < ont->size(); ++i) {
            if (ont->depth_at(i) > 2)
                continue;
            const std::string& name = ont->names()[i];
            if (!name.ends_with("thematic entity")) {
                Diagnostic d;
                d.severity = Severity::Warning;
                d.code = "SUFFIX_CONVENTION";
                d.subject = name;
                d.message = "upper-structure theme '" + name +
                            "' does not end with 'thematic entity'";
                d.file = ont->entry_at(i).source_file;
                d.line = ont->entry_at(i).source_line;
                report.diagnostics.push_back(d);
            }
        }
    }

    finalize_report(report);
    return report;
}

} // namespace lto
