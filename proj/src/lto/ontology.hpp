#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "model.hpp"

namespace lto {

struct OntologyStats {
    int class_count = 0;
    int leaf_count = 0;
    int max_depth = 0;
    int multi_parent_count = 0;
    std::vector<std::pair<std::string, int>> root_branch_sizes;  // child of root -> proper descendant count
};

struct SearchHit {
    std::string name;
    std::string field;  // "name", "alias", or "definition"
    double score = 0;
};

// Immutable rooted is-a DAG. Construction validates; queries never mutate.
// All name lookups accept either a theme name or an alias.
class ThemeOntology {
public:
    // On failure returns nullopt; report then carries at least one error.
    // Structural errors are also appended to the report on success (none).
    static std::optional<ThemeOntology> build(
        const std::vector<std::pair<std::string, ThemeEntry>>& themes,
        ValidationReport& report);

    const std::string& root() const { return names_[root_]; }
    int size() const { return static_cast<int>(names_.size()); }

    // Canonical theme name for a name or alias; nullptr when unknown.
    const std::string* resolve(std::string_view name_or_alias) const;
    const ThemeEntry* entry(std::string_view name_or_alias) const;

    // Sorted by name (byte order of NFC-normalized UTF-8).
    const std::vector<std::string>& names() const { return names_; }
    const ThemeEntry& entry_at(int idx) const { return entries_[idx]; }

    // Proper ancestors / descendants ordered by (depth asc, name asc).
    // nullopt when the input name is unknown.
    std::optional<std::vector<std::string>> ancestors(std::string_view name) const;
    std::optional<std::vector<std::string>> descendants(std::string_view name) const;
    std::optional<bool> subsumes(std::string_view general, std::string_view specific) const;

    OntologyStats stats() const;
    std::vector<SearchHit> search(std::string_view query) const;

    // Index-based accessors for analytics hot paths.
    int index_of(std::string_view name_or_alias) const;  // -1 when unknown
    int root_index() const { return root_; }
    int depth_at(int idx) const { return depth_[idx]; }
    bool is_ancestor(int anc, int desc) const {
        return bit_test(anc_.data() + static_cast<size_t>(desc) * words_, anc);
    }
    const std::vector<int>& parents_of(int idx) const { return parents_[idx]; }
    const std::vector<int>& children_of(int idx) const { return children_[idx]; }
    // Indices of idx and all its proper ancestors. Weight vectors for
    // similarity never carry the root, so it can be filtered here.
    std::vector<int> self_and_ancestors(int idx, bool include_root) const;

private:
    ThemeOntology() = default;
    static bool bit_test(const uint64_t* row, int i) {
        return (row[i >> 6] >> (i & 63)) & 1u;
    }

    std::vector<std::string> names_;
    std::vector<ThemeEntry> entries_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    std::vector<uint64_t> anc_;  // row-major bitset, row = theme, bit = ancestor
    size_t words_ = 0;
    int root_ = -1;
    std::unordered_map<std::string, int> by_name_;
    std::unordered_map<std::string, int> by_alias_;
};

// Full validation: structural errors plus curation lints. strict_lint adds
// the upper-structure naming-convention check.
ValidationReport validate_themes(
    const std::vector<std::pair<std::string, ThemeEntry>>& themes,
    bool strict_lint);

// Sort + count helper shared by build/validate paths.
void finalize_report(ValidationReport& report);

} // namespace lto
