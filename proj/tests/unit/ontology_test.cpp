#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lto/corpus_io.hpp"
#include "lto/ontology.hpp"
#include "lto/text_format.hpp"

#include "generators.hpp"
#include "oracles.hpp"

namespace {

using Themes = std::vector<std::pair<std::string, lto::ThemeEntry>>;

lto::ThemeEntry theme(std::vector<std::string> parents,
                      std::vector<std::string> aliases = {}) {
    lto::ThemeEntry e;
    e.definition = "A test theme.";
    e.parents = std::move(parents);
    e.aliases = std::move(aliases);
    e.references.push_back("https://example.org/x");
    return e;
}

std::optional<lto::ThemeOntology> build(const Themes& themes,
                                        lto::ValidationReport* out = nullptr) {
    lto::ValidationReport report;
    auto ont = lto::ThemeOntology::build(themes, report);
    if (out)
        *out = report;
    return ont;
}

bool has_code(const lto::ValidationReport& r, const std::string& code) {
    return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                       [&](const auto& d) { return d.code == code; });
}

const lto::Diagnostic* first_of(const lto::ValidationReport& r,
                                const std::string& code) {
    for (const auto& d : r.diagnostics)
        if (d.code == code)
            return &d;
    return nullptr;
}

lto::ThemeDocument fixture_themes() {
    std::vector<lto::Diagnostic> diags;
    std::string text = lto::read_file(std::string(LTO_DATA_DIR) +
                                      "/fixture/fixture.lto.txt");
    return lto::parse_theme_document(text, "fixture.lto.txt", diags);
}

} // namespace

TEST_CASE("fixture ontology builds and reports expected shape") {
    lto::ValidationReport report;
    auto ont = build(fixture_themes().themes, &report);
    REQUIRE(ont.has_value());
    CHECK(report.error_count == 0);
    CHECK(ont->size() == 20);
    CHECK(ont->root() == "literary thematic entity");

    auto stats = ont->stats();
    CHECK(stats.class_count == 20);
    CHECK(stats.max_depth == 5);
    CHECK(stats.multi_parent_count == 0);
    REQUIRE(stats.root_branch_sizes.size() == 3);
    // sorted by child name; sizes are proper descendant counts
    CHECK(stats.root_branch_sizes[0].first == "speculative fiction thematic entity");
    CHECK(stats.root_branch_sizes[0].second == 7);
    CHECK(stats.root_branch_sizes[1].first == "the human condition thematic entity");
    CHECK(stats.root_branch_sizes[1].second == 9);
    CHECK(stats.root_branch_sizes[2].first == "the pursuit of knowledge thematic entity");
    CHECK(stats.root_branch_sizes[2].second == 0);
}

TEST_CASE("fixture closure queries") {
    auto ont = build(fixture_themes().themes);
    REQUIRE(ont.has_value());

    auto anc = ont->ancestors("Venusian extraterrestrial");
    REQUIRE(anc.has_value());
    // depth ascending, so the root comes first
    CHECK(*anc == std::vector<std::string>{
                      "literary thematic entity",
                      "speculative fiction thematic entity",
                      "locationally distinguished being",
                      "extraterrestrial being",
                  });

    auto desc = ont->descendants("extraterrestrial being");
    REQUIRE(desc.has_value());
    CHECK(*desc == std::vector<std::string>{"Venusian extraterrestrial",
                                            "mysterious maker alien race"});

    CHECK(*ont->subsumes("extraterrestrial being", "Venusian extraterrestrial"));
    CHECK(*ont->subsumes("extraterrestrial being", "extraterrestrial being"));
    CHECK_FALSE(*ont->subsumes("Venusian extraterrestrial",
                               "extraterrestrial being"));
    CHECK(*ont->subsumes("literary thematic entity", "Dyson sphere"));
    CHECK_FALSE(ont->subsumes("no such theme", "Dyson sphere").has_value());
}

TEST_CASE("aliases resolve everywhere") {
    auto ont = build(fixture_themes().themes);
    REQUIRE(ont.has_value());
    REQUIRE(ont->resolve("vengeance") != nullptr);
    CHECK(*ont->resolve("vengeance") == "the desire for vengeance");
    REQUIRE(ont->resolve("WMD") != nullptr);
    CHECK(*ont->resolve("WMD") == "weapons of mass destruction");
    CHECK(*ont->resolve("alien") == "extraterrestrial being");
    CHECK(ont->resolve("not a theme") == nullptr);
    // alias works in closure queries too
    auto anc = ont->ancestors("alien");
    REQUIRE(anc.has_value());
    CHECK(anc->back() == "locationally distinguished being");
}

TEST_CASE("search ranks name over alias over definition") {
    auto ont = build(fixture_themes().themes);
    REQUIRE(ont.has_value());

    auto hits = ont->search("vengeance");
    REQUIRE(!hits.empty());
    CHECK(hits[0].name == "the desire for vengeance");

    // definition-only match
    auto def_hits = ont->search("retribution");
    REQUIRE(!def_hits.empty());
    CHECK(def_hits[0].name == "the desire for vengeance");
    CHECK(def_hits[0].field == "definition");

    // case-insensitive
    auto upper = ont->search("DYSON");
    REQUIRE(!upper.empty());
    CHECK(upper[0].name == "Dyson sphere");
    CHECK(upper[0].field == "name");

    CHECK(ont->search("zzzz no match").empty());
}

TEST_CASE("duplicate names are fatal and keep-first for lookups") {
    Themes themes;
    themes.emplace_back("root", theme({}));
    themes.emplace_back("a", theme({"root"}));
    themes.emplace_back("a", theme({"root"}));
    lto::ValidationReport report;
    auto ont = build(themes, &report);
    CHECK_FALSE(ont.has_value());
    const auto* d = first_of(report, "DUP_NAME");
    REQUIRE(d != nullptr);
    CHECK(d->severity == lto::Severity::Error);
    CHECK(d->subject == "a");
}

TEST_CASE("dangling parents are reported with the offending child") {
    Themes themes;
    themes.emplace_back("root", theme({}));
    themes.emplace_back("a", theme({"missing parent"}));
    lto::ValidationReport report;
    auto ont = build(themes, &report);
    CHECK_FALSE(ont.has_value());
    const auto* d = first_of(report, "DANGLING_PARENT");
    REQUIRE(d != nullptr);
    CHECK(d->subject == "a");
    CHECK(d->message.find("missing parent") != std::string::npos);
}

TEST_CASE("root multiplicity errors") {
    SUBCASE("two roots") {
        Themes themes;
        themes.emplace_back("r1", theme({}));
        themes.emplace_back("r2", theme({}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        const auto* d = first_of(report, "MULTI_ROOT");
        REQUIRE(d != nullptr);
        CHECK(d->message.find("'r1'") != std::string::npos);
        CHECK(d->message.find("'r2'") != std::string::npos);
    }
    SUBCASE("no root at all") {
        Themes themes;
        themes.emplace_back("a", theme({"b"}));
        themes.emplace_back("b", theme({"a"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        CHECK(has_code(report, "MULTI_ROOT"));
        CHECK(has_code(report, "CYCLE"));
    }
}

TEST_CASE("cycle witness paths") {
    SUBCASE("two-node cycle") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("a", theme({"b"}));
        themes.emplace_back("b", theme({"a"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        const auto* d = first_of(report, "CYCLE");
        REQUIRE(d != nullptr);
        CHECK(d->message == "cycle: a -> b -> a");
        CHECK(d->subject == "a");
    }
    SUBCASE("self loop") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("a", theme({"root", "a"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        const auto* d = first_of(report, "CYCLE");
        REQUIRE(d != nullptr);
        CHECK(d->message == "cycle: a -> a");
    }
    SUBCASE("three-node cycle reports one diagnostic") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("m", theme({"k"}));
        themes.emplace_back("k", theme({"j"}));
        themes.emplace_back("j", theme({"m", "root"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        int cycles = 0;
        for (const auto& d : report.diagnostics)
            if (d.code == "CYCLE")
                ++cycles;
        CHECK(cycles == 1);
        const auto* d = first_of(report, "CYCLE");
        REQUIRE(d != nullptr);
        // witness starts at the smallest member and follows parent edges
        CHECK(d->message == "cycle: j -> m -> k -> j");
    }
}

TEST_CASE("alias clashes") {
    SUBCASE("alias equals another theme's name") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("a", theme({"root"}, {"b"}));
        themes.emplace_back("b", theme({"root"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        CHECK(has_code(report, "ALIAS_CLASH"));
    }
    SUBCASE("same alias on two themes") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("a", theme({"root"}, {"nick"}));
        themes.emplace_back("b", theme({"root"}, {"nick"}));
        lto::ValidationReport report;
        CHECK_FALSE(build(themes, &report).has_value());
        CHECK(has_code(report, "ALIAS_CLASH"));
    }
    SUBCASE("alias equal to its own theme is harmless duplicate") {
        Themes themes;
        themes.emplace_back("root", theme({}));
        themes.emplace_back("a", theme({"root"}, {"a nick"}));
        lto::ValidationReport report;
        CHECK(build(themes, &report).has_value());
        CHECK(report.error_count == 0);
    }
}

TEST_CASE("parents written as aliases resolve to canonical names") {
    Themes themes;
    themes.emplace_back("root", theme({}));
    themes.emplace_back("parent theme", theme({"root"}, {"shorthand"}));
    themes.emplace_back("child theme", theme({"shorthand"}));
    auto ont = build(themes);
    REQUIRE(ont.has_value());
    const auto* entry = ont->entry("child theme");
    REQUIRE(entry != nullptr);
    REQUIRE(entry->parents.size() == 1);
    CHECK(entry->parents[0] == "parent theme");
    auto anc = ont->ancestors("child theme");
    REQUIRE(anc.has_value());
    CHECK((*anc)[1] == "parent theme");
}

TEST_CASE("names are NFC-normalized before comparison") {
    Themes themes;
    themes.emplace_back("root", theme({}));
    // decomposed e + combining acute in the declaration...
    themes.emplace_back("caf\x65\xcc\x81 theme", theme({"root"}));
    auto ont = build(themes);
    REQUIRE(ont.has_value());
    // ...resolves via the precomposed form
    CHECK(ont->resolve("caf\xc3\xa9 theme") != nullptr);
    CHECK(ont->index_of("caf\x65\xcc\x81 theme") ==
          ont->index_of("caf\xc3\xa9 theme"));
}

TEST_CASE("lint warnings") {
    Themes themes;
    lto::ThemeEntry root = theme({});
    themes.emplace_back("the root thematic entity", root);

    lto::ThemeEntry bare; // no definition, no references
    bare.parents = {"the root thematic entity"};
    themes.emplace_back("undocumented theme", bare);

    SUBCASE("non-strict reports missing docs only") {
        auto report = lto::validate_themes(themes, false);
        CHECK(report.error_count == 0);
        CHECK(has_code(report, "NO_DEFINITION"));
        CHECK(has_code(report, "NO_REFERENCE"));
        CHECK_FALSE(has_code(report, "SUFFIX_CONVENTION"));
    }
    SUBCASE("strict adds the upper-structure naming convention") {
        auto report = lto::validate_themes(themes, true);
        CHECK(report.error_count == 0);
        const auto* d = first_of(report, "SUFFIX_CONVENTION");
        REQUIRE(d != nullptr);
        CHECK(d->subject == "undocumented theme");
    }
    SUBCASE("deep themes are exempt from the suffix convention") {
        Themes chain;
        chain.emplace_back("the root thematic entity", theme({}));
        chain.emplace_back("level one", theme({"the root thematic entity"}));
        chain.emplace_back("level two", theme({"level one"}));
        chain.emplace_back("level three", theme({"level two"}));
        auto report = lto::validate_themes(chain, true);
        std::set<std::string> flagged;
        for (const auto& d : report.diagnostics)
            if (d.code == "SUFFIX_CONVENTION")
                flagged.insert(d.subject);
        CHECK(flagged == std::set<std::string>{"level one", "level two"});
    }
}

TEST_CASE("report ordering is deterministic") {
    Themes themes;
    themes.emplace_back("z", theme({"gone"}));
    themes.emplace_back("a", theme({"gone"}));
    themes.emplace_back("r", theme({}));
    lto::ValidationReport report;
    CHECK_FALSE(build(themes, &report).has_value());
    std::vector<std::pair<std::string, std::string>> seen;
    for (const auto& d : report.diagnostics)
        seen.emplace_back(d.code, d.subject);
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    CHECK(seen == sorted);
}

TEST_CASE("random DAGs: closure and depth match saturation oracles") {
    gen::Rng rng(0xA11CE5EEDULL);
    for (int iter = 0; iter < 60; ++iter) {
        auto doc = gen::random_theme_document(rng, rng.range(2, 40));
        lto::ValidationReport report;
        auto ont = lto::ThemeOntology::build(doc.themes, report);
        REQUIRE(ont.has_value());

        auto pmap = gen::parent_map(doc);
        auto closure = oracle::closure_of(pmap);
        auto depths = oracle::depths_of(pmap);

        for (const auto& kv : doc.themes) {
            auto anc = ont->ancestors(kv.first);
            REQUIRE(anc.has_value());
            std::set<std::string> got(anc->begin(), anc->end());
            CHECK(got == closure[kv.first]);
            CHECK(ont->depth_at(ont->index_of(kv.first)) == depths[kv.first]);
            // ordering: depth ascending, ties by name
            for (size_t i = 1; i < anc->size(); ++i) {
                int d0 = ont->depth_at(ont->index_of((*anc)[i - 1]));
                int d1 = ont->depth_at(ont->index_of((*anc)[i]));
                CHECK(d0 <= d1);
                if (d0 == d1)
                    CHECK((*anc)[i - 1] < (*anc)[i]);
            }
        }

        // descendants is the inverse relation
        const auto& names = ont->names();
        for (int i = 0; i < ont->size() && i < 5; ++i) {
            auto desc = ont->descendants(names[i]);
            REQUIRE(desc.has_value());
            for (const auto& d : *desc)
                CHECK(closure[d].count(names[i]) == 1);
        }
    }
}

TEST_CASE("random back-edge mutations always produce a cycle error") {
    gen::Rng rng(0xBADC0FFEEULL);
    int tested = 0;
    while (tested < 50) {
        auto doc = gen::random_theme_document(rng, rng.range(3, 30));
        auto closure = oracle::closure_of(gen::parent_map(doc));
        // pick a strict ancestor pair and point the ancestor at the child
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& kv : closure)
            for (const auto& anc : kv.second)
                pairs.emplace_back(anc, kv.first); // (ancestor, descendant)
        if (pairs.empty())
            continue;
        auto& pick = pairs[rng.below(pairs.size())];
        for (auto& kv : doc.themes)
            if (kv.first == pick.first)
                kv.second.parents.push_back(pick.second);
        lto::ValidationReport report;
        auto ont = lto::ThemeOntology::build(doc.themes, report);
        CHECK_FALSE(ont.has_value());
        CHECK(has_code(report, "CYCLE"));
        ++tested;
    }
}
