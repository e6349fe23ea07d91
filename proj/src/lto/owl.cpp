#include "owl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lto {

namespace {

constexpr const char* kBase = "https://themeontology.org/lto";
constexpr const char* kAnchor = "obo:BFO_0000031";
constexpr const char* kAnchorIri =
    "http://purl.obolibrary.org/obo/BFO_0000031";
constexpr const char* kAnchorLabel = "generically dependent continuant";

bool iri_safe(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '~' || c == '-';
}

std::string fragment_of(const std::string& name) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : name) {
        if (c == ' ') {
            out += '-';
        } else if (iri_safe(c)) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

// quotedString in functional syntax escapes only the quote and the backslash
std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string export_owl(const ThemeOntology& ont) {
    // space->'-' plus percent-encoding can collide; keep fragments unique by
    // suffixing later names deterministically
    std::map<std::string, std::string> frag;  // theme name -> fragment
    std::set<std::string> used;
    for (const auto& name : ont.names()) {
        std::string f = fragment_of(name);
        if (!used.insert(f).second) {
            int suffix = 2;
            while (!used.insert(f + "-" + std::to_string(suffix)).second)
                ++suffix;
            f += "-" + std::to_string(suffix);
        }
        frag[name] = f;
    }
    auto iri = [&](const std::string& name) { return ":" + frag.at(name); };
    auto expanded = [&](const std::string& name) {
        return std::string(kBase) + "#" + frag.at(name);
    };

    std::string out;
    out += "Prefix(:=<" + std::string(kBase) + "#>)\n";
    out += "Prefix(obo:=<http://purl.obolibrary.org/obo/>)\n";
    out += "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
    out += "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n";
    out += "Prefix(skos:=<http://www.w3.org/2004/02/skos/core#>)\n";
    out += "\n";
    out += "Ontology(<" + std::string(kBase) + ">\n";
    out += "\n";

    // declarations sorted by expanded IRI; the obo anchor sorts before the
    // https theme IRIs
    std::vector<std::pair<std::string, std::string>> decls;
    decls.emplace_back(kAnchorIri, kAnchor);
    for (const auto& name : ont.names())
        decls.emplace_back(expanded(name), iri(name));
    std::sort(decls.begin(), decls.end());
    for (const auto& d : decls)
        out += "Declaration(Class(" + d.second + "))\n";
    out += "\n";

    std::vector<std::pair<std::pair<std::string, std::string>, std::string>> axioms;
    axioms.push_back({{expanded(ont.root()), kAnchorIri},
                      "SubClassOf(" + iri(ont.root()) + " " + kAnchor + ")"});
    for (int i = 0; i < ont.size(); ++i) {
        const std::string& child = ont.names()[i];
        for (int p : ont.parents_of(i)) {
            const std::string& parent = ont.names()[p];
            axioms.push_back({{expanded(child), expanded(parent)},
                              "SubClassOf(" + iri(child) + " " + iri(parent) + ")"});
        }
    }
    std::sort(axioms.begin(), axioms.end());
    for (const auto& ax : axioms)
        out += ax.second + "\n";
    out += "\n";

    // annotations: label for every class, definition when present, aliases
    // as alternative labels; sorted by (subject IRI, property IRI, literal)
    std::vector<std::pair<std::tuple<std::string, int, std::string>, std::string>> anns;
    auto add_ann = [&](const std::string& subject_iri, int prop_rank,
                       const std::string& prop, const std::string& curie,
                       const std::string& literal) {
        anns.push_back({{subject_iri, prop_rank, literal},
                        "AnnotationAssertion(" + prop + " " + curie + " " +
                            quote(literal) + ")"});
    };
    // property ranks follow expanded property IRIs:
    // obo:IAO_0000115 < rdfs:label < skos:altLabel
    add_ann(kAnchorIri, 1, "rdfs:label", kAnchor, kAnchorLabel);
    for (int i = 0; i < ont.size(); ++i) {
        const std::string& name = ont.names()[i];
        const ThemeEntry& e = ont.entry_at(i);
        if (!e.definition.empty())
            add_ann(expanded(name), 0, "obo:IAO_0000115", iri(name), e.definition);
        add_ann(expanded(name), 1, "rdfs:label", iri(name), name);
        for (const auto& alias : e.aliases)
            add_ann(expanded(name), 2, "skos:altLabel", iri(name), alias);
    }
    std::sort(anns.begin(), anns.end());
    for (const auto& a : anns)
        out += a.second + "\n";

    out += ")\n";
    return out;
}

} // namespace lto
