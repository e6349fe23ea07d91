#include "text_format.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "strings.hpp"

namespace lto {

namespace {

Diagnostic diag(Severity sev, std::string code, std::string subject,
                std::string message, std::string_view file, int line) {
    Diagnostic d;
    d.severity = sev;
    d.code = std::move(code);
    d.subject = std::move(subject);
    d.message = std::move(message);
    d.file = std::string(file);
    d.line = line;
    return d;
}

bool is_underline(std::string_view line) {
    return line.size() >= 3 && line.find_first_not_of('=') == std::string_view::npos;
}

struct RawSection {
    std::string field;
    std::vector<std::string> lines;
    int line = 0;  // the ":: " line
};

struct RawBlock {
    std::string header;
    int header_line = 0;
    std::vector<RawSection> sections;
};

// UTF-8 check, BOM/CRLF cleanup, NFC. Shared by both document kinds.
std::string preprocess(std::string_view bytes, std::string_view filename,
                       std::vector<Diagnostic>& diags) {
    std::string text(bytes);
    if (text.starts_with("\xef\xbb\xbf")) {
        text.erase(0, 3);
        diags.push_back(diag(Severity::Warning, "BOM", "",
                             "byte-order mark removed", filename, 1));
    }
    if (!str::valid_utf8(text))
        throw EncodingError("invalid UTF-8 in " + std::string(filename));
    if (text.find("\r\n") != std::string::npos) {
        std::string out;
        out.reserve(text.size());
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
                continue;
            out += text[i];
        }
        text = std::move(out);
        diags.push_back(diag(Severity::Warning, "CRLF", "",
                             "CRLF line endings normalized to LF", filename, 1));
    }
    return str::nfc(text);
}

// Header detection: a non-blank line immediately followed by an all-'='
// underline of length >= 3. Reserved patterns (":: " and underlines) make
// this unambiguous in well-formed documents.
bool block_starts_at(const std::vector<std::string_view>& lines, size_t i) {
    if (i + 1 >= lines.size())
        return false;
    std::string_view head = str::rtrim(lines[i]);
    if (head.empty() || head.starts_with(":: ") || is_underline(head))
        return false;
    return is_underline(str::rtrim(lines[i + 1]));
}

std::vector<RawBlock> scan_blocks(std::string_view text, std::string_view filename,
                                  std::vector<Diagnostic>& diags) {
    std::vector<std::string_view> lines = str::split_lines(text);
    std::vector<RawBlock> blocks;
    size_t i = 0;
    const size_t n = lines.size();
    while (i < n) {
        std::string_view line = str::rtrim(lines[i]);
        if (line.empty()) {
            ++i;
            continue;
        }
        if (!block_starts_at(lines, i)) {
            diags.push_back(diag(
                Severity::Error, "MALFORMED_BLOCK", std::string(line),
                "expected a '=' underline after '" + std::string(line) + "'",
                filename, static_cast<int>(i) + 1));
            // resync: swallow everything up to the next well-formed header
            ++i;
            while (i < n && !block_starts_at(lines, i))
                ++i;
            continue;
        }

        RawBlock blk;
        blk.header = std::string(line);
        blk.header_line = static_cast<int>(i) + 1;
        i += 2;
        while (i < n && !block_starts_at(lines, i)) {
            std::string_view l = str::rtrim(lines[i]);
            if (l.empty()) {
                ++i;
                continue;
            }
            if (l.starts_with(":: ")) {
                RawSection sec;
                sec.field = std::string(str::trim(l.substr(3)));
                sec.line = static_cast<int>(i) + 1;
                ++i;
                while (i < n && !block_starts_at(lines, i)) {
                    std::string_view body = str::rtrim(lines[i]);
                    if (body.empty() || body.starts_with(":: "))
                        break;
                    sec.lines.emplace_back(body);
                    ++i;
                }
                blk.sections.push_back(std::move(sec));
            } else {
                diags.push_back(diag(
                    Severity::Warning, "STRAY_TEXT", blk.header,
                    "line outside any ':: ' section ignored", filename,
                    static_cast<int>(i) + 1));
                ++i;
            }
        }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i)
            out += '\n';
        out += lines[i];
    }
    return out;
}

// scalar field with first-occurrence-wins semantics
bool set_scalar(std::string& slot, bool& present, const RawSection& sec,
                const std::string& subject, std::string_view filename,
                std::vector<Diagnostic>& diags) {
    if (present) {
        diags.push_back(diag(Severity::Warning, "DUP_FIELD", subject,
                             "duplicate ':: " + sec.field + "' section ignored",
                             filename, sec.line));
        return false;
    }
    slot = join_lines(sec.lines);
    present = true;
    return true;
}

// list field entries accumulate across sections; duplicates dropped
void add_entries(std::vector<std::string>& list, const RawSection& sec,
                 const std::string& subject, std::string_view filename,
                 std::vector<Diagnostic>& diags) {
    for (const auto& raw : sec.lines) {
        std::string entry(str::trim(raw));
        if (entry.empty())
            continue;
        if (std::find(list.begin(), list.end(), entry) != list.end()) {
            diags.push_back(diag(Severity::Warning, "DUP_ENTRY", subject,
                                 "duplicate entry '" + entry + "' in ':: " +
                                     sec.field + "' ignored",
                                 filename, sec.line));
            continue;
        }
        list.push_back(entry);
    }
}

const std::regex kAnnotationRe(R"(^(.*\S)[ \t]+\[(.*)\]$)");
const std::regex kDateRe(R"(^\d{4}(-\d{2}-\d{2})?$|^\d{4}-\d{4}$)");

} // namespace

ThemeDocument parse_theme_document(std::string_view bytes, std::string_view filename,
                                   std::vector<Diagnostic>& diags) {
    std::string text = preprocess(bytes, filename, diags);
    ThemeDocument doc;
    for (const RawBlock& blk : scan_blocks(text, filename, diags)) {
        std::string name(str::trim(blk.header));
        ThemeEntry e;
        e.source_file = std::string(filename);
        e.source_line = blk.header_line;
        bool has_desc = false, has_examples = false, has_notes = false;
        std::string folded;  // unknown sections, preserved
        for (const RawSection& sec : blk.sections) {
            if (sec.field == "Description") {
                set_scalar(e.definition, has_desc, sec, name, filename, diags);
            } else if (sec.field == "Parents") {
                add_entries(e.parents, sec, name, filename, diags);
            } else if (sec.field == "Aliases") {
                add_entries(e.aliases, sec, name, filename, diags);
            } else if (sec.field == "References") {
                add_entries(e.references, sec, name, filename, diags);
            } else if (sec.field == "Examples") {
                set_scalar(e.examples, has_examples, sec, name, filename, diags);
            } else if (sec.field == "Notes") {
                set_scalar(e.notes, has_notes, sec, name, filename, diags);
            } else {
                diags.push_back(diag(Severity::Warning, "UNKNOWN_FIELD", name,
                                     "unknown section ':: " + sec.field +
                                         "' preserved in notes",
                                     filename, sec.line));
                if (!folded.empty())
                    folded += '\n';
                folded += sec.field + ": " + join_lines(sec.lines);
            }
        }
        if (!folded.empty()) {
            if (!e.notes.empty())
                e.notes += '\n';
            e.notes += folded;
        }
        // a theme must not claim itself as parent or alias
        for (auto* list : {&e.parents, &e.aliases}) {
            auto it = std::find(list->begin(), list->end(), name);
            if (it != list->end()) {
                diags.push_back(diag(Severity::Error, "SELF_REFERENCE", name,
                                     "theme '" + name + "' refers to itself",
                                     filename, blk.header_line));
                list->erase(it);
            }
        }
        doc.themes.emplace_back(std::move(name), std::move(e));
    }
    return doc;
}

StoryDocument parse_story_document(std::string_view bytes, std::string_view filename,
                                   std::vector<Diagnostic>& diags) {
    std::string text = preprocess(bytes, filename, diags);
    StoryDocument doc;
    for (const RawBlock& blk : scan_blocks(text, filename, diags)) {
        std::string id(str::trim(blk.header));
        if (id.find_first_of(" \t") != std::string::npos) {
            diags.push_back(diag(Severity::Error, "INVALID_ID", id,
                                 "story id '" + id + "' contains whitespace",
                                 filename, blk.header_line));
            continue;
        }
        StoryEntry s;
        s.source_file = std::string(filename);
        s.source_line = blk.header_line;
        bool has_title = false, has_date = false, has_coll = false, has_desc = false;
        std::set<std::string> seen_themes;
        for (const RawSection& sec : blk.sections) {
            Tier tier;
            if (sec.field == "Title") {
                set_scalar(s.title, has_title, sec, id, filename, diags);
                continue;
            } else if (sec.field == "Date") {
                if (set_scalar(s.date, has_date, sec, id, filename, diags) &&
                    !s.date.empty() && !std::regex_match(s.date, kDateRe)) {
                    diags.push_back(diag(Severity::Warning, "DATE_FORMAT", id,
                                         "date '" + s.date +
                                             "' is not a year, year range, or "
                                             "ISO date",
                                         filename, sec.line));
                }
                continue;
            } else if (sec.field == "Collection") {
                set_scalar(s.collection, has_coll, sec, id, filename, diags);
                continue;
            } else if (sec.field == "Description") {
                set_scalar(s.description, has_desc, sec, id, filename, diags);
                continue;
            } else if (sec.field == "Choice Themes") {
                tier = Tier::Choice;
            } else if (sec.field == "Major Themes") {
                tier = Tier::Major;
            } else if (sec.field == "Minor Themes") {
                tier = Tier::Minor;
            } else {
                diags.push_back(diag(Severity::Warning, "UNKNOWN_FIELD", id,
                                     "unknown section ':: " + sec.field +
                                         "' ignored",
                                     filename, sec.line));
                continue;
            }
            int line = sec.line;
            for (const auto& raw : sec.lines) {
                ++line;
                Annotation a;
                a.tier = tier;
                std::smatch m;
                if (std::regex_match(raw, m, kAnnotationRe)) {
                    a.theme = std::string(str::trim(m[1].str()));
                    a.comment = m[2].str();
                } else {
                    a.theme = std::string(str::trim(raw));
                }
                if (a.theme.empty())
                    continue;
                if (!seen_themes.insert(a.theme).second) {
                    diags.push_back(diag(Severity::Warning, "DUP_ANNOTATION", id,
                                         "theme '" + a.theme +
                                             "' already annotated in this story",
                                         filename, line));
                    continue;
                }
                s.annotations.push_back(std::move(a));
            }
        }
        doc.stories.emplace_back(std::move(id), std::move(s));
    }
    return doc;
}

namespace {

std::string underline_for(const std::string& name) {
    return std::string(std::max<size_t>(3, name.size()), '=');
}

void emit_section(std::string& out, const char* field, const std::string& body) {
    if (body.empty())
        return;
    out += "\n\n:: ";
    out += field;
    out += '\n';
    out += body;
}

void emit_list(std::string& out, const char* field,
               const std::vector<std::string>& entries) {
    if (entries.empty())
        return;
    emit_section(out, field, join_lines(entries));
}

} // namespace

std::string serialize_theme_document(const ThemeDocument& doc) {
    std::vector<const std::pair<std::string, ThemeEntry>*> order;
    order.reserve(doc.themes.size());
    for (const auto& t : doc.themes)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return a->first < b->first; });

    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& [name, e] = *order[i];
        if (i)
            out += "\n\n\n";
        out += name + '\n' + underline_for(name);
        emit_section(out, "Description", e.definition);
        emit_list(out, "Parents", e.parents);
        emit_list(out, "Aliases", e.aliases);
        emit_list(out, "References", e.references);
        emit_section(out, "Examples", e.examples);
        emit_section(out, "Notes", e.notes);
    }
    if (!out.empty())
        out += '\n';
    return out;
}

std::string serialize_story_document(const StoryDocument& doc) {
    std::vector<const std::pair<std::string, StoryEntry>*> order;
    order.reserve(doc.stories.size());
    for (const auto& s : doc.stories)
        order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return a->first < b->first; });

    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& [id, s] = *order[i];
        if (i)
            out += "\n\n\n";
        out += id + '\n' + underline_for(id);
        emit_section(out, "Title", s.title);
        emit_section(out, "Date", s.date);
        emit_section(out, "Collection", s.collection);
        emit_section(out, "Description", s.description);
        for (Tier tier : {Tier::Choice, Tier::Major, Tier::Minor}) {
            std::vector<const Annotation*> anns;
            for (const auto& a : s.annotations)
                if (a.tier == tier)
                    anns.push_back(&a);
            if (anns.empty())
                continue;
            std::sort(anns.begin(), anns.end(),
                      [](auto* a, auto* b) { return a->theme < b->theme; });
            std::vector<std::string> lines;
            for (auto* a : anns)
                lines.push_back(a->comment.empty() ? a->theme
                                                   : a->theme + " [" + a->comment + "]");
            const char* field = tier == Tier::Choice  ? "Choice Themes"
                                : tier == Tier::Major ? "Major Themes"
                                                      : "Minor Themes";
            emit_list(out, field, lines);
        }
    }
    if (!out.empty())
        out += '\n';
    return out;
}

} // namespace lto
