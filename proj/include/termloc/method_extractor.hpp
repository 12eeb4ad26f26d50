#pragma once

// Lexical method extraction for C-family sources (Java by default).
//
// Comments and string/char literals are blanked out, then method headers are
// recognised by shape: name '(' ... ')' [throws X, Y] '{'. The brace-balanced
// body that follows, together with its header, becomes one document. Classes
// nested inside a body stay part of that body.

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termloc/ingest.hpp"

namespace termloc {

struct MethodDocument {
    int doc_id = 0;
    std::string file_path;   // corpus-relative, forward slashes
    std::string method_name; // "<file>" for a whole-file fallback document
    std::string text;        // header + body with comments and literals removed
    bool fallback = false;
};

struct ExtractStats {
    std::size_t files_scanned = 0;
    std::size_t methods = 0;
    std::size_t fallbacks = 0;
    std::vector<std::string> warnings;
};

inline constexpr std::string_view kWholeFileMethod = "<file>";

/// Replaces comments and string/char literals with spaces; newlines survive.
inline std::string strip_comments_and_literals(std::string_view src) {
    std::string out(src);
    enum class St { Code, Line, Block, Str, Chr, TextBlock } st = St::Code;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const char c = src[i];
        const char n = i + 1 < src.size() ? src[i + 1] : '\0';
        auto blank = [&](std::size_t j) {
            if (src[j] != '\n')
                out[j] = ' ';
        };
        switch (st) {
        case St::Code:
            if (c == '/' && n == '/') {
                st = St::Line;
                blank(i);
            } else if (c == '/' && n == '*') {
                st = St::Block;
                blank(i);
                blank(++i);
            } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
                st = St::TextBlock;
                blank(i);
                blank(++i);
                blank(++i);
            } else if (c == '"') {
                st = St::Str;
                blank(i);
            } else if (c == '\'') {
                st = St::Chr;
                blank(i);
            }
            break;
        case St::Line:
            if (c == '\n')
                st = St::Code;
            else
                blank(i);
            break;
        case St::Block:
            blank(i);
            if (c == '*' && n == '/') {
                blank(++i);
                st = St::Code;
            }
            break;
        case St::Str:
        case St::Chr:
            blank(i);
            if (c == '\\' && i + 1 < src.size()) {
                blank(++i);
            } else if ((st == St::Str && c == '"') || (st == St::Chr && c == '\'') || c == '\n') {
                st = St::Code;
            }
            break;
        case St::TextBlock:
            blank(i);
            if (c == '\\' && i + 1 < src.size()) {
                blank(++i);
            } else if (src.substr(i, 3) == "\"\"\"") {
                blank(++i);
                blank(++i);
                st = St::Code;
            }
            break;
        }
    }
    return out;
}

namespace detail {

struct LexToken {
    std::string text;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool ident = false;
};

inline bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

inline std::vector<LexToken> lex(std::string_view code) {
    std::vector<LexToken> toks;
    std::size_t i = 0;
    while (i < code.size()) {
        const char c = code[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (ident_start(c)) {
            const auto b = i;
            while (i < code.size() && ident_part(code[i]))
                ++i;
            toks.push_back({std::string(code.substr(b, i - b)), b, i, true});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto b = i;
            while (i < code.size() && (ident_part(code[i]) || code[i] == '.'))
                ++i;
            toks.push_back({std::string(code.substr(b, i - b)), b, i, false});
        } else {
            toks.push_back({std::string(1, c), i, i + 1, false});
            ++i;
        }
    }
    return toks;
}

inline const std::set<std::string>& non_method_words() {
    static const std::set<std::string> words = {"if",     "for",    "while",        "switch", "catch", "synchronized",
                                                "try",    "do",     "else",         "return", "new",   "throw",
                                                "sizeof", "foreach", "using",       "lock",   "fixed", "assert",
                                                "when",   "record", "static_assert"};
    return words;
}

// Index of the '(' matching the ')' at close, or npos.
inline std::size_t matching_open_paren(const std::vector<LexToken>& t, std::size_t close) {
    int depth = 0;
    for (std::size_t i = close + 1; i-- > 0;) {
        if (t[i].text == ")")
            ++depth;
        else if (t[i].text == "(" && --depth == 0)
            return i;
    }
    return std::string::npos;
}

// Index of the '}' closing the '{' at open, or npos.
inline std::size_t matching_close_brace(const std::vector<LexToken>& t, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i].text == "{")
            ++depth;
        else if (t[i].text == "}" && --depth == 0)
            return i;
    }
    return std::string::npos;
}

// If the '{' at brace opens a method body, returns the index of the method name.
inline std::size_t method_name_before(const std::vector<LexToken>& t, std::size_t brace) {
    if (brace == 0)
        return std::string::npos;
    std::size_t q = brace - 1;
    if (t[q].ident || t[q].text == ">") {
        // optional throws clause: identifiers, '.', ',', generic brackets
        std::size_t j = q;
        while (j > 0 && (t[j].ident || t[j].text == "." || t[j].text == "," || t[j].text == "<" ||
                         t[j].text == ">") &&
               t[j].text != "throws")
            --j;
        if (t[j].text != "throws" || j == 0)
            return std::string::npos;
        q = j - 1;
    }
    if (t[q].text != ")")
        return std::string::npos;
    const auto open = matching_open_paren(t, q);
    if (open == std::string::npos || open == 0)
        return std::string::npos;
    const auto name = open - 1;
    if (!t[name].ident || non_method_words().count(t[name].text))
        return std::string::npos;
    if (name > 0 && (t[name - 1].text == "new" || t[name - 1].text == "."))
        return std::string::npos; // anonymous class creation or qualified call
    return name;
}

inline bool braces_balanced(const std::vector<LexToken>& t) {
    long depth = 0;
    for (const auto& tok : t) {
        if (tok.text == "{")
            ++depth;
        else if (tok.text == "}" && --depth < 0)
            return false;
    }
    return depth == 0;
}

} // namespace detail

/// Extracts method documents from one source file's contents.
inline std::vector<MethodDocument> extract_methods_from_source(std::string_view source, const std::string& rel_path) {
    const auto code = strip_comments_and_literals(source);
    const auto toks = detail::lex(code);
    std::vector<MethodDocument> out;
    auto whole_file = [&] {
        out.clear();
        out.push_back({0, rel_path, std::string(kWholeFileMethod), code, true});
    };
    if (!detail::braces_balanced(toks)) {
        whole_file();
        return out;
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].text != "{")
            continue;
        const auto name = detail::method_name_before(toks, i);
        if (name == std::string::npos)
            continue;
        const auto close = detail::matching_close_brace(toks, i);
        // header starts after the previous statement or block boundary
        std::size_t start = name;
        while (start > 0) {
            const auto& p = toks[start - 1].text;
            if (p == ";" || p == "{" || p == "}")
                break;
            --start;
        }
        out.push_back({0, rel_path, toks[name].text,
                       code.substr(toks[start].begin, toks[close].end - toks[start].begin), false});
        i = close;
    }
    if (out.empty())
        whole_file();
    return out;
}

inline bool matches_extension(const std::filesystem::path& p, const std::vector<std::string>& extensions) {
    const auto ext = p.extension().string();
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

/// Walks source_root (sorted by relative path) and extracts every method.
/// Document ids are assigned in walk order starting at 0.
inline std::vector<MethodDocument> extract_methods(const std::filesystem::path& source_root,
                                                   const std::vector<std::string>& extensions, ExtractStats& stats) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(source_root))
        throw std::runtime_error("source root is not a directory: " + source_root.string());
    std::vector<std::pair<std::string, fs::path>> files;
    for (const auto& entry : fs::recursive_directory_iterator(source_root)) {
        if (!entry.is_regular_file() || !matches_extension(entry.path(), extensions))
            continue;
        files.emplace_back(detail::normalize_path(fs::relative(entry.path(), source_root).generic_string()),
                           entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<MethodDocument> docs;
    for (const auto& [rel, full] : files) {
        std::string src;
        try {
            src = detail::read_file(full);
        } catch (const std::exception& e) {
            stats.warnings.push_back(std::string("skipping unreadable file: ") + e.what());
            continue;
        }
        ++stats.files_scanned;
        for (auto& d : extract_methods_from_source(src, rel)) {
            d.doc_id = static_cast<int>(docs.size());
            (d.fallback ? stats.fallbacks : stats.methods) += 1;
            docs.push_back(std::move(d));
        }
    }
    return docs;
}

inline std::vector<MethodDocument> extract_methods(const std::filesystem::path& source_root,
                                                   const std::vector<std::string>& extensions = {".java"}) {
    ExtractStats stats;
    return extract_methods(source_root, extensions, stats);
}

} // namespace termloc
