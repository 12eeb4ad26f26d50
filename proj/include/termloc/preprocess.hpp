#pragma once

// Turning change-request prose into sentences of candidate terms.
//
// Pipeline per sentence: protect identifier dots, segment on sentence
// punctuation, strip the rest of the punctuation, split dotted terms, drop
// stop words / numbers / single characters, then split camel-case terms
// keeping the compound followed by its fragments. No stemming.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "termloc/ingest.hpp"
#include "termloc/stoplist_data.hpp"

namespace termloc {

struct Token {
    std::string text;
    bool is_camel_origin = false;  // camel compound or one of its fragments
    bool is_dotted_origin = false; // segment of a dotted term

    friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
    std::vector<Token> tokens;

    friend bool operator==(const Sentence&, const Sentence&) = default;

    std::vector<std::string> texts() const {
        std::vector<std::string> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens)
            out.push_back(t.text);
        return out;
    }
};

namespace detail {

inline bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
inline bool is_lower(char c) {
    // bytes of multi-byte UTF-8 sequences count as lowercase letters
    return std::islower(static_cast<unsigned char>(c)) != 0 || static_cast<unsigned char>(c) >= 0x80;
}
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_word_char(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }
inline bool is_ident_char(char c) { return is_word_char(c) || c == '_'; }

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

} // namespace detail

/// Case-insensitive word set.
class StopList {
public:
    StopList() = default;

    template <class Range>
    explicit StopList(const Range& words) {
        for (const auto& w : words)
            add(w);
    }

    void add(std::string_view word) {
        if (!word.empty())
            words_.insert(detail::to_lower(word));
    }

    bool contains(std::string_view word) const { return words_.count(detail::to_lower(word)) > 0; }
    std::size_t size() const { return words_.size(); }
    const std::set<std::string>& words() const { return words_; }

    /// One word per line; blank lines and '#' comments skipped.
    static StopList parse(std::string_view text) {
        StopList sl;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            line = detail::trim(line);
            if (!line.empty() && line.front() != '#')
                sl.add(line);
        }
        return sl;
    }

    static StopList load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

    static const StopList& bundled() {
        static const StopList sl = parse(data::kDefaultStopList);
        return sl;
    }

private:
    std::set<std::string> words_;
};

inline std::vector<std::string> split_dotted(std::string_view term) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= term.size()) {
        auto dot = term.find('.', start);
        if (dot == std::string_view::npos)
            dot = term.size();
        if (dot > start)
            out.emplace_back(term.substr(start, dot - start));
        start = dot + 1;
    }
    return out;
}

/// Splits at lower/digit->upper transitions and before the last capital of an
/// acronym run that is followed by a lowercase letter ("XMLParser" -> XML, Parser).
inline std::vector<std::string> split_camel(std::string_view term) {
    using detail::is_digit;
    using detail::is_lower;
    using detail::is_upper;
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i < term.size(); ++i) {
        const char prev = term[i - 1];
        const char cur = term[i];
        const bool lower_to_upper = (is_lower(prev) || is_digit(prev)) && is_upper(cur);
        const bool acronym_end =
            is_upper(prev) && is_upper(cur) && i + 1 < term.size() && is_lower(term[i + 1]);
        if (lower_to_upper || acronym_end) {
            out.emplace_back(term.substr(start, i - start));
            start = i;
        }
    }
    if (start < term.size())
        out.emplace_back(term.substr(start));
    return out;
}

inline bool is_camel_compound(std::string_view term) { return split_camel(term).size() > 1; }

/// Splits raw text into sentence strings. A '.' with identifier characters on
/// both sides belongs to a dotted identifier and does not end a sentence.
inline std::vector<std::string> segment_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!detail::trim(cur).empty())
            out.push_back(cur);
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            const bool ident_dot = i > 0 && i + 1 < text.size() && detail::is_ident_char(text[i - 1]) &&
                                   detail::is_ident_char(text[i + 1]);
            if (ident_dot) {
                cur.push_back(c);
                continue;
            }
            flush();
        } else if (c == '!' || c == '?' || c == ';' || c == '\n' || c == '\r') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

/// Words of one sentence: maximal runs of letters/digits, keeping dots that
/// sit between word characters.
inline std::vector<std::string> sentence_words(std::string_view sentence) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        const char c = sentence[i];
        if (detail::is_word_char(c)) {
            cur.push_back(c);
        } else if (c == '.' && !cur.empty() && i + 1 < sentence.size() && detail::is_word_char(sentence[i + 1])) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

namespace detail {

// Appends the candidate terms of one dotted-split segment.
inline void emit_segment(const std::string& seg, bool dotted, const StopList& stop, std::vector<Token>& out) {
    if (seg.empty() || all_digits(seg) || stop.contains(seg))
        return;
    const auto parts = split_camel(seg);
    if (parts.size() < 2) {
        if (seg.size() > 1)
            out.push_back({seg, false, dotted});
        return;
    }
    out.push_back({seg, true, dotted});
    for (const auto& p : parts) {
        // single-character fragments survive: they hang off a kept compound
        if (all_digits(p) || stop.contains(p))
            continue;
        out.push_back({p, true, dotted});
    }
}

} // namespace detail

/// Runs the token-level filters over a sentence. Camel-origin tokens are
/// already final and pass through untouched, so the function is idempotent.
inline Sentence preprocess_tokens(const Sentence& in, const StopList& stop) {
    Sentence out;
    for (const auto& tok : in.tokens) {
        if (tok.is_camel_origin) {
            if (!stop.contains(tok.text))
                out.tokens.push_back(tok);
            continue;
        }
        const auto segs = split_dotted(tok.text);
        const bool dotted = tok.is_dotted_origin || segs.size() > 1;
        for (const auto& seg : segs)
            detail::emit_segment(seg, dotted, stop, out.tokens);
    }
    return out;
}

inline std::vector<Sentence> preprocess_text(std::string_view text, const StopList& stop) {
    std::vector<Sentence> out;
    for (const auto& raw : segment_sentences(text)) {
        Sentence words;
        for (auto& w : sentence_words(raw))
            words.tokens.push_back({std::move(w), false, false});
        auto s = preprocess_tokens(words, stop);
        if (!s.tokens.empty())
            out.push_back(std::move(s));
    }
    return out;
}

/// Title sentences first, then description sentences.
inline std::vector<Sentence> preprocess_request(const ChangeRequest& cr, const StopList& stop) {
    auto out = preprocess_text(cr.title, stop);
    auto desc = preprocess_text(cr.description, stop);
    out.insert(out.end(), std::make_move_iterator(desc.begin()), std::make_move_iterator(desc.end()));
    return out;
}

/// Distinct token texts in first-occurrence order.
inline std::vector<std::string> unique_terms(const std::vector<Sentence>& sentences) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& s : sentences)
        for (const auto& t : s.tokens)
            if (seen.insert(t.text).second)
                out.push_back(t.text);
    return out;
}

} // namespace termloc
