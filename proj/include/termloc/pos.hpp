#pragma once

// Part-of-speech annotation mapped onto Jespersen's three ranks.
//
// The default annotator is a lexicon lookup followed by suffix rules, with
// unknown words (identifiers included) falling back to nouns. Pre-tagged
// sentences can be imported to replace it.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/lexicon_data.hpp"
#include "termloc/preprocess.hpp"

namespace termloc {

enum class PosTag { Noun, Verb, Adjective, Adverb, Other };

enum class PosRankClass { Primary, Secondary, Tertiary, Other };

inline PosRankClass rank_class(PosTag tag) {
    switch (tag) {
    case PosTag::Noun:
        return PosRankClass::Primary;
    case PosTag::Verb:
    case PosTag::Adjective:
        return PosRankClass::Secondary;
    case PosTag::Adverb:
        return PosRankClass::Tertiary;
    case PosTag::Other:
        break;
    }
    return PosRankClass::Other;
}

inline std::string_view tag_name(PosTag tag) {
    switch (tag) {
    case PosTag::Noun:
        return "NOUN";
    case PosTag::Verb:
        return "VERB";
    case PosTag::Adjective:
        return "ADJ";
    case PosTag::Adverb:
        return "ADV";
    case PosTag::Other:
        break;
    }
    return "OTHER";
}

inline PosTag parse_tag(std::string_view name) {
    if (name == "NOUN")
        return PosTag::Noun;
    if (name == "VERB")
        return PosTag::Verb;
    if (name == "ADJ")
        return PosTag::Adjective;
    if (name == "ADV")
        return PosTag::Adverb;
    if (name == "OTHER")
        return PosTag::Other;
    throw ParseError("unknown POS tag '" + std::string(name) + "'");
}

class Lexicon {
public:
    void add(std::string_view word, PosTag tag) { entries_[detail::to_lower(word)] = tag; }

    std::optional<PosTag> lookup(std::string_view word) const {
        auto it = entries_.find(detail::to_lower(word));
        if (it == entries_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }

    /// "<word>\t<tag>" lines.
    static Lexicon parse(std::string_view text) {
        Lexicon lex;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto t = detail::trim(line);
            if (t.empty() || t.front() == '#')
                continue;
            const auto tab = t.find('\t');
            if (tab == std::string::npos)
                throw ParseError("lexicon line " + std::to_string(lineno) + ": expected <word>TAB<tag>");
            lex.add(detail::trim(t.substr(0, tab)), parse_tag(detail::trim(t.substr(tab + 1))));
        }
        return lex;
    }

    static Lexicon load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

    static const Lexicon& bundled() {
        static const Lexicon lex = parse(data::kDefaultLexicon);
        return lex;
    }

private:
    std::map<std::string, PosTag> entries_;
};

class PosAnnotator {
public:
    virtual ~PosAnnotator() = default;
    virtual std::vector<PosTag> annotate(const Sentence& sentence) const = 0;
};

class LexiconAnnotator : public PosAnnotator {
public:
    explicit LexiconAnnotator(const Lexicon& lexicon = Lexicon::bundled()) : lexicon_(&lexicon) {}

    PosTag tag_word(std::string_view word) const {
        if (is_camel_compound(word))
            return PosTag::Noun;
        if (auto t = lexicon_->lookup(word))
            return *t;
        if (!plain_word(word))
            return PosTag::Noun;
        if (ends_with(word, "ly", 4))
            return PosTag::Adverb;
        if (ends_with(word, "ed", 4) || ends_with(word, "ing", 5) || ends_with(word, "ize", 5))
            return PosTag::Verb;
        if (ends_with(word, "al", 4) || ends_with(word, "ous", 5) || ends_with(word, "ful", 5) ||
            ends_with(word, "ic", 4))
            return PosTag::Adjective;
        return PosTag::Noun;
    }

    std::vector<PosTag> annotate(const Sentence& sentence) const override {
        std::vector<PosTag> out;
        out.reserve(sentence.tokens.size());
        for (const auto& tok : sentence.tokens)
            out.push_back(tag_word(tok.text));
        return out;
    }

private:
    // Suffix rules only apply to ordinary words: letters only, at most a leading capital.
    static bool plain_word(std::string_view w) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const char c = w[i];
            if (detail::is_digit(c))
                return false;
            if (i > 0 && detail::is_upper(c))
                return false;
        }
        return true;
    }

    static bool ends_with(std::string_view w, std::string_view suffix, std::size_t min_len) {
        if (w.size() < min_len || w.size() < suffix.size())
            return false;
        return detail::to_lower(w.substr(w.size() - suffix.size())) == suffix;
    }

    const Lexicon* lexicon_;
};

/// Tags from an external tagger, keyed by the sentence's token sequence.
/// Sentences not present in the import fall back to another annotator.
class PreTaggedAnnotator : public PosAnnotator {
public:
    explicit PreTaggedAnnotator(std::shared_ptr<const PosAnnotator> fallback) : fallback_(std::move(fallback)) {}

    void add(std::vector<std::string> words, std::vector<PosTag> tags) {
        if (words.size() != tags.size())
            throw ContractError("pre-tagged sentence: word/tag count mismatch");
        table_[std::move(words)] = std::move(tags);
    }

    std::size_t size() const { return table_.size(); }

    std::vector<PosTag> annotate(const Sentence& sentence) const override {
        auto it = table_.find(sentence.texts());
        if (it != table_.end())
            return it->second;
        return fallback_->annotate(sentence);
    }

    /// One sentence per line, "<word>/<tag>" items separated by whitespace.
    static PreTaggedAnnotator parse(std::string_view text, std::shared_ptr<const PosAnnotator> fallback) {
        PreTaggedAnnotator out(std::move(fallback));
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream items(line);
            std::string item;
            std::vector<std::string> words;
            std::vector<PosTag> tags;
            while (items >> item) {
                const auto slash = item.rfind('/');
                if (slash == std::string::npos || slash == 0 || slash + 1 == item.size())
                    throw ParseError("pre-tagged line " + std::to_string(lineno) + ": bad item '" + item + "'");
                words.push_back(item.substr(0, slash));
                tags.push_back(parse_tag(item.substr(slash + 1)));
            }
            if (!words.empty())
                out.add(std::move(words), std::move(tags));
        }
        return out;
    }

private:
    std::map<std::vector<std::string>, std::vector<PosTag>> table_;
    std::shared_ptr<const PosAnnotator> fallback_;
};

inline const PosAnnotator& default_annotator() {
    static const LexiconAnnotator annotator;
    return annotator;
}

inline std::vector<PosRankClass> tag_pos(const Sentence& sentence, const PosAnnotator& annotator = default_annotator()) {
    std::vector<PosRankClass> out;
    for (auto t : annotator.annotate(sentence))
        out.push_back(rank_class(t));
    return out;
}

} // namespace termloc
