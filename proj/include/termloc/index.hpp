#pragma once

// Method-level inverted index and tf-idf ranked retrieval aggregated to files.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/method_extractor.hpp"
#include "termloc/preprocess.hpp"
#include "termloc/termrank.hpp"

namespace termloc {

namespace data {

inline const std::set<std::string>& java_reserved_words() {
    static const std::set<std::string> words = {
        "abstract", "assert",     "boolean",   "break",     "byte",       "case",         "catch",
        "char",     "class",      "const",     "continue",  "default",    "do",           "double",
        "else",     "enum",       "extends",   "final",     "finally",    "float",        "for",
        "goto",     "if",         "implements", "import",   "instanceof", "int",          "interface",
        "long",     "native",     "new",       "package",   "private",    "protected",    "public",
        "return",   "short",      "static",    "strictfp",  "super",      "switch",       "synchronized",
        "this",     "throw",      "throws",    "transient", "try",        "void",         "volatile",
        "while",    "true",       "false",     "null"};
    return words;
}

} // namespace data

/// Token pipeline shared by indexing: reserved words and stop words out,
/// dotted and camel-case terms split (compound kept), everything lowercased.
struct CodeTokenizer {
    std::set<std::string> reserved = data::java_reserved_words();
    const StopList* stoplist = &StopList::bundled();

    std::vector<std::string> tokenize(std::string_view text) const {
        std::vector<std::string> out;
        auto keep = [&](const std::string& t) {
            if (t.size() < 2 || detail::all_digits(t) || reserved.count(t) || stoplist->contains(t))
                return;
            out.push_back(detail::to_lower(t));
        };
        for (const auto& word : sentence_words(text)) {
            for (const auto& seg : split_dotted(word)) {
                if (reserved.count(seg) || stoplist->contains(seg))
                    continue;
                const auto parts = split_camel(seg);
                keep(seg);
                if (parts.size() > 1)
                    for (const auto& p : parts)
                        keep(p);
            }
        }
        return out;
    }
};

struct IndexedDocument {
    int doc_id = 0;
    std::string file_path;
    std::string method_name;
    std::map<std::string, int> term_freq;
    int length = 0; // number of term occurrences

    friend bool operator==(const IndexedDocument&, const IndexedDocument&) = default;
};

struct Posting {
    int doc_id = 0;
    int tf = 0;
};

class CorpusIndex {
public:
    CorpusIndex() = default;

    explicit CorpusIndex(std::vector<IndexedDocument> docs) : docs_(std::move(docs)) {
        std::sort(docs_.begin(), docs_.end(), [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
        for (std::size_t i = 0; i < docs_.size(); ++i) {
            if (i > 0 && docs_[i].doc_id == docs_[i - 1].doc_id)
                throw ValidationError("duplicate doc_id " + std::to_string(docs_[i].doc_id));
            if (docs_[i].file_path.empty())
                throw ValidationError("document " + std::to_string(docs_[i].doc_id) + " has an empty file path");
            by_id_.emplace(docs_[i].doc_id, i);
            for (const auto& [term, tf] : docs_[i].term_freq)
                postings_[term].push_back({docs_[i].doc_id, tf});
        }
    }

    const std::vector<IndexedDocument>& documents() const { return docs_; }
    const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
    std::size_t doc_count() const { return docs_.size(); }

    const IndexedDocument& document(int doc_id) const { return docs_.at(by_id_.at(doc_id)); }

    std::size_t doc_freq(const std::string& term) const {
        auto it = postings_.find(term);
        return it == postings_.end() ? 0 : it->second.size();
    }

    double idf(const std::string& term) const {
        return 1.0 + std::log(static_cast<double>(doc_count()) / (static_cast<double>(doc_freq(term)) + 1.0));
    }

    const std::vector<Posting>* find(const std::string& term) const {
        auto it = postings_.find(term);
        return it == postings_.end() ? nullptr : &it->second;
    }

private:
    std::vector<IndexedDocument> docs_;
    std::map<int, std::size_t> by_id_;
    std::map<std::string, std::vector<Posting>> postings_;
};

inline CorpusIndex index_corpus(const std::vector<MethodDocument>& docs, const CodeTokenizer& tokenizer = {}) {
    std::vector<IndexedDocument> indexed;
    indexed.reserve(docs.size());
    for (const auto& d : docs) {
        IndexedDocument doc{d.doc_id, d.file_path, d.method_name, {}, 0};
        for (auto& t : tokenizer.tokenize(d.text)) {
            ++doc.term_freq[t];
            ++doc.length;
        }
        indexed.push_back(std::move(doc));
    }
    return CorpusIndex(std::move(indexed));
}

// ---------------------------------------------------------------------------
// Snapshot persistence
//
//   termloc-index <version>
//   documents <count>
//   D<TAB>doc_id<TAB>file_path<TAB>method_name<TAB>term:tf term:tf ...
//
// Documents in doc_id order, terms in byte order.

inline constexpr int kSnapshotVersion = 1;

inline std::string serialize_index(const CorpusIndex& index) {
    std::ostringstream out;
    out << "termloc-index " << kSnapshotVersion << '\n';
    out << "documents " << index.doc_count() << '\n';
    for (const auto& d : index.documents()) {
        if (d.file_path.find('\t') != std::string::npos || d.file_path.find('\n') != std::string::npos)
            throw ValidationError("file path contains a tab or newline: " + d.file_path);
        out << "D\t" << d.doc_id << '\t' << d.file_path << '\t' << d.method_name << '\t';
        bool first = true;
        for (const auto& [t, tf] : d.term_freq) {
            out << (first ? "" : " ") << t << ':' << tf;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

inline CorpusIndex parse_index(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto fail = [](const std::string& msg) -> CorpusIndex { throw ParseError("index snapshot: " + msg); };
    if (!std::getline(in, line) || line != "termloc-index " + std::to_string(kSnapshotVersion))
        return fail("unsupported header '" + line + "'");
    std::size_t expected = 0;
    if (!std::getline(in, line) || line.rfind("documents ", 0) != 0)
        return fail("missing document count");
    expected = std::stoul(line.substr(10));
    std::vector<IndexedDocument> docs;
    std::size_t lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
            cols.push_back(line.substr(start, tab - start));
        cols.push_back(line.substr(start));
        if (cols.size() != 5 || cols[0] != "D")
            return fail("line " + std::to_string(lineno) + ": malformed document record");
        IndexedDocument d;
        d.doc_id = std::stoi(cols[1]);
        d.file_path = cols[2];
        d.method_name = cols[3];
        std::istringstream terms(cols[4]);
        std::string item;
        while (terms >> item) {
            const auto colon = item.rfind(':');
            if (colon == std::string::npos || colon == 0)
                return fail("line " + std::to_string(lineno) + ": bad term entry '" + item + "'");
            const int tf = std::stoi(item.substr(colon + 1));
            d.term_freq[item.substr(0, colon)] = tf;
            d.length += tf;
        }
        docs.push_back(std::move(d));
    }
    if (docs.size() != expected)
        return fail("expected " + std::to_string(expected) + " documents, found " + std::to_string(docs.size()));
    return CorpusIndex(std::move(docs));
}

inline void save_index(const CorpusIndex& index, const std::filesystem::path& path) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp);
        out << serialize_index(index);
        if (!out.flush())
            throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline CorpusIndex load_index(const std::filesystem::path& path) { return parse_index(detail::read_file(path)); }

// ---------------------------------------------------------------------------
// Retrieval

enum class Aggregation { Max, Sum };

struct RankedFile {
    std::string file_path;
    double score = 0.0;
    int best_doc = 0;
};

struct RetrievalResult {
    std::vector<RankedFile> ranked_files;

    std::vector<std::string> paths() const {
        std::vector<std::string> out;
        for (const auto& f : ranked_files)
            out.push_back(f.file_path);
        return out;
    }
};

struct ScoredDocument {
    int doc_id = 0;
    double score = 0.0;
};

/// Lowercased, deduplicated query terms in first-occurrence order.
inline std::vector<std::string> normalize_query_terms(const std::vector<std::string>& terms) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& t : terms) {
        auto l = detail::to_lower(t);
        if (!l.empty() && seen.insert(l).second)
            out.push_back(std::move(l));
    }
    return out;
}

/// Terms a query is scored with: camel-expanded terms when present.
inline const std::vector<std::string>& retrieval_terms(const SearchQuery& q) {
    return q.expanded_terms.empty() ? q.terms : q.expanded_terms;
}

/// Boolean OR candidate selection, then
///   score(d) = sum_t sqrt(tf) * idf^2 / sqrt(|d|) * coord
/// with coord = matched query terms / query terms. Sorted by score
/// descending, ties by doc id.
inline std::vector<ScoredDocument> rank_documents(const CorpusIndex& index, const std::vector<std::string>& raw_terms) {
    const auto terms = normalize_query_terms(raw_terms);
    if (terms.empty())
        return {};
    std::map<int, std::pair<double, int>> acc; // doc -> (sum, matched terms)
    for (const auto& t : terms) {
        const auto* plist = index.find(t);
        if (!plist)
            continue;
        const double idf = index.idf(t);
        for (const auto& p : *plist) {
            const auto& doc = index.document(p.doc_id);
            auto& [sum, matched] = acc[p.doc_id];
            sum += std::sqrt(static_cast<double>(p.tf)) * idf * idf / std::sqrt(static_cast<double>(doc.length));
            ++matched;
        }
    }
    std::vector<ScoredDocument> out;
    out.reserve(acc.size());
    const auto nq = static_cast<double>(terms.size());
    for (const auto& [doc, sm] : acc)
        out.push_back({doc, sm.first * (static_cast<double>(sm.second) / nq)});
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.score > b.score; });
    return out;
}

inline constexpr std::size_t kAllResults = std::numeric_limits<std::size_t>::max();

inline RetrievalResult search_terms(const CorpusIndex& index, const std::vector<std::string>& terms, std::size_t k,
                                    Aggregation agg = Aggregation::Max) {
    if (k == 0)
        throw ContractError("search: k must be at least 1");
    std::map<std::string, RankedFile> files;
    for (const auto& sd : rank_documents(index, terms)) {
        const auto& doc = index.document(sd.doc_id);
        auto [it, inserted] = files.try_emplace(doc.file_path, RankedFile{doc.file_path, sd.score, sd.doc_id});
        if (inserted)
            continue;
        // documents arrive best-first, so the first one seen is the file's best
        if (agg == Aggregation::Sum)
            it->second.score += sd.score;
    }
    RetrievalResult res;
    for (auto& [path, f] : files)
        res.ranked_files.push_back(std::move(f));
    std::stable_sort(res.ranked_files.begin(), res.ranked_files.end(),
                     [](const auto& a, const auto& b) { return a.score > b.score; });
    if (res.ranked_files.size() > k)
        res.ranked_files.resize(k);
    return res;
}

inline RetrievalResult search(const CorpusIndex& index, const SearchQuery& query, std::size_t k,
                              Aggregation agg = Aggregation::Max) {
    return search_terms(index, retrieval_terms(query), k, agg);
}

} // namespace termloc
