#pragma once

// Query generators: the term-ranking technique, request-field baselines, and
// two competitors (Rocchio pseudo-relevance feedback and a linear
// feature-weighted term scorer).

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/index.hpp"
#include "termloc/termrank.hpp"

namespace termloc {

namespace detail {

inline std::vector<std::string> distinct_texts(const std::vector<Sentence>& sentences,
                                               const std::function<bool(const Token&)>& keep) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& s : sentences)
        for (const auto& t : s.tokens)
            if (keep(t) && seen.insert(t.text).second)
                out.push_back(t.text);
    return out;
}

inline bool is_code_token(const Token& t) { return t.is_camel_origin || t.is_dotted_origin; }

} // namespace detail

inline SearchQuery baseline_title(const ChangeRequest& cr, const TextServices& svc = {}) {
    return make_query(cr.id, unique_terms(preprocess_text(cr.title, *svc.stoplist)));
}

inline SearchQuery baseline_title_10(const ChangeRequest& cr, const TextServices& svc = {}) {
    auto terms = unique_terms(preprocess_text(cr.title, *svc.stoplist));
    if (terms.size() > 10)
        terms.resize(10);
    return make_query(cr.id, std::move(terms));
}

inline SearchQuery baseline_description(const ChangeRequest& cr, const TextServices& svc = {}) {
    return make_query(cr.id, unique_terms(preprocess_text(cr.description, *svc.stoplist)));
}

inline SearchQuery baseline_title_description(const ChangeRequest& cr, const TextServices& svc = {}) {
    return make_query(cr.id, unique_terms(preprocess_request(cr, *svc.stoplist)));
}

enum class CodeTokenMode { Only, Without };

/// Title+description terms restricted to (or stripped of) code tokens: camel
/// case or dotted compounds and the pieces split from them.
inline SearchQuery baseline_code_tokens(const ChangeRequest& cr, CodeTokenMode mode, const TextServices& svc = {}) {
    const auto sentences = preprocess_request(cr, *svc.stoplist);
    const bool want_code = mode == CodeTokenMode::Only;
    return make_query(cr.id, detail::distinct_texts(sentences, [&](const Token& t) {
                          return detail::is_code_token(t) == want_code;
                      }));
}

/// Pseudo-relevance feedback: weight the terms of the top k_docs retrieved
/// documents by sum(tf * idf) and append the best expansion_size new ones.
inline SearchQuery rocchio_expand(const SearchQuery& base, const CorpusIndex& index, std::size_t k_docs = 5,
                                  std::size_t expansion_size = 10) {
    auto docs = rank_documents(index, retrieval_terms(base));
    if (docs.size() > k_docs)
        docs.resize(k_docs);
    std::set<std::string> present;
    for (const auto& t : normalize_query_terms(retrieval_terms(base)))
        present.insert(t);
    std::map<std::string, double> weight;
    for (const auto& sd : docs)
        for (const auto& [term, tf] : index.document(sd.doc_id).term_freq)
            if (!present.count(term))
                weight[term] += static_cast<double>(tf) * index.idf(term);

    auto terms = base.terms;
    for (const auto& t : rank_order(weight)) {
        if (terms.size() >= base.terms.size() + expansion_size)
            break;
        terms.push_back(t);
    }
    return make_query(base.request_id, std::move(terms));
}

/// Document frequencies of request terms across a change-request collection.
struct RequestCorpusStats {
    std::size_t request_count = 0;
    std::map<std::string, int> doc_freq;

    static RequestCorpusStats build(const std::vector<ChangeRequest>& requests, const TextServices& svc = {}) {
        RequestCorpusStats s;
        s.request_count = requests.size();
        for (const auto& cr : requests)
            for (const auto& t : unique_terms(preprocess_request(cr, *svc.stoplist)))
                ++s.doc_freq[t];
        return s;
    }

    double idf(const std::string& term) const {
        auto it = doc_freq.find(term);
        const int df = it == doc_freq.end() ? 1 : std::max(1, it->second);
        const double n = static_cast<double>(std::max<std::size_t>(request_count, 1));
        return 1.0 + std::log(n / df);
    }
};

/// Weights for tf-idf, inSumAndBody, isInMiddle, isCamelCase.
using HeuristicWeights = std::array<double, 4>;

struct HeuristicFeatures {
    double tfidf = 0.0;
    double in_sum_and_body = 0.0;
    double in_middle = 0.0;
    double camel_case = 0.0;

    double score(const HeuristicWeights& w) const {
        return w[0] * tfidf + w[1] * in_sum_and_body + w[2] * in_middle + w[3] * camel_case;
    }
};

/// Features of every candidate term of a request. isInMiddle marks terms whose
/// first description occurrence falls in the middle third of the description.
inline std::map<std::string, HeuristicFeatures> heuristic_features(const ChangeRequest& cr,
                                                                  const RequestCorpusStats& stats,
                                                                  const TextServices& svc = {}) {
    const auto title = preprocess_text(cr.title, *svc.stoplist);
    const auto desc = preprocess_text(cr.description, *svc.stoplist);
    std::map<std::string, int> tf;
    std::set<std::string> in_title, in_desc;
    std::vector<std::string> desc_seq;
    for (const auto& s : title)
        for (const auto& t : s.tokens) {
            ++tf[t.text];
            in_title.insert(t.text);
        }
    for (const auto& s : desc)
        for (const auto& t : s.tokens) {
            ++tf[t.text];
            in_desc.insert(t.text);
            desc_seq.push_back(t.text);
        }
    std::map<std::string, std::size_t> first_pos;
    for (std::size_t i = 0; i < desc_seq.size(); ++i)
        first_pos.try_emplace(desc_seq[i], i);

    std::map<std::string, HeuristicFeatures> out;
    const auto n = desc_seq.size();
    for (const auto& [term, count] : tf) {
        HeuristicFeatures f;
        f.tfidf = count * stats.idf(term);
        f.in_sum_and_body = in_title.count(term) && in_desc.count(term) ? 1.0 : 0.0;
        if (auto it = first_pos.find(term); it != first_pos.end()) {
            const auto p3 = 3 * it->second;
            f.in_middle = p3 >= n && p3 < 2 * n ? 1.0 : 0.0;
        }
        f.camel_case = is_camel_compound(term) ? 1.0 : 0.0;
        out.emplace(term, f);
    }
    return out;
}

inline SearchQuery heuristic_model_score(const ChangeRequest& cr, const RequestCorpusStats& stats,
                                         const std::optional<HeuristicWeights>& weights, const TextServices& svc = {},
                                         std::size_t top = 10) {
    if (!weights)
        throw ValidationError("heuristic model: feature weights must be configured (heuristic_weights)");
    std::map<std::string, double> scores;
    for (const auto& [term, f] : heuristic_features(cr, stats, svc))
        scores.emplace(term, f.score(*weights));
    auto order = rank_order(scores);
    if (order.size() > top)
        order.resize(top);
    return make_query(cr.id, std::move(order));
}

} // namespace termloc
