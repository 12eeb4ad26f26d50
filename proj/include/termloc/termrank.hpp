#pragma once

// Graph-based term weighting and search-term selection for a change request.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/ingest.hpp"
#include "termloc/pos.hpp"
#include "termloc/preprocess.hpp"
#include "termloc/textgraph.hpp"

namespace termloc {

struct RankConfig {
    double damping = 0.85;
    double init_score = 0.25;
    double convergence_epsilon = 0.0001;
    int max_iterations = 100;
    int top_k = 10;

    void validate() const {
        if (!(damping >= 0.0 && damping <= 1.0))
            throw ValidationError("damping must lie in [0,1]");
        if (!(convergence_epsilon > 0.0))
            throw ValidationError("convergence_epsilon must be positive");
        if (max_iterations < 1)
            throw ValidationError("max_iterations must be at least 1");
        if (top_k < 1)
            throw ValidationError("top_k must be at least 1");
    }
};

struct RankResult {
    std::map<std::string, double> scores;
    int iterations = 0;
    bool converged = false;
};

namespace detail {

// score(i) = (1 - d) + d * sum_{j in sources(i)} score(j) / divisor(j)
// Jacobi sweeps until the max-norm change drops below epsilon.
inline RankResult power_iterate(const std::vector<std::string>& vertices,
                                const std::vector<std::vector<std::size_t>>& sources,
                                const std::vector<double>& divisor, const RankConfig& cfg) {
    cfg.validate();
    RankResult res;
    const auto n = vertices.size();
    if (n == 0) {
        res.converged = true;
        return res;
    }
    std::vector<double> cur(n, cfg.init_score), next(n);
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double vote = 0.0;
            for (auto j : sources[i])
                vote += cur[j] / divisor[j];
            next[i] = (1.0 - cfg.damping) + cfg.damping * vote;
            delta = std::max(delta, std::abs(next[i] - cur[i]));
        }
        cur.swap(next);
        res.iterations = it;
        if (delta < cfg.convergence_epsilon) {
            res.converged = true;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        res.scores.emplace(vertices[i], cur[i]);
    return res;
}

inline std::map<std::string, std::size_t> vertex_index(const std::vector<std::string>& vertices) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        idx.emplace(vertices[i], i);
    return idx;
}

} // namespace detail

/// TextRank over an undirected (symmetric) co-occurrence graph.
inline RankResult textrank_run(const TextGraph& g, const RankConfig& cfg = {}) {
    for (const auto& [a, b] : g.edges)
        if (!g.has_edge(b, a))
            throw ContractError("textrank: graph is not symmetric (" + a + " -> " + b + ")");
    const std::vector<std::string> vertices(g.vertices.begin(), g.vertices.end());
    const auto idx = detail::vertex_index(vertices);
    std::vector<std::vector<std::size_t>> sources(vertices.size());
    std::vector<double> degree(vertices.size(), 0.0);
    for (const auto& [a, b] : g.edges) {
        sources[idx.at(a)].push_back(idx.at(b));
        degree[idx.at(a)] += 1.0;
    }
    return detail::power_iterate(vertices, sources, degree, cfg);
}

/// POSRank: votes flow along edge direction, split over the voter's out-degree.
inline RankResult posrank_run(const TextGraph& g, const RankConfig& cfg = {}) {
    const std::vector<std::string> vertices(g.vertices.begin(), g.vertices.end());
    const auto idx = detail::vertex_index(vertices);
    std::vector<std::vector<std::size_t>> sources(vertices.size());
    std::vector<double> out_degree(vertices.size(), 0.0);
    for (const auto& [a, b] : g.edges) {
        sources[idx.at(b)].push_back(idx.at(a));
        out_degree[idx.at(a)] += 1.0;
    }
    return detail::power_iterate(vertices, sources, out_degree, cfg);
}

inline std::map<std::string, double> textrank(const TextGraph& g, const RankConfig& cfg = {}) {
    return textrank_run(g, cfg).scores;
}

inline std::map<std::string, double> posrank(const TextGraph& g, const RankConfig& cfg = {}) {
    return posrank_run(g, cfg).scores;
}

/// Orders terms by descending score, ties by ascending term.
inline std::vector<std::string> rank_order(const std::map<std::string, double>& scores) {
    std::vector<std::pair<std::string, double>> items(scores.begin(), scores.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    std::vector<std::string> out;
    out.reserve(items.size());
    for (auto& [t, s] : items)
        out.push_back(std::move(t));
    return out;
}

/// Position-based degree of interest: 1 - position/size, top term gets 1.
inline std::map<std::string, double> normalize(const std::map<std::string, double>& scores) {
    std::map<std::string, double> out;
    const auto order = rank_order(scores);
    const auto size = static_cast<double>(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        out.emplace(order[pos], 1.0 - static_cast<double>(pos) / size);
    return out;
}

inline std::map<std::string, double> title_weight(const std::set<std::string>& candidates,
                                                  const std::set<std::string>& title_terms) {
    std::map<std::string, double> out;
    for (const auto& c : candidates)
        out.emplace(c, title_terms.count(c) ? 1.0 : 0.0);
    return out;
}

enum class RankVariant { Strict, TextRankOnly, PosRankOnly };

inline std::string_view variant_name(RankVariant v) {
    switch (v) {
    case RankVariant::Strict:
        return "strict";
    case RankVariant::TextRankOnly:
        return "textrank-only";
    case RankVariant::PosRankOnly:
        return "posrank-only";
    }
    return "strict";
}

inline std::optional<RankVariant> parse_variant(std::string_view name) {
    for (auto v : {RankVariant::Strict, RankVariant::TextRankOnly, RankVariant::PosRankOnly})
        if (variant_name(v) == name)
            return v;
    return std::nullopt;
}

struct TermScore {
    std::string term;
    double tr_raw = 0.0;
    double posr_raw = 0.0;
    double tr_norm = 0.0;
    double posr_norm = 0.0;
    double title_score = 0.0;
    double final_score = 0.0;
};

/// Rows in final rank order.
struct TermScoreTable {
    std::vector<TermScore> rows;

    const TermScore* find(const std::string& term) const {
        for (const auto& r : rows)
            if (r.term == term)
                return &r;
        return nullptr;
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "term,tr_raw,posr_raw,tr_norm,posr_norm,title,final\n";
        out << std::fixed << std::setprecision(6);
        for (const auto& r : rows)
            out << r.term << ',' << r.tr_raw << ',' << r.posr_raw << ',' << r.tr_norm << ',' << r.posr_norm << ','
                << r.title_score << ',' << r.final_score << '\n';
        return out.str();
    }
};

struct SearchQuery {
    std::string request_id;
    std::vector<std::string> terms;
    std::vector<std::string> expanded_terms;
};

/// Appends camel-case fragments after each compound; fragments shorter than
/// two characters are dropped, duplicates keep their first position.
inline std::vector<std::string> expand_camel(const std::vector<std::string>& terms) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto push = [&](const std::string& t) {
        if (seen.insert(t).second)
            out.push_back(t);
    };
    for (const auto& t : terms) {
        push(t);
        const auto parts = split_camel(t);
        if (parts.size() < 2)
            continue;
        for (const auto& p : parts)
            if (p.size() >= 2)
                push(p);
    }
    return out;
}

inline SearchQuery make_query(std::string request_id, std::vector<std::string> terms) {
    SearchQuery q;
    q.request_id = std::move(request_id);
    q.expanded_terms = expand_camel(terms);
    q.terms = std::move(terms);
    return q;
}

/// Stop list and POS annotator shared by every request.
struct TextServices {
    const StopList* stoplist = &StopList::bundled();
    const PosAnnotator* annotator = &default_annotator();
};

struct Suggestion {
    SearchQuery query;
    TermScoreTable table;
    TextGraph cooccurrence;
    TextGraph posdep;
    RankResult textrank;
    RankResult posrank;
    std::vector<std::string> diagnostics;
};

/// Full term-selection pipeline for one change request.
inline Suggestion suggest(const ChangeRequest& cr, const RankConfig& cfg = {}, const TextServices& svc = {},
                          RankVariant variant = RankVariant::Strict) {
    cfg.validate();
    Suggestion out;
    out.query.request_id = cr.id;

    const auto sentences = preprocess_request(cr, *svc.stoplist);
    const auto candidates = unique_terms(sentences);
    if (candidates.empty()) {
        out.diagnostics.push_back("request " + cr.id + ": no candidate terms after preprocessing");
        return out;
    }

    out.cooccurrence = build_cooccurrence_graph(sentences);
    out.posdep = build_posdep_graph(sentences, *svc.annotator);
    out.textrank = textrank_run(out.cooccurrence, cfg);
    out.posrank = posrank_run(out.posdep, cfg);
    if (!out.textrank.converged)
        out.diagnostics.push_back("textrank stopped at the iteration limit without converging");
    if (!out.posrank.converged)
        out.diagnostics.push_back("posrank stopped at the iteration limit without converging");

    const auto tr_norm = normalize(out.textrank.scores);
    const auto posr_norm = normalize(out.posrank.scores);

    std::set<std::string> title_terms;
    for (const auto& s : preprocess_text(cr.title, *svc.stoplist))
        for (const auto& t : s.tokens)
            title_terms.insert(t.text);
    const auto title = title_weight({candidates.begin(), candidates.end()}, title_terms);

    std::map<std::string, double> finals;
    for (const auto& term : candidates) {
        TermScore row;
        row.term = term;
        row.tr_raw = out.textrank.scores.at(term);
        row.posr_raw = out.posrank.scores.at(term);
        // a disabled component contributes zero to both its column and the sum
        row.tr_norm = variant == RankVariant::PosRankOnly ? 0.0 : tr_norm.at(term);
        row.posr_norm = variant == RankVariant::TextRankOnly ? 0.0 : posr_norm.at(term);
        row.title_score = title.at(term);
        row.final_score = row.tr_norm + row.posr_norm + row.title_score;
        finals.emplace(term, row.final_score);
        out.table.rows.push_back(row);
    }

    const auto order = rank_order(finals);
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position.emplace(order[i], i);
    std::sort(out.table.rows.begin(), out.table.rows.end(),
              [&](const TermScore& a, const TermScore& b) { return position.at(a.term) < position.at(b.term); });

    const auto k = std::min<std::size_t>(static_cast<std::size_t>(cfg.top_k), order.size());
    out.query = make_query(cr.id, {order.begin(), order.begin() + static_cast<long>(k)});
    return out;
}

} // namespace termloc
