#pragma once

// Evaluating query strategies against gold sets and comparing two of them.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/index.hpp"
#include "termloc/ingest.hpp"
#include "termloc/metrics.hpp"
#include "termloc/stats.hpp"
#include "termloc/strategies.hpp"
#include "termloc/termrank.hpp"

namespace termloc {

struct QueryStrategy {
    std::string name;
    std::function<SearchQuery(const ChangeRequest&)> generator;
};

struct StrategyContext {
    TextServices services;
    RankConfig rank;
    const CorpusIndex* index = nullptr;
    std::optional<HeuristicWeights> heuristic_weights;
    const RequestCorpusStats* request_stats = nullptr;
};

inline const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names = {
        "strict", "textrank-only", "posrank-only", "title",   "title-10",  "description",
        "title-description", "code-only", "without-code", "rocchio", "heuristic"};
    return names;
}

/// Builds a strategy by name; nullopt for an unknown name.
inline std::optional<QueryStrategy> make_strategy(const std::string& name, const StrategyContext& ctx) {
    const auto svc = ctx.services;
    const auto cfg = ctx.rank;
    if (auto v = parse_variant(name))
        return QueryStrategy{name, [=, variant = *v](const ChangeRequest& cr) {
                                 return suggest(cr, cfg, svc, variant).query;
                             }};
    if (name == "title")
        return QueryStrategy{name, [=](const ChangeRequest& cr) { return baseline_title(cr, svc); }};
    if (name == "title-10")
        return QueryStrategy{name, [=](const ChangeRequest& cr) { return baseline_title_10(cr, svc); }};
    if (name == "description")
        return QueryStrategy{name, [=](const ChangeRequest& cr) { return baseline_description(cr, svc); }};
    if (name == "title-description")
        return QueryStrategy{name, [=](const ChangeRequest& cr) { return baseline_title_description(cr, svc); }};
    if (name == "code-only")
        return QueryStrategy{name, [=](const ChangeRequest& cr) {
                                 return baseline_code_tokens(cr, CodeTokenMode::Only, svc);
                             }};
    if (name == "without-code")
        return QueryStrategy{name, [=](const ChangeRequest& cr) {
                                 return baseline_code_tokens(cr, CodeTokenMode::Without, svc);
                             }};
    if (name == "rocchio") {
        if (!ctx.index)
            throw ContractError("rocchio strategy needs an index");
        const auto* index = ctx.index;
        return QueryStrategy{name, [=](const ChangeRequest& cr) {
                                 return rocchio_expand(baseline_title(cr, svc), *index);
                             }};
    }
    if (name == "heuristic") {
        if (!ctx.heuristic_weights)
            throw ValidationError("strategy 'heuristic' requires heuristic_weights in the config");
        if (!ctx.request_stats)
            throw ContractError("heuristic strategy needs request collection statistics");
        const auto weights = ctx.heuristic_weights;
        const auto* stats = ctx.request_stats;
        return QueryStrategy{name, [=](const ChangeRequest& cr) {
                                 return heuristic_model_score(cr, *stats, weights, svc);
                             }};
    }
    return std::nullopt;
}

struct RequestEval {
    std::string request_id;
    std::optional<int> effectiveness; // rank in the full result list
    double rr_at_k = 0.0;
    double ap_at_k = 0.0;
    bool hit_at_k = false;
    std::size_t query_size = 0;
};

struct EvalAggregates {
    double top_k_accuracy = 0.0; // percent
    double mrr_at_k = 0.0;
    double map_at_k = 0.0;       // percent
    std::size_t evaluated_count = 0;
    double mean_query_size = 0.0;
};

struct EvalReport {
    std::string strategy_name;
    std::size_t k = 10;
    std::map<std::string, RequestEval> per_request;
    EvalAggregates aggregates;
};

inline EvalAggregates aggregate(const std::map<std::string, RequestEval>& rows) {
    EvalAggregates a;
    a.evaluated_count = rows.size();
    if (rows.empty())
        return a;
    std::vector<bool> hits;
    double rr = 0.0, ap = 0.0, qs = 0.0;
    for (const auto& [id, r] : rows) {
        hits.push_back(r.hit_at_k);
        rr += r.rr_at_k;
        ap += r.ap_at_k;
        qs += static_cast<double>(r.query_size);
    }
    const auto n = static_cast<double>(rows.size());
    a.top_k_accuracy = top_k_accuracy(hits);
    a.mrr_at_k = rr / n;
    a.map_at_k = 100.0 * ap / n;
    a.mean_query_size = qs / n;
    return a;
}

inline RequestEval evaluate_request(const RetrievalResult& full, const GoldSet& gold, std::size_t k,
                                    std::size_t query_size) {
    RequestEval r;
    r.request_id = gold.request_id;
    const auto paths = full.paths();
    r.effectiveness = effectiveness(paths, gold.files);
    r.rr_at_k = reciprocal_rank_at_k(paths, gold.files, k);
    r.ap_at_k = average_precision_at_k(paths, gold.files, k);
    r.hit_at_k = r.rr_at_k > 0.0;
    r.query_size = query_size;
    return r;
}

/// Runs a strategy over every request of the dataset. Requests are spread
/// across `workers` threads; the report is keyed by request id.
inline EvalReport evaluate(const Dataset& ds, const CorpusIndex& index, const QueryStrategy& strategy, std::size_t k,
                           Aggregation agg = Aggregation::Max, unsigned workers = 1) {
    if (k == 0)
        throw ContractError("evaluate: k must be at least 1");
    std::vector<RequestEval> slots(ds.requests.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(ds.requests.size());
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ds.requests.size();) {
            try {
                const auto& cr = ds.requests[i];
                const auto q = strategy.generator(cr);
                const auto full = search(index, q, kAllResults, agg);
                slots[i] = evaluate_request(full, ds.goldsets.at(cr.id), k, q.terms.size());
                slots[i].request_id = cr.id;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, slots.size()))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("request " + ds.requests[i].id + ": " + errors[i]);

    EvalReport rep;
    rep.strategy_name = strategy.name;
    rep.k = k;
    for (auto& r : slots)
        rep.per_request.emplace(r.request_id, std::move(r));
    rep.aggregates = aggregate(rep.per_request);
    return rep;
}

/// Top-K accuracy for K = 1..max_k, from the stored full-list ranks.
inline std::vector<std::pair<std::size_t, double>> accuracy_sweep(const EvalReport& rep, std::size_t max_k) {
    std::vector<std::pair<std::size_t, double>> out;
    if (rep.per_request.empty())
        return out;
    for (std::size_t k = 1; k <= max_k; ++k) {
        std::vector<bool> hits;
        for (const auto& [id, r] : rep.per_request)
            hits.push_back(r.effectiveness && static_cast<std::size_t>(*r.effectiveness) <= k);
        out.emplace_back(k, top_k_accuracy(hits));
    }
    return out;
}

struct ComparisonReport {
    std::string strategy_a;
    std::string strategy_b;
    std::size_t improved = 0;
    std::size_t worsened = 0;
    std::size_t preserved = 0;
    std::size_t unranked = 0; // neither side produced a rank
    double improved_pct = 0.0;
    double worsened_pct = 0.0;
    double preserved_pct = 0.0;
    RankSummary improved_ranks; // a's ranks where a beat b
    RankSummary worsened_ranks; // a's ranks where b beat a
    RankSummary ranks_a;        // over requests ranked by both
    RankSummary ranks_b;
    double mrd = 0.0; // mean rank difference a - b
    std::optional<MannWhitneyResult> mwu;

    std::size_t compared() const { return improved + worsened + preserved; }
};

/// Request-by-request comparison of a (treatment) against b (baseline).
/// Lower rank is better; a rank beats no rank at all.
inline ComparisonReport compare(const EvalReport& a, const EvalReport& b) {
    ComparisonReport c;
    c.strategy_a = a.strategy_name;
    c.strategy_b = b.strategy_name;
    std::vector<double> imp, wor, both_a, both_b;
    for (const auto& [id, ra] : a.per_request) {
        auto it = b.per_request.find(id);
        if (it == b.per_request.end())
            continue;
        const auto& ea = ra.effectiveness;
        const auto& eb = it->second.effectiveness;
        if (!ea && !eb) {
            ++c.unranked;
            continue;
        }
        if (ea && eb) {
            both_a.push_back(*ea);
            both_b.push_back(*eb);
        }
        if (ea && (!eb || *ea < *eb)) {
            ++c.improved;
            imp.push_back(*ea);
        } else if (eb && (!ea || *eb < *ea)) {
            ++c.worsened;
            if (ea)
                wor.push_back(*ea);
        } else {
            ++c.preserved;
        }
    }
    const auto n = static_cast<double>(c.compared());
    if (n > 0) {
        c.improved_pct = 100.0 * static_cast<double>(c.improved) / n;
        c.worsened_pct = 100.0 * static_cast<double>(c.worsened) / n;
        c.preserved_pct = 100.0 * static_cast<double>(c.preserved) / n;
    }
    c.improved_ranks = summarize(imp);
    c.worsened_ranks = summarize(wor);
    c.ranks_a = summarize(both_a);
    c.ranks_b = summarize(both_b);
    if (!both_a.empty()) {
        c.mrd = c.ranks_a.mean - c.ranks_b.mean;
        c.mwu = mann_whitney_u(both_a, both_b);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Export

namespace detail {

inline std::string fmt(double v, int precision = 4) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(precision) << v;
    return o.str();
}

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

} // namespace detail

inline std::string eval_report_csv(const EvalReport& rep) {
    std::ostringstream out;
    out << "request_id,effectiveness,rr_at_" << rep.k << ",ap_at_" << rep.k << ",hit_at_" << rep.k << ",query_size\n";
    for (const auto& [id, r] : rep.per_request)
        out << id << ',' << (r.effectiveness ? std::to_string(*r.effectiveness) : "ABSENT") << ','
            << detail::fmt(r.rr_at_k, 6) << ',' << detail::fmt(r.ap_at_k, 6) << ',' << (r.hit_at_k ? 1 : 0) << ','
            << r.query_size << '\n';
    return out.str();
}

inline std::string eval_report_table(const EvalReport& rep) {
    const auto& a = rep.aggregates;
    const auto k = std::to_string(rep.k);
    std::ostringstream out;
    out << detail::pad("Query", 20) << detail::pad("#Keywords", 11) << detail::pad("MAP@" + k, 10)
        << detail::pad("MRR@" + k, 10) << "Top-" << k << " Accuracy\n";
    out << detail::pad(rep.strategy_name, 20) << detail::pad(detail::fmt(a.mean_query_size, 1), 11)
        << detail::pad(detail::fmt(a.map_at_k, 2) + "%", 10) << detail::pad(detail::fmt(a.mrr_at_k, 2), 10)
        << detail::fmt(a.top_k_accuracy, 2) << "%\n";
    out << "evaluated requests: " << a.evaluated_count << '\n';
    return out.str();
}

inline std::string comparison_csv(const ComparisonReport& c) {
    std::ostringstream out;
    auto summary = [&](const RankSummary& s) {
        out << ',' << detail::fmt(s.mean, 2) << ',' << detail::fmt(s.q1, 2) << ',' << detail::fmt(s.q2, 2) << ','
            << detail::fmt(s.q3, 2) << ',' << detail::fmt(s.min, 0) << ',' << detail::fmt(s.max, 0);
    };
    out << "strategy_a,strategy_b,queries,improved,improved_pct,imp_mean,imp_q1,imp_q2,imp_q3,imp_min,imp_max,"
           "worsened,worsened_pct,wor_mean,wor_q1,wor_q2,wor_q3,wor_min,wor_max,preserved,preserved_pct,unranked,"
           "mrd,mwu_u,mwu_p\n";
    out << c.strategy_a << ',' << c.strategy_b << ',' << c.compared() << ',' << c.improved << ','
        << detail::fmt(c.improved_pct, 2);
    summary(c.improved_ranks);
    out << ',' << c.worsened << ',' << detail::fmt(c.worsened_pct, 2);
    summary(c.worsened_ranks);
    out << ',' << c.preserved << ',' << detail::fmt(c.preserved_pct, 2) << ',' << c.unranked << ','
        << detail::fmt(c.mrd, 2) << ',' << (c.mwu ? detail::fmt(c.mwu->u, 1) : "NA") << ','
        << (c.mwu ? detail::fmt(c.mwu->p, 6) : "NA") << '\n';
    return out.str();
}

inline std::string comparison_table(const ComparisonReport& c) {
    using detail::fmt;
    using detail::pad;
    std::ostringstream out;
    auto block = [&](const std::string& count, const RankSummary& s) {
        out << pad(count, 16) << pad(fmt(s.mean, 1), 8) << pad(fmt(s.q1, 1), 8) << pad(fmt(s.q2, 1), 8)
            << pad(fmt(s.q3, 1), 8) << pad(fmt(s.min, 0), 6) << pad(fmt(s.max, 0), 6);
    };
    out << c.strategy_a << " vs. " << c.strategy_b << '\n';
    out << pad("#Queries", 10) << pad("| Improvement", 60) << pad("| Worsening", 60) << "| Preserving\n";
    out << pad("", 10) << "| " << pad("#Improved", 16) << pad("Mean", 8) << pad("Q1", 8) << pad("Q2", 8)
        << pad("Q3", 8) << pad("Min.", 6) << pad("Max.", 6) << "| " << pad("#Worsened", 16) << pad("Mean", 8)
        << pad("Q1", 8) << pad("Q2", 8) << pad("Q3", 8) << pad("Min.", 6) << pad("Max.", 6) << "| #Preserved\n";
    out << pad(std::to_string(c.compared()), 10) << "| ";
    block(std::to_string(c.improved) + " (" + fmt(c.improved_pct, 2) + "%)", c.improved_ranks);
    out << "| ";
    block(std::to_string(c.worsened) + " (" + fmt(c.worsened_pct, 2) + "%)", c.worsened_ranks);
    out << "| " << c.preserved << " (" << fmt(c.preserved_pct, 2) << "%)\n";
    out << "MRD: " << fmt(c.mrd, 2);
    if (c.mwu)
        out << "  MWU U=" << fmt(c.mwu->u, 1) << " p=" << fmt(c.mwu->p, 6) << (c.mwu->exact ? " (exact)" : "");
    else
        out << "  MWU: n/a";
    out << "  unranked by both: " << c.unranked << '\n';
    return out.str();
}

} // namespace termloc
