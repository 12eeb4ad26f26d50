#pragma once

// Retrieval metrics over a ranked file list and a gold set.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/index.hpp"
#include "termloc/ingest.hpp"

namespace termloc {

/// 1-based rank of the first gold file, or nullopt when none is listed.
inline std::optional<int> effectiveness(const std::vector<std::string>& ranked, const std::set<std::string>& gold) {
    for (std::size_t i = 0; i < ranked.size(); ++i)
        if (gold.count(ranked[i]))
            return static_cast<int>(i + 1);
    return std::nullopt;
}

inline double reciprocal_rank_at_k(const std::vector<std::string>& ranked, const std::set<std::string>& gold,
                                   std::size_t k) {
    const auto e = effectiveness(ranked, gold);
    return e && static_cast<std::size_t>(*e) <= k ? 1.0 / *e : 0.0;
}

/// Mean of precision@r over the gold hits at ranks r <= k.
inline double average_precision_at_k(const std::vector<std::string>& ranked, const std::set<std::string>& gold,
                                     std::size_t k) {
    double sum = 0.0;
    int hits = 0;
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i) {
        if (!gold.count(ranked[i]))
            continue;
        ++hits;
        sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
    return hits == 0 ? 0.0 : sum / hits;
}

inline bool hit_at_k(const std::vector<std::string>& ranked, const std::set<std::string>& gold, std::size_t k) {
    return reciprocal_rank_at_k(ranked, gold, k) > 0.0;
}

inline std::optional<int> effectiveness(const RetrievalResult& r, const GoldSet& g) {
    return effectiveness(r.paths(), g.files);
}
inline double reciprocal_rank_at_k(const RetrievalResult& r, const GoldSet& g, std::size_t k) {
    return reciprocal_rank_at_k(r.paths(), g.files, k);
}
inline double average_precision_at_k(const RetrievalResult& r, const GoldSet& g, std::size_t k) {
    return average_precision_at_k(r.paths(), g.files, k);
}

/// Percentage of requests with a hit in the top k.
inline double top_k_accuracy(const std::vector<bool>& hits) {
    if (hits.empty())
        throw ContractError("top_k_accuracy: no requests evaluated");
    std::size_t n = 0;
    for (bool h : hits)
        n += h ? 1 : 0;
    return 100.0 * static_cast<double>(n) / static_cast<double>(hits.size());
}

} // namespace termloc
