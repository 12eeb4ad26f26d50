#pragma once

// Text graphs over the candidate terms of one change request.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "termloc/errors.hpp"
#include "termloc/pos.hpp"
#include "termloc/preprocess.hpp"

namespace termloc {

enum class GraphFlavor { Cooccurrence, PosDependence };

/// Unweighted directed graph; vertices are unique term strings.
struct TextGraph {
    GraphFlavor flavor = GraphFlavor::Cooccurrence;
    std::set<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges;

    void add_edge(const std::string& from, const std::string& to) {
        if (from == to)
            return;
        vertices.insert(from);
        vertices.insert(to);
        edges.emplace(from, to);
    }

    bool has_edge(const std::string& from, const std::string& to) const { return edges.count({from, to}) > 0; }

    std::map<std::string, std::set<std::string>> out_neighbors() const {
        std::map<std::string, std::set<std::string>> out;
        for (const auto& v : vertices)
            out[v];
        for (const auto& [a, b] : edges)
            out[a].insert(b);
        return out;
    }

    std::map<std::string, std::set<std::string>> in_neighbors() const {
        std::map<std::string, std::set<std::string>> in;
        for (const auto& v : vertices)
            in[v];
        for (const auto& [a, b] : edges)
            in[b].insert(a);
        return in;
    }

    /// "<src>\t<dst>" per edge, sorted.
    std::string edge_list() const {
        std::ostringstream out;
        for (const auto& [a, b] : edges)
            out << a << '\t' << b << '\n';
        return out.str();
    }

    std::string describe() const {
        std::ostringstream out;
        out << "flavor " << (flavor == GraphFlavor::Cooccurrence ? "cooccurrence" : "posdep") << '\n';
        out << "vertices " << vertices.size() << '\n';
        for (const auto& v : vertices)
            out << "  " << v << '\n';
        out << "edges " << edges.size() << '\n';
        for (const auto& [a, b] : edges)
            out << "  " << a << " -> " << b << '\n';
        return out.str();
    }
};

/// Window-of-two co-occurrence within each sentence, both directions.
inline TextGraph build_cooccurrence_graph(const std::vector<Sentence>& sentences) {
    TextGraph g;
    g.flavor = GraphFlavor::Cooccurrence;
    for (const auto& s : sentences) {
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            g.vertices.insert(s.tokens[i].text);
            if (i + 1 < s.tokens.size()) {
                g.add_edge(s.tokens[i].text, s.tokens[i + 1].text);
                g.add_edge(s.tokens[i + 1].text, s.tokens[i].text);
            }
        }
    }
    return g;
}

/// Grammatical-modification edges, per sentence:
///  - distinct nouns are chained both ways in first-occurrence order;
///  - each verb points at every other noun, verb and adjective;
///  - adjectives, adverbs and other words emit nothing.
inline TextGraph build_posdep_graph(const std::vector<Sentence>& sentences,
                                    const std::vector<std::vector<PosTag>>& tags) {
    if (tags.size() != sentences.size())
        throw ContractError("build_posdep_graph: one tag list per sentence required");
    TextGraph g;
    g.flavor = GraphFlavor::PosDependence;
    for (std::size_t si = 0; si < sentences.size(); ++si) {
        const auto& toks = sentences[si].tokens;
        if (tags[si].size() != toks.size())
            throw ContractError("build_posdep_graph: sentence " + std::to_string(si) + " has " +
                                std::to_string(toks.size()) + " tokens but " + std::to_string(tags[si].size()) +
                                " tags");
        // distinct terms in first-occurrence order, tagged by their first occurrence
        std::vector<std::pair<std::string, PosTag>> terms;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            g.vertices.insert(toks[i].text);
            if (seen.insert(toks[i].text).second)
                terms.emplace_back(toks[i].text, tags[si][i]);
        }

        const std::string* prev_noun = nullptr;
        for (const auto& [term, tag] : terms) {
            if (tag != PosTag::Noun)
                continue;
            if (prev_noun) {
                g.add_edge(*prev_noun, term);
                g.add_edge(term, *prev_noun);
            }
            prev_noun = &term;
        }

        for (const auto& [verb, tag] : terms) {
            if (tag != PosTag::Verb)
                continue;
            for (const auto& [other, other_tag] : terms) {
                const auto cls = rank_class(other_tag);
                if (cls == PosRankClass::Primary || cls == PosRankClass::Secondary)
                    g.add_edge(verb, other);
            }
        }
    }
    return g;
}

inline TextGraph build_posdep_graph(const std::vector<Sentence>& sentences,
                                    const PosAnnotator& annotator = default_annotator()) {
    std::vector<std::vector<PosTag>> tags;
    tags.reserve(sentences.size());
    for (const auto& s : sentences)
        tags.push_back(annotator.annotate(s));
    return build_posdep_graph(sentences, tags);
}

} // namespace termloc
