#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "random_text.hpp"
#include "termloc/textgraph.hpp"

using namespace termloc;

namespace {

using Edges = std::set<std::pair<std::string, std::string>>;

Sentence sentence(std::initializer_list<const char*> words) {
    Sentence s;
    for (const char* w : words)
        s.tokens.push_back({w, false, false});
    return s;
}

Edges both_ways(std::initializer_list<std::pair<const char*, const char*>> pairs) {
    Edges e;
    for (const auto& [a, b] : pairs) {
        e.emplace(a, b);
        e.emplace(b, a);
    }
    return e;
}

std::vector<Sentence> random_sentences(std::mt19937& rng) {
    return preprocess_text(gen::random_text(rng, 60), StopList::bundled());
}

} // namespace

TEST(Cooccurrence, WorkedTitleSentence) {
    const auto s = preprocess_text("Custom search results not shown hierarchically in the java search results view",
                                   StopList::bundled());
    const auto g = build_cooccurrence_graph(s);
    EXPECT_EQ(g.edges, both_ways({{"Custom", "search"},
                                  {"search", "hierarchically"},
                                  {"hierarchically", "java"},
                                  {"java", "search"},
                                  {"search", "view"}}));
    EXPECT_EQ(g.vertices, (std::set<std::string>{"Custom", "search", "hierarchically", "java", "view"}));
}

TEST(Cooccurrence, SingleTokenHasNoEdges) {
    const auto g = build_cooccurrence_graph({sentence({"element"})});
    EXPECT_EQ(g.vertices, std::set<std::string>{"element"});
    EXPECT_TRUE(g.edges.empty());
}

TEST(Cooccurrence, DuplicatePairsCollapse) {
    const auto g = build_cooccurrence_graph({sentence({"a", "b", "a", "b"})});
    EXPECT_EQ(g.edges, both_ways({{"a", "b"}}));
}

TEST(Cooccurrence, WindowStopsAtSentenceEnd) {
    const auto g = build_cooccurrence_graph({sentence({"a", "b"}), sentence({"c", "d"})});
    EXPECT_FALSE(g.has_edge("b", "c"));
    EXPECT_EQ(g.edges.size(), 4u);
}

TEST(PosDependence, WorkedSentenceVerbEdges) {
    const auto s = sentence({"element", "reported", "plain", "flat", "element", "hierarchical", "java", "search", "view"});
    const auto g = build_posdep_graph({s});
    for (const char* t : {"search", "view", "java", "element", "plain", "flat", "hierarchical"})
        EXPECT_TRUE(g.has_edge("reported", t)) << t;
    for (const char* adj : {"plain", "flat", "hierarchical"})
        EXPECT_TRUE(g.out_neighbors().at(adj).empty()) << adj;
}

TEST(PosDependence, NounsChainInFirstOccurrenceOrder) {
    const auto s = sentence({"element", "reported", "plain", "flat", "element", "hierarchical", "java", "search", "view"});
    const auto g = build_posdep_graph({s});
    Edges chain;
    for (const auto& e : g.edges)
        if (e.first != "reported")
            chain.insert(e);
    EXPECT_EQ(chain, both_ways({{"element", "java"}, {"java", "search"}, {"search", "view"}}));
}

TEST(PosDependence, WorkedExampleModuloDocumentedChainDeviation) {
    const Edges example = [] {
        auto e = both_ways({{"search", "view"}, {"view", "java"}, {"java", "element"}});
        for (const char* t : {"search", "view", "java", "element", "plain", "flat", "hierarchical"})
            e.emplace("reported", t);
        return e;
    }();
    std::ifstream in(std::filesystem::path(TERMLOC_FIXTURES) / "posdep_chain_deviation.tsv");
    ASSERT_TRUE(in);
    Edges example_only, built_only;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream cols(line);
        std::string kind, a, b;
        cols >> kind >> a >> b;
        (kind == "example_only" ? example_only : built_only).emplace(a, b);
    }
    Edges expected;
    for (const auto& e : example)
        if (!example_only.count(e))
            expected.insert(e);
    expected.insert(built_only.begin(), built_only.end());

    const auto s = sentence({"element", "reported", "plain", "flat", "element", "hierarchical", "java", "search", "view"});
    EXPECT_EQ(build_posdep_graph({s}).edges, expected);
}

TEST(PosDependence, SingleNounHasNoEdges) {
    const auto g = build_posdep_graph({sentence({"element"})});
    EXPECT_TRUE(g.edges.empty());
    EXPECT_EQ(g.vertices.size(), 1u);
}

TEST(PosDependence, VerbsModifyEachOther) {
    const auto g = build_posdep_graph({sentence({"run", "stop"})});
    EXPECT_EQ(g.edges, both_ways({{"run", "stop"}}));
}

TEST(PosDependence, VerbEdgesByExhaustiveRuleApplication) {
    // explicit tags: n=noun v=verb a=adjective r=adverb o=other
    const auto s = sentence({"n1", "v1", "a1", "r1", "o1", "v2", "n2"});
    const std::vector<PosTag> tags = {PosTag::Noun,  PosTag::Verb, PosTag::Adjective, PosTag::Adverb,
                                      PosTag::Other, PosTag::Verb, PosTag::Noun};
    const auto g = build_posdep_graph({s}, std::vector<std::vector<PosTag>>{tags});
    Edges expected = both_ways({{"n1", "n2"}});
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (tags[i] != PosTag::Verb)
            continue;
        for (std::size_t j = 0; j < tags.size(); ++j) {
            const auto c = rank_class(tags[j]);
            if (i != j && (c == PosRankClass::Primary || c == PosRankClass::Secondary))
                expected.emplace(s.tokens[i].text, s.tokens[j].text);
        }
    }
    EXPECT_EQ(g.edges, expected);
    EXPECT_TRUE(g.in_neighbors().at("o1").empty());
    EXPECT_TRUE(g.in_neighbors().at("r1").empty());
}

TEST(PosDependence, TagLengthMismatchIsAContractError) {
    const std::vector<std::vector<PosTag>> tags = {{PosTag::Noun}};
    EXPECT_THROW(build_posdep_graph({sentence({"a", "b"})}, tags), ContractError);
    EXPECT_THROW(build_posdep_graph({sentence({"a"}), sentence({"b"})}, tags), ContractError);
}

TEST(TextGraphExport, EdgeListFormat) {
    const auto g = build_cooccurrence_graph({sentence({"a", "b"})});
    EXPECT_EQ(g.edge_list(), "a\tb\nb\ta\n");
    EXPECT_NE(g.describe().find("flavor cooccurrence"), std::string::npos);
}

// ---- properties ----

class GraphProperty : public ::testing::TestWithParam<int> {};

TEST_P(GraphProperty, CooccurrenceIsSymmetricWithoutSelfLoops) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()));
    for (int i = 0; i < 100; ++i) {
        const auto g = build_cooccurrence_graph(random_sentences(rng));
        for (const auto& [a, b] : g.edges) {
            ASSERT_NE(a, b);
            ASSERT_TRUE(g.has_edge(b, a));
            ASSERT_TRUE(g.vertices.count(a) && g.vertices.count(b));
        }
    }
}

TEST_P(GraphProperty, CooccurrenceIsUnionOverSentences) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 10);
    for (int i = 0; i < 100; ++i) {
        const auto sentences = random_sentences(rng);
        TextGraph uni;
        for (const auto& s : sentences) {
            const auto part = build_cooccurrence_graph({s});
            uni.vertices.insert(part.vertices.begin(), part.vertices.end());
            uni.edges.insert(part.edges.begin(), part.edges.end());
        }
        const auto g = build_cooccurrence_graph(sentences);
        ASSERT_EQ(g.edges, uni.edges);
        ASSERT_EQ(g.vertices, uni.vertices);
    }
}

TEST_P(GraphProperty, AddingASentenceNeverRemovesEdges) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 20);
    for (int i = 0; i < 100; ++i) {
        auto sentences = random_sentences(rng);
        const auto before_c = build_cooccurrence_graph(sentences);
        const auto before_p = build_posdep_graph(sentences);
        for (const auto& s : random_sentences(rng))
            sentences.push_back(s);
        const auto after_c = build_cooccurrence_graph(sentences);
        const auto after_p = build_posdep_graph(sentences);
        ASSERT_TRUE(std::includes(after_c.edges.begin(), after_c.edges.end(), before_c.edges.begin(),
                                  before_c.edges.end()));
        ASSERT_TRUE(std::includes(after_p.edges.begin(), after_p.edges.end(), before_p.edges.begin(),
                                  before_p.edges.end()));
    }
}

TEST_P(GraphProperty, NoPosEdgeLeavesAdjectivesOrAdverbs) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 30);
    const auto& ann = default_annotator();
    for (int i = 0; i < 100; ++i) {
        const auto sentences = random_sentences(rng);
        const auto g = build_posdep_graph(sentences);
        // a term's tag is read per sentence; collect those that never act as noun or verb
        std::set<std::string> emitters;
        for (const auto& s : sentences) {
            const auto tags = ann.annotate(s);
            for (std::size_t k = 0; k < tags.size(); ++k)
                if (tags[k] == PosTag::Noun || tags[k] == PosTag::Verb)
                    emitters.insert(s.tokens[k].text);
        }
        for (const auto& [a, b] : g.edges)
            ASSERT_TRUE(emitters.count(a)) << a << " -> " << b;
    }
}

TEST_P(GraphProperty, BothFlavorsShareVertices) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 40);
    for (int i = 0; i < 100; ++i) {
        const auto sentences = random_sentences(rng);
        const auto terms = unique_terms(sentences);
        const std::set<std::string> expected(terms.begin(), terms.end());
        ASSERT_EQ(build_cooccurrence_graph(sentences).vertices, expected);
        ASSERT_EQ(build_posdep_graph(sentences).vertices, expected);
    }
}

TEST_P(GraphProperty, Deterministic) {
    std::mt19937 rng(static_cast<unsigned>(GetParam()) + 50);
    for (int i = 0; i < 50; ++i) {
        const auto sentences = random_sentences(rng);
        ASSERT_EQ(build_cooccurrence_graph(sentences).edge_list(), build_cooccurrence_graph(sentences).edge_list());
        ASSERT_EQ(build_posdep_graph(sentences).edge_list(), build_posdep_graph(sentences).edge_list());
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperty, ::testing::Values(1, 2, 3));
