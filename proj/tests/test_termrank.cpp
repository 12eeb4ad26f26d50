#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "random_text.hpp"
#include "termloc/ingest.hpp"
#include "termloc/termrank.hpp"

using namespace termloc;

namespace {

using Strings = std::vector<std::string>;

TextGraph graph(GraphFlavor f, std::initializer_list<const char*> vertices,
                std::initializer_list<std::pair<const char*, const char*>> edges, bool both_ways) {
    TextGraph g;
    g.flavor = f;
    for (const char* v : vertices)
        g.vertices.insert(v);
    for (const auto& [a, b] : edges) {
        g.add_edge(a, b);
        if (both_ways)
            g.add_edge(b, a);
    }
    return g;
}

TextGraph random_graph(std::mt19937& rng, bool symmetric) {
    std::uniform_int_distribution<int> nv(1, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = nv(rng);
    const double density = coin(rng);
    TextGraph g;
    g.flavor = symmetric ? GraphFlavor::Cooccurrence : GraphFlavor::PosDependence;
    for (int i = 0; i < n; ++i)
        g.vertices.insert("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = symmetric ? i + 1 : 0; j < n; ++j) {
            if (i == j || coin(rng) > density)
                continue;
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
            if (symmetric)
                g.add_edge("v" + std::to_string(j), "v" + std::to_string(i));
        }
    return g;
}

ChangeRequest showcase() {
    return load_requests(std::filesystem::path(TERMLOC_FIXTURES) / "showcase" / "requests.json").at(0);
}

} // namespace

// ---- TextRank ----

TEST(TextRank, IsolatedVertexScoresTeleportFloor) {
    const auto s = textrank(graph(GraphFlavor::Cooccurrence, {"a"}, {}, true));
    EXPECT_NEAR(s.at("a"), 0.15, 1e-12);
}

TEST(TextRank, SingleEdgeConvergesToOne) {
    const auto s = textrank(graph(GraphFlavor::Cooccurrence, {}, {{"a", "b"}}, true));
    EXPECT_NEAR(s.at("a"), 1.0, 1e-3);
    EXPECT_NEAR(s.at("b"), 1.0, 1e-3);
}

TEST(TextRank, ThreeVertexPathMatchesLinearSolve) {
    const auto g = graph(GraphFlavor::Cooccurrence, {}, {{"a", "b"}, {"b", "c"}}, true);
    // x_a = 0.15 + 0.85 x_b / 2, x_b = 0.15 + 0.85 (x_a + x_c), x_a = x_c
    //   => x_a = 0.21375 / 0.2775, x_b = 0.15 + 1.7 x_a
    const double xa = 0.21375 / 0.2775;
    const double xb = 0.15 + 1.7 * xa;
    const auto s = textrank(g);
    EXPECT_NEAR(s.at("a"), xa, 1e-3);
    EXPECT_NEAR(s.at("c"), xa, 1e-3);
    EXPECT_NEAR(s.at("b"), xb, 1e-3);
    const auto o = oracle::pagerank_solve(g.vertices, g.edges, 0.85);
    EXPECT_NEAR(o.at("a"), xa, 1e-12);
    EXPECT_NEAR(o.at("b"), xb, 1e-12);
}

TEST(TextRank, EmptyGraphGivesEmptyMap) { EXPECT_TRUE(textrank(TextGraph{}).empty()); }

TEST(TextRank, RejectsAsymmetricGraph) {
    EXPECT_THROW(textrank(graph(GraphFlavor::Cooccurrence, {}, {{"a", "b"}}, false)), ContractError);
}

// ---- POSRank ----

TEST(PosRank, NoIncomingEdgesScoresTeleportFloor) {
    const auto s = posrank(graph(GraphFlavor::PosDependence, {}, {{"a", "b"}}, false));
    EXPECT_NEAR(s.at("a"), 0.15, 1e-12);
}

TEST(PosRank, SingleDirectedEdge) {
    const auto s = posrank(graph(GraphFlavor::PosDependence, {}, {{"a", "b"}}, false));
    EXPECT_NEAR(s.at("b"), 0.2775, 1e-9);
}

TEST(PosRank, StarCenter) {
    const auto g = graph(GraphFlavor::PosDependence, {}, {{"v1", "c"}, {"v2", "c"}, {"v3", "c"}}, false);
    EXPECT_NEAR(posrank(g).at("c"), 0.5325, 1e-9);
    EXPECT_NEAR(oracle::pagerank_solve(g.vertices, g.edges, 0.85).at("c"), 0.5325, 1e-12);
}

TEST(PosRank, EmptyGraphGivesEmptyMap) { EXPECT_TRUE(posrank(TextGraph{}).empty()); }

// ---- oracle equivalence and iteration properties ----

class RankOracle : public ::testing::TestWithParam<bool> {};

TEST_P(RankOracle, MatchesLinearSolveOnRandomSmallGraphs) {
    const bool symmetric = GetParam();
    std::mt19937 rng(symmetric ? 17 : 29);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(rng, symmetric);
        const auto run = symmetric ? textrank_run(g) : posrank_run(g);
        const auto expected = oracle::pagerank_solve(g.vertices, g.edges, 0.85);
        ASSERT_LE(run.iterations, 100);
        for (const auto& [v, x] : expected)
            ASSERT_NEAR(run.scores.at(v), x, 1e-3) << "trial " << trial << " vertex " << v;
    }
}

TEST_P(RankOracle, ScoresAreFiniteAndAtLeastTeleportFloor) {
    const bool symmetric = GetParam();
    std::mt19937 rng(symmetric ? 31 : 37);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, symmetric);
        const auto run = symmetric ? textrank_run(g) : posrank_run(g);
        for (const auto& [v, x] : run.scores) {
            ASSERT_TRUE(std::isfinite(x));
            ASSERT_GE(x, 0.15 - 1e-12);
        }
    }
}

TEST_P(RankOracle, InitialValueDoesNotMatter) {
    const bool symmetric = GetParam();
    std::mt19937 rng(symmetric ? 41 : 43);
    RankConfig hi;
    hi.init_score = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, symmetric);
        const auto a = symmetric ? textrank(g) : posrank(g);
        const auto b = symmetric ? textrank(g, hi) : posrank(g, hi);
        for (const auto& [v, x] : a)
            ASSERT_NEAR(x, b.at(v), 10 * hi.convergence_epsilon);
    }
}

INSTANTIATE_TEST_SUITE_P(Flavors, RankOracle, ::testing::Values(true, false));

TEST(RankIteration, IterationCapIsRespected) {
    RankConfig cfg;
    cfg.max_iterations = 3;
    cfg.convergence_epsilon = 1e-15;
    const auto run = textrank_run(graph(GraphFlavor::Cooccurrence, {}, {{"a", "b"}, {"b", "c"}}, true), cfg);
    EXPECT_EQ(run.iterations, 3);
    EXPECT_FALSE(run.converged);
}

TEST(RankConfigTest, InvariantsEnforced) {
    auto bad = [](auto mutate) {
        RankConfig c;
        mutate(c);
        return c;
    };
    EXPECT_THROW(bad([](RankConfig& c) { c.damping = 1.5; }).validate(), ValidationError);
    EXPECT_THROW(bad([](RankConfig& c) { c.convergence_epsilon = 0; }).validate(), ValidationError);
    EXPECT_THROW(bad([](RankConfig& c) { c.max_iterations = 0; }).validate(), ValidationError);
    EXPECT_THROW(bad([](RankConfig& c) { c.top_k = 0; }).validate(), ValidationError);
    EXPECT_NO_THROW(RankConfig{}.validate());
}

// ---- normalization and title weights ----

TEST(Normalize, PositionFormula) {
    const auto n = normalize({{"a", 5}, {"b", 3}, {"c", 2}, {"d", 1}});
    EXPECT_EQ(n, (std::map<std::string, double>{{"a", 1.0}, {"b", 0.75}, {"c", 0.5}, {"d", 0.25}}));
}

TEST(Normalize, SingleTerm) { EXPECT_EQ(normalize({{"t", 0.3}}).at("t"), 1.0); }
TEST(Normalize, Empty) { EXPECT_TRUE(normalize({}).empty()); }

TEST(Normalize, TiesBreakLexicographically) {
    const auto n = normalize({{"b", 2}, {"a", 2}});
    EXPECT_EQ(n.at("a"), 1.0);
    EXPECT_EQ(n.at("b"), 0.5);
}

TEST(Normalize, PermutationAndScaleInvariant) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(0, 5); // small range forces ties
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<std::string, double>> items;
        for (int i = 0; i < 10; ++i)
            items.emplace_back(std::string(1, static_cast<char>('a' + i)), val(rng));
        const auto base = normalize({items.begin(), items.end()});
        std::shuffle(items.begin(), items.end(), rng);
        std::map<std::string, double> shuffled, scaled;
        const double s = scale(rng);
        for (const auto& [t, v] : items) {
            shuffled.emplace(t, v);
            scaled.emplace(t, v * s);
        }
        ASSERT_EQ(normalize(shuffled), base);
        ASSERT_EQ(normalize(scaled), base);
        // values strictly decrease with position
        const auto order = rank_order(shuffled);
        for (std::size_t i = 1; i < order.size(); ++i)
            ASSERT_GT(base.at(order[i - 1]), base.at(order[i]));
    }
}

TEST(TitleWeight, Examples) {
    EXPECT_EQ(title_weight({"element", "search"}, {"search"}),
              (std::map<std::string, double>{{"element", 0.0}, {"search", 1.0}}));
    EXPECT_EQ(title_weight({"a", "b"}, {}), (std::map<std::string, double>{{"a", 0.0}, {"b", 0.0}}));
    EXPECT_EQ(title_weight({"Search"}, {"search"}).at("Search"), 0.0);
}

TEST(ExpandCamel, KeepsBothFormsAndDropsShortFragments) {
    EXPECT_EQ(expand_camel({"IJavaElement", "element", "Element", "search"}),
              (Strings{"IJavaElement", "Java", "Element", "element", "search"}));
}

// ---- suggest ----

TEST(Suggest, SingleCandidate) {
    const auto s = suggest({"1", "crash", ""});
    EXPECT_EQ(s.query.terms, Strings{"crash"});
    EXPECT_TRUE(s.diagnostics.empty());
}

TEST(Suggest, AllStopWordsGiveEmptyQueryWithDiagnostic) {
    const auto s = suggest({"1", "the of and", "it is"});
    EXPECT_TRUE(s.query.terms.empty());
    EXPECT_TRUE(s.query.expanded_terms.empty());
    ASSERT_EQ(s.diagnostics.size(), 1u);
}

TEST(Suggest, ShowcaseTermsOutsideTitleHaveZeroTitleScore) {
    const auto s = suggest(showcase());
    for (const char* t : {"element", "IResource", "Provider", "Level", "Tree"}) {
        const auto* row = s.table.find(t);
        ASSERT_NE(row, nullptr) << t;
        EXPECT_EQ(row->title_score, 0.0) << t;
    }
    EXPECT_EQ(s.table.find("search")->title_score, 1.0);
}

TEST(Suggest, FinalIsExactSumAndEveryVertexHasARow) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const ChangeRequest cr{"r", gen::random_text(rng, 12), gen::random_text(rng, 60)};
        const auto s = suggest(cr);
        std::set<std::string> rows;
        for (const auto& r : s.table.rows) {
            ASSERT_EQ(r.final_score, r.tr_norm + r.posr_norm + r.title_score);
            rows.insert(r.term);
        }
        ASSERT_EQ(rows, s.cooccurrence.vertices);
        ASSERT_EQ(rows, s.posdep.vertices);
        ASSERT_LE(s.query.terms.size(), 10u);
        ASSERT_EQ(std::set<std::string>(s.query.terms.begin(), s.query.terms.end()).size(), s.query.terms.size());
    }
}

TEST(Suggest, DeterministicAcrossRuns) {
    const auto a = suggest(showcase());
    const auto b = suggest(showcase());
    EXPECT_EQ(a.query.terms, b.query.terms);
    EXPECT_EQ(a.query.expanded_terms, b.query.expanded_terms);
    EXPECT_EQ(a.table.to_csv(), b.table.to_csv());
}

TEST(Suggest, TopKLimitsTerms) {
    RankConfig cfg;
    cfg.top_k = 3;
    const auto s = suggest(showcase(), cfg);
    EXPECT_EQ(s.query.terms.size(), 3u);
    const auto full = suggest(showcase());
    EXPECT_TRUE(std::equal(s.query.terms.begin(), s.query.terms.end(), full.query.terms.begin()));
}

TEST(Suggest, QueryFollowsTableOrder) {
    const auto s = suggest(showcase());
    for (std::size_t i = 0; i < s.query.terms.size(); ++i)
        EXPECT_EQ(s.query.terms[i], s.table.rows[i].term);
    for (std::size_t i = 1; i < s.table.rows.size(); ++i)
        EXPECT_GE(s.table.rows[i - 1].final_score, s.table.rows[i].final_score);
}

TEST(Suggest, VariantsDropTheDisabledComponent) {
    const auto tr = suggest(showcase(), {}, {}, RankVariant::TextRankOnly);
    const auto pr = suggest(showcase(), {}, {}, RankVariant::PosRankOnly);
    for (const auto& r : tr.table.rows) {
        EXPECT_EQ(r.posr_norm, 0.0);
        EXPECT_EQ(r.final_score, r.tr_norm + r.title_score);
    }
    for (const auto& r : pr.table.rows) {
        EXPECT_EQ(r.tr_norm, 0.0);
        EXPECT_EQ(r.final_score, r.posr_norm + r.title_score);
    }
}

TEST(Suggest, CsvExportHeader) {
    const auto csv = suggest({"1", "crash", ""}).table.to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "term,tr_raw,posr_raw,tr_norm,posr_norm,title,final");
}
