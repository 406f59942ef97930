#include <gtest/gtest.h>

#include "cspt/detect.hpp"
#include "oracles.hpp"

using namespace cspt;

namespace {

struct Sample {
    std::size_t n;
    double p;
    std::uint64_t seed;
};

std::vector<Sample> samples() {
    std::vector<Sample> out;
    std::uint64_t seed = 11;
    for (std::size_t n = 4; n <= 10; ++n)
        for (double p : {0.2, 0.35, 0.5, 0.7})
            for (int rep = 0; rep < 3; ++rep) out.push_back({n, p, seed++});
    return out;
}

bool is_path_in(const Graph& g, const VertexPath& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    return true;
}

bool is_cycle_in(const Graph& g, const VertexPath& c) {
    const std::size_t s = c.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == s - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

} // namespace

TEST(InducedPath, MatchesSubsetEnumeration) {
    for (const auto& s : samples()) {
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        for (std::size_t t = 1; t <= s.n; ++t) {
            const auto w = find_induced_path(g, t);
            ASSERT_EQ(w.has_value(), oracle::has_induced_path(g, t)) << "n=" << s.n << " seed=" << s.seed << " t=" << t;
            if (w) {
                EXPECT_EQ(w->size(), t);
                EXPECT_TRUE(is_path_in(g, *w));
                EXPECT_TRUE(witness_induces(g, PatternDescriptor::path_on(t), *w));
            }
        }
    }
}

TEST(InducedCycle, MatchesSubsetEnumeration) {
    for (const auto& s : samples()) {
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        for (std::size_t len = 3; len <= s.n; ++len) {
            const auto w = find_induced_cycle(g, len);
            ASSERT_EQ(w.has_value(), oracle::has_induced_cycle(g, len)) << "n=" << s.n << " seed=" << s.seed << " s=" << len;
            if (w) {
                EXPECT_EQ(w->size(), len);
                EXPECT_TRUE(is_cycle_in(g, *w));
            }
        }
    }
}

TEST(InducedCycle, LongCycleAndGirth) {
    for (const auto& s : samples()) {
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        std::optional<std::size_t> least;
        bool has_long = false;
        for (std::size_t len = 3; len <= s.n; ++len) {
            const bool has = oracle::has_induced_cycle(g, len);
            if (has && !least) least = len;
            if (has && len >= 6) has_long = true;
        }
        EXPECT_EQ(girth(g), least) << "seed=" << s.seed;
        const auto lc = find_long_induced_cycle(g, 6);
        EXPECT_EQ(lc.has_value(), has_long);
        if (lc) {
            EXPECT_GE(lc->size(), 6U);
            EXPECT_TRUE(is_cycle_in(g, *lc));
        }
    }
}

TEST(InducedPath, KnownGraphs) {
    EXPECT_TRUE(has_induced_path(path_graph(7), 7));
    EXPECT_FALSE(has_induced_path(path_graph(7), 8));
    EXPECT_TRUE(has_induced_path(cycle_graph(8), 7));
    EXPECT_FALSE(has_induced_path(cycle_graph(8), 8));
    EXPECT_FALSE(has_induced_path(complete_graph(6), 3));
    EXPECT_TRUE(has_induced_path(empty_graph(1), 1));
    EXPECT_FALSE(has_induced_path(empty_graph(0), 1));
    EXPECT_EQ(girth(path_graph(5)), std::nullopt);
    EXPECT_EQ(girth(cycle_graph(9)), 9U);
}

TEST(TypedPath, RespectsClasses) {
    const Graph g = path_graph(5);
    std::vector<Bitset> classes(3, Bitset(5));
    classes[0].set(4);
    classes[1].set(3);
    classes[2].set(2);
    const auto w = find_typed_induced_path(g, classes);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, (VertexPath{4, 3, 2}));
    classes[2].reset(2);
    classes[2].set(0);
    EXPECT_FALSE(find_typed_induced_path(g, classes).has_value());
}

TEST(ConstrainedPaths, MatchesSubsetEnumeration) {
    for (const auto& s : samples()) {
        if (s.n > 9) continue;
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        std::vector<Vertex> anchors;
        for (Vertex v = 0; v < s.n; v += 2) anchors.push_back(v);
        auto in = [&](Vertex v) { return std::find(anchors.begin(), anchors.end(), v) != anchors.end(); };
        const auto both = oracle::longest_path_with_ends(g, [&](Vertex a, Vertex b) { return in(a) && in(b); });
        const auto one = oracle::longest_path_with_ends(g, [&](Vertex a, Vertex b) { return in(a) || in(b); });
        const auto rb = constrained_induced_paths(g, anchors, EndpointMode::BothEnds, s.n);
        const auto ro = constrained_induced_paths(g, anchors, EndpointMode::OneEnd, s.n);
        EXPECT_EQ(rb.max_vertices, both) << "seed=" << s.seed;
        EXPECT_EQ(ro.max_vertices, one) << "seed=" << s.seed;
        EXPECT_EQ(ro.witness.size(), one);
        if (one > 0) { EXPECT_TRUE(is_path_in(g, ro.witness)); }
        // a small bound caps the answer at bound + 1
        const auto capped = constrained_induced_paths(g, anchors, EndpointMode::OneEnd, 2);
        EXPECT_EQ(capped.max_vertices, std::min<std::size_t>(one, 3));
    }
}

TEST(ConstrainedPaths, RejectsBadInput) {
    const Graph g = path_graph(3);
    const std::vector<Vertex> bad{7};
    EXPECT_THROW(constrained_induced_paths(g, bad, EndpointMode::OneEnd, 3), GraphError);
    const std::vector<Vertex> ok{0};
    EXPECT_THROW(constrained_induced_paths(g, ok, EndpointMode::OneEnd, 0), PreconditionError);
}

TEST(AnchoredPair, FindsSeparatedPaths) {
    // two long paths joined by a middle vertex
    Graph g = path_graph(9);
    const std::vector<Vertex> anchors{0, 8};
    const auto pair = find_anchored_path_pair(g, anchors, 4, 4);
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ(pair->first.size(), 4U);
    EXPECT_EQ(pair->second.size(), 4U);
    for (Vertex a : pair->first)
        for (Vertex b : pair->second) EXPECT_FALSE(a == b || g.adjacent(a, b));
    EXPECT_FALSE(find_anchored_path_pair(g, anchors, 5, 4).has_value());
}

TEST(ChordalBipartite, Examples) {
    EXPECT_TRUE(is_chordal_bipartite(cycle_graph(4)).holds);
    EXPECT_TRUE(is_chordal_bipartite(path_graph(10)).holds);
    const auto c6 = is_chordal_bipartite(cycle_graph(6));
    EXPECT_FALSE(c6.holds);
    EXPECT_EQ(c6.violating_cycle.size(), 6U);
    const auto c5 = is_chordal_bipartite(cycle_graph(5));
    EXPECT_FALSE(c5.holds);
    EXPECT_EQ(c5.violating_cycle.size() % 2, 1U);
}

TEST(ChordalBipartite, MatchesSubsetEnumeration) {
    for (const auto& s : samples()) {
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        bool expect = true;
        for (std::size_t len = 3; len <= s.n; ++len)
            if (oracle::has_induced_cycle(g, len) && (len % 2 == 1 || len >= 6)) expect = false;
        const auto r = is_chordal_bipartite(g);
        EXPECT_EQ(r.holds, expect) << "seed=" << s.seed;
        if (!r.holds) { EXPECT_TRUE(is_cycle_in(g, r.violating_cycle)); }
    }
}

TEST(Patterns, ParseLabels) {
    EXPECT_EQ(parse_pattern("P22").label(), "P22");
    EXPECT_EQ(parse_pattern("C3").label(), "C3");
    EXPECT_EQ(parse_pattern("K4").label(), "K4");
    EXPECT_EQ(parse_pattern("gem").graph.size(), 7U);
    const auto sum = parse_pattern("2P7");
    EXPECT_EQ(sum.kind, PatternDescriptor::Kind::Named);
    EXPECT_EQ(sum.graph.order(), 14U);
    EXPECT_EQ(sum.graph.size(), 12U);
    EXPECT_EQ(parse_pattern("P8+P1").graph.order(), 9U);
    EXPECT_EQ(parse_freeness("C3,,P5").size(), 2U);
    EXPECT_THROW(parse_pattern("Q3"), ParseError);
    EXPECT_THROW(parse_pattern("C2"), ParseError);
    EXPECT_THROW(parse_pattern("P"), ParseError);
    EXPECT_THROW(parse_pattern("3P7"), GuardError);
}

TEST(Patterns, EmbeddingMatchesPermutationOracle) {
    const std::vector<Graph> patterns{gem_graph(), wheel5_graph(), parse_pattern("2P2").graph,
                                      parse_pattern("P3+P1").graph, complete_graph(3)};
    for (const auto& s : samples()) {
        if (s.n > 8) continue;
        const Graph g = oracle::random_graph(s.n, s.p, s.seed);
        for (const auto& pat : patterns) {
            const auto f = find_induced_embedding(g, pat);
            ASSERT_EQ(f.has_value(), oracle::contains_induced(g, pat)) << "seed=" << s.seed;
            if (!f) continue;
            for (Vertex i = 0; i < pat.order(); ++i)
                for (Vertex j = i + 1; j < pat.order(); ++j) EXPECT_EQ(g.adjacent((*f)[i], (*f)[j]), pat.adjacent(i, j));
        }
    }
}

TEST(Patterns, CheckFreenessRecords) {
    const auto recs = check_freeness(cycle_graph(5), parse_freeness("C3,P4,C5"));
    ASSERT_EQ(recs.size(), 3U);
    EXPECT_EQ(recs[0].id, "C3-free");
    EXPECT_EQ(recs[0].status, ClaimStatus::Pass);
    EXPECT_EQ(recs[1].status, ClaimStatus::Fail);
    EXPECT_EQ(recs[2].status, ClaimStatus::Fail);
    const auto w = recs[1].witness.at("vertices").get<VertexPath>();
    EXPECT_TRUE(witness_induces(cycle_graph(5), PatternDescriptor::path_on(4), w));
    EXPECT_FALSE(witness_induces(cycle_graph(5), PatternDescriptor::path_on(4), VertexPath{0, 1, 2, 2}));
}
