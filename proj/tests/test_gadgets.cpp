#include <gtest/gtest.h>

#include "cspt/detect.hpp"
#include "cspt/gadgets.hpp"
#include "cspt/solver.hpp"
#include "oracles.hpp"

using namespace cspt;

namespace {

const NaeInstance kSingle{3, {{1, 2, 3}}};

bool decide(const GadgetArtifact& art) {
    if (art.lists) return solve_list_colouring(art.graph, *art.lists).has_value();
    if (art.precolouring) return extend_precolouring(art.graph, art.precolouring->k, *art.precolouring).has_value();
    return find_k_colouring(art.graph, gadget_colours(art)).has_value();
}

} // namespace

TEST(JI, SizesForOneClause) {
    const auto art = build_JI(kSingle);
    EXPECT_EQ(art.graph.order(), 13U);
    EXPECT_EQ(art.graph.size(), 26U);
    ASSERT_TRUE(art.lists.has_value());
    EXPECT_EQ(art.lists->k, 4);
    for (Vertex x : art.group("X")) EXPECT_EQ(art.lists->list(x), mask_of({1, 2}));
    EXPECT_EQ(art.group("A").size(), 6U);
    EXPECT_EQ(art.group("B").size(), 4U);
}

TEST(JI, SizesScaleWithInstance) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(3 + static_cast<int>(seed % 5), 1 + seed % 4, seed);
        const std::size_t n = static_cast<std::size_t>(inst.n), m = inst.m();
        const auto ji = build_JI(inst);
        EXPECT_EQ(ji.graph.order(), n + 10 * m);
        // two P5s, three a-x edges per copy, all x-b edges
        EXPECT_EQ(ji.graph.size(), 2 * m * (4 + 3) + n * 4 * m);
        const auto jp = build_JI_prime(inst);
        EXPECT_EQ(jp.graph.order(), n + 16 * m);
        EXPECT_EQ(jp.graph.size(), ji.graph.size() + 6 * m);
        const auto jk = build_JI_k(inst, 4);
        EXPECT_EQ(jk.graph.order(), 3 * n + 46 * m);
        EXPECT_EQ(jk.precolouring->assignment.size(), 2 * n + 30 * m);
        const auto j5 = build_JI_k(inst, 5);
        EXPECT_EQ(j5.precolouring->assignment.size(), jk.precolouring->assignment.size() + jp.graph.order());
    }
}

TEST(JIPrime, SizesForOneClause) {
    const auto art = build_JI_prime(kSingle);
    EXPECT_EQ(art.graph.order(), 19U);
    EXPECT_EQ(art.graph.size(), 32U);
    EXPECT_EQ(art.group("C").size(), 6U);
    for (Vertex c : art.group("C")) {
        EXPECT_EQ(art.graph.degree(c), 2U);
        EXPECT_EQ(art.lists->list(c), mask_of({1, 2}));
    }
    // a-x edges are gone
    for (Vertex a : art.group("A"))
        for (Vertex x : art.group("X")) EXPECT_FALSE(art.graph.adjacent(a, x));
}

TEST(JIk, PendantsCarryMissingColours) {
    const auto art = build_JI_k(kSingle, 4);
    const auto base = build_JI_prime(kSingle);
    for (auto [w, c] : art.precolouring->assignment) {
        ASSERT_EQ(art.graph.tag(w).kind, TagKind::PendantOf);
        const Vertex owner = art.graph.tag(w).value;
        EXPECT_EQ(art.graph.degree(w), 1U);
        EXPECT_FALSE(base.lists->list(owner) & colour_bit(c));
    }
    EXPECT_TRUE(valid_precolouring(art.graph, *art.precolouring));
    EXPECT_THROW(build_JI_k(kSingle, 3), PreconditionError);
}

TEST(PrecolouringGadget, SizeAndPrecolouring) {
    const auto art = build_theorem5_gadget(kSingle);
    EXPECT_EQ(art.graph.order(), 27U);
    const auto& pre = art.precolouring->assignment;
    EXPECT_EQ(pre.size(), 14U);
    EXPECT_EQ(pre.at(art.at("s1")), 3);
    EXPECT_EQ(pre.at(art.at("t1")), 4);
    EXPECT_EQ(pre.at(art.at("s'1")), 3);
    EXPECT_EQ(pre.at(art.at("t'1")), 4);
    EXPECT_EQ(pre.at(art.at("c1")), 3);
    EXPECT_EQ(pre.at(art.at("y2")), 2);
    EXPECT_TRUE(valid_precolouring(art.graph, *art.precolouring));
}

TEST(Mycielski, OrdersEdgesAndChromaticNumber) {
    const std::vector<std::size_t> edges{1, 5, 20, 71};
    for (int k = 2; k <= 5; ++k) {
        const auto art = mycielski(k);
        EXPECT_EQ(art.graph.order(), mycielski_order(k));
        EXPECT_EQ(art.graph.size(), edges[k - 2]);
        EXPECT_FALSE(has_induced_cycle(art.graph, 3)) << k;
        EXPECT_EQ(chromatic_number(art.graph, 8), k);
    }
    EXPECT_EQ(mycielski_order(6), 47U);
    EXPECT_EQ(mycielski(6).graph.order(), 47U);
    EXPECT_THROW(mycielski(1), GuardError);
    EXPECT_THROW(mycielski(9), GuardError);
}

TEST(Mycielski, M3IsFiveCycle) {
    const Graph g = mycielski(3).graph;
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2U);
    EXPECT_TRUE(has_induced_cycle(g, 5));
}

TEST(MPrime, Shape) {
    const auto art = m_prime();
    EXPECT_EQ(art.graph.order(), 23U);
    EXPECT_EQ(art.graph.size(), 70U);
    ASSERT_EQ(art.group("T").size(), 4U);
    EXPECT_EQ(art.at("t1"), 1U);
    EXPECT_EQ(art.at("t2"), 3U);
    EXPECT_EQ(art.at("t3"), 10U);
    EXPECT_EQ(art.at("t4"), 22U);
    EXPECT_FALSE(has_induced_cycle(art.graph, 3));
    EXPECT_TRUE(is_k_colourable(art.graph, 4));
}

TEST(JIStar, SizesAndTriangleFree) {
    const auto single = build_JI_star_tri(kSingle);
    EXPECT_EQ(single.graph.order(), 58U);
    EXPECT_FALSE(has_induced_cycle(single.graph, 3));
    EXPECT_EQ(single.group("T").size(), 4U);
    EXPECT_EQ(single.group("Mprime").size(), 23U);
    const auto fano = build_JI_star_tri(fano_instance());
    EXPECT_EQ(fano.graph.order(), 226U);
    EXPECT_FALSE(has_induced_cycle(fano.graph, 3));
}

TEST(FPrime, ForcesDistinctEnds) {
    for (int k = 3; k <= 4; ++k) {
        const auto fp = f_prime_from_mycielski(k);
        EXPECT_EQ(fp.graph.order(), mycielski_order(k + 1) + 1);
        EXPECT_TRUE(is_k_colourable(fp.graph, k));
        EXPECT_TRUE(forced_distinct(fp.graph, k, fp.at("p"), fp.at("qstar")));
        EXPECT_FALSE(fp.graph.adjacent(fp.at("p"), fp.at("q")));
    }
    EXPECT_THROW(f_prime_from_mycielski(2), GuardError);
}

TEST(FPrime, IdentifyOnSingleEdgeReproducesGadget) {
    const auto fp = f_prime_from_mycielski(3);
    Graph g(2);
    g.add_edge(0, 1);
    const auto image = fprime_identify(g, 0, 1, fp);
    EXPECT_EQ(g.order(), fp.graph.order());
    EXPECT_EQ(g.size(), fp.graph.size());
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_EQ(image[fp.at("p")], 0U);
    EXPECT_EQ(image[fp.at("qstar")], 1U);
    // an independent route: disjoint union then identify
    Graph u = disjoint_union(Graph(2), fp.graph);
    u = identify_vertices(u, 0, 2 + fp.at("p"));
    EXPECT_EQ(u.order(), fp.graph.order() + 1);
    EXPECT_EQ(u.size(), fp.graph.size());
    EXPECT_TRUE(forced_distinct(g, 3, 0, 1));
}

TEST(GIk, ShapeAndGuard) {
    const auto art = build_GI_k(kSingle, 4);
    EXPECT_EQ(art.group("R").size(), 4U);
    const std::size_t fp = f_prime_from_mycielski(4).graph.order();
    const std::size_t replaced = 6 + (2 * 3 + 30) * 3;
    EXPECT_EQ(art.graph.order(), 3 * 3 + 46 + 4 + replaced * (fp - 2));
    EXPECT_FALSE(has_induced_cycle(art.graph, 3));
    EXPECT_TRUE(has_induced_cycle(art.graph, 4));
    EXPECT_EQ(gadget_colours(art), 4);
    EXPECT_THROW(build_GI_k(kSingle, 7), GuardError);
    EXPECT_THROW(build_GI_k(random_instance(20, 60, 1), 6), GuardError);
}

TEST(Remark1, Values) {
    EXPECT_EQ(remark1_bound(5), 287U);
    EXPECT_EQ(remark1_bound(6), 671U);
    for (int k = 5; k <= 20; ++k) {
        const std::uint64_t kk = static_cast<std::uint64_t>(k);
        std::uint64_t pow = 1;
        for (int i = 1; i < k; ++i) pow *= 2;
        EXPECT_EQ(remark1_bound(k), kk + (kk + 1) * (3 * pow - 1));
    }
    EXPECT_THROW(remark1_bound(4), PreconditionError);
}

TEST(Gadgets, LandmarkAndNameErrors) {
    const auto art = build_JI(kSingle);
    EXPECT_THROW(art.at("nope"), std::out_of_range);
    EXPECT_TRUE(art.group("nope").empty());
    EXPECT_THROW(build_gadget("nope", kSingle), PreconditionError);
    EXPECT_THROW(build_JI(NaeInstance{3, {{1, 2, 4}}}), PreconditionError);
}

TEST(Gadgets, ColourableIffSatisfiable) {
    std::vector<NaeInstance> cases{kSingle, fano_instance()};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) cases.push_back(random_instance(4 + static_cast<int>(seed % 3), 2 + seed % 3, seed));
    for (const auto& inst : cases) {
        const bool sat = oracle::nae_satisfiable(inst);
        for (const std::string name : {"JI", "JI_prime", "JI_k", "theorem5", "JI_star_tri"})
            EXPECT_EQ(decide(build_gadget(name, inst, 4)), sat) << name << "\n" << to_nae_text(inst);
        EXPECT_EQ(decide(build_JI_k(inst, 5)), sat);
    }
}
