#include <gtest/gtest.h>

#include <sstream>

#include "cspt/verify.hpp"
#include "oracles.hpp"

using namespace cspt;

namespace {

CampaignConfig small_config(std::size_t count) {
    CampaignConfig cfg;
    cfg.count = count;
    cfg.unsat_extra = 1;
    cfg.jobs = 1;
    return cfg;
}

std::string dump(const VerificationReport& rep) {
    std::ostringstream os;
    emit_report(os, rep, ReportFormat::Structured, false);
    return os.str();
}

} // namespace

TEST(Verify, SamplingIsSeededAndInRange) {
    auto cfg = small_config(40);
    const auto a = sample_instances(cfg);
    EXPECT_EQ(a, sample_instances(cfg));
    for (const auto& inst : a) {
        EXPECT_GE(inst.n, cfg.n_min);
        EXPECT_LE(inst.n, cfg.n_max);
        EXPECT_GE(inst.m(), cfg.m_min);
        EXPECT_LE(inst.m(), cfg.m_max);
    }
    cfg.seed = 2;
    EXPECT_NE(a, sample_instances(cfg));
}

TEST(Verify, FanoVariantsAreUnsat) {
    for (std::size_t i = 0; i < 6; ++i) {
        const auto f = fano_variant(5, i);
        EXPECT_TRUE(f.valid());
        EXPECT_FALSE(oracle::nae_satisfiable(f));
    }
    EXPECT_EQ(fano_variant(5, 0), fano_instance());
}

TEST(Verify, CampaignPassesAndIsDeterministic) {
    for (const std::string gadget : {"JI", "JI_prime", "theorem5"}) {
        auto cfg = small_config(12);
        const auto a = run_equivalence_campaign(cfg, gadget);
        EXPECT_EQ(a.records.size(), 13U);
        EXPECT_TRUE(a.all_passed()) << gadget;
        cfg.jobs = 3;
        EXPECT_EQ(dump(a), dump(run_equivalence_campaign(cfg, gadget)));
    }
}

TEST(Verify, GIkSkipsOverCapExtras) {
    auto cfg = small_config(1);
    cfg.n_max = 4;
    cfg.m_max = 1;
    const auto rep = run_equivalence_campaign(cfg, "GI_k");
    ASSERT_EQ(rep.records.size(), 2U);
    EXPECT_EQ(rep.records[0].status, ClaimStatus::Pass);
    EXPECT_EQ(rep.records[1].status, ClaimStatus::Skipped);
}

TEST(Verify, ConfigGuards) {
    auto cfg = small_config(1);
    cfg.n_max = 11;
    EXPECT_THROW(run_equivalence_campaign(cfg, "JI"), GuardError);
    cfg = small_config(1);
    cfg.m_max = 3;
    EXPECT_THROW(run_equivalence_campaign(cfg, "GI_k"), GuardError);
    cfg = small_config(1);
    cfg.k = 7;
    EXPECT_THROW(run_equivalence_campaign(cfg, "JI_k"), GuardError);
    EXPECT_THROW(run_equivalence_campaign(small_config(1), "nope"), GuardError);
    cfg = small_config(1);
    cfg.n_min = 6;
    cfg.n_max = 5;
    EXPECT_THROW(run_equivalence_campaign(cfg, "JI"), GuardError);
}

TEST(Verify, BrokenGadgetIsCaughtAndRevalidated) {
    const NaeInstance inst{3, {{1, 2, 3}}};
    GadgetArtifact art = build_JI(inst);
    for (auto& l : art.lists->lists) l = colour_bit(1); // nothing adjacent can be coloured now
    const auto rec = equivalence_record("broken", "JI", inst, art);
    EXPECT_EQ(rec.status, ClaimStatus::Fail);
    EXPECT_TRUE(revalidate(rec));
    // the same record survives a JSON round trip
    VerificationReport rep;
    rep.records.push_back(rec);
    const auto back = report_from_json(to_json(rep, false));
    EXPECT_TRUE(revalidate(back.records.front()));
}

TEST(Verify, RevalidateRejectsBogusWitnesses) {
    ClaimRecord r{"x", "", ClaimStatus::Fail, "", nullptr, 0};
    EXPECT_FALSE(revalidate(r));
    r.witness = {{"kind", "pattern"}, {"gl1", to_gl1(path_graph(4))}, {"pattern", "C4"}, {"vertices", {0, 1, 2, 3}}};
    EXPECT_FALSE(revalidate(r));
    r.witness = {{"kind", "pattern"}, {"gl1", to_gl1(cycle_graph(4))}, {"pattern", "C4"}, {"vertices", {0, 1, 2, 3}}};
    EXPECT_TRUE(revalidate(r));
    r.status = ClaimStatus::Pass;
    EXPECT_FALSE(revalidate(r));
}

TEST(Verify, LemmaSuitesPass) {
    auto cfg = small_config(3);
    for (const auto& name : lemma_suite_names()) {
        const auto rep = run_lemma_suite(name, cfg);
        EXPECT_FALSE(rep.records.empty()) << name;
        for (const auto& r : rep.records) EXPECT_NE(r.status, ClaimStatus::Fail) << name << ": " << r.id << " " << r.detail;
    }
    EXPECT_THROW(run_lemma_suite("nope"), PreconditionError);
}

TEST(Verify, ReportSerializationIsStable) {
    const auto rep = run_lemma_suite("m-prime-paths");
    const std::string once = dump(rep);
    const auto back = report_from_json(nlohmann::json::parse(once));
    EXPECT_EQ(dump(back), once);
    EXPECT_EQ(dump(run_lemma_suite("m-prime-paths")), once);
}
