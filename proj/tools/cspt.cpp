// cspt: build gadgets, check freeness, colour graphs, run verification suites
// and look up the classification.
//
// Exit status: 0 success / all pass / feasible, 1 any fail / infeasible,
// 2 usage, configuration, parse or guard error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cspt/cspt.hpp"

namespace {

using namespace cspt;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

struct GenOptions {
    std::string gadget;
    std::string instance_file;
    int n = 5;
    std::size_t m = 3;
    std::uint64_t seed = 1;
    int k = 4;
    std::string out;
};

int run_gen(const GenOptions& o) {
    GadgetArtifact art;
    if (o.gadget == "mycielski") art = mycielski(o.k);
    else if (o.gadget == "m_prime") art = m_prime();
    else if (o.gadget == "f_prime") art = f_prime_from_mycielski(o.k);
    else {
        const NaeInstance inst = o.instance_file.empty() ? random_instance(o.n, o.m, o.seed) : parse_nae(slurp(o.instance_file));
        art = build_gadget(o.gadget, inst, o.k);
    }
    const std::string prefix = o.out.empty() ? o.gadget : o.out;
    spit(prefix + ".gl1", to_gl1(art.graph));
    spit(prefix + ".json", write_sidecar(art.sidecar()));
    std::cout << "wrote " << prefix << ".gl1 (" << art.graph.order() << " vertices, " << art.graph.size()
              << " edges) and " << prefix << ".json\n";
    return kExitOk;
}

Graph load_graph(const std::string& path, const std::string& sidecar_path, Sidecar* side) {
    Graph g = parse_gl1(slurp(path));
    if (!sidecar_path.empty()) {
        *side = parse_sidecar(slurp(sidecar_path));
        apply_tags(g, *side);
    }
    return g;
}

ReportFormat parse_format(const std::string& f) {
    if (f == "json") return ReportFormat::Structured;
    if (f == "text") return ReportFormat::Human;
    throw ParseError("unknown format '" + f + "'");
}

int finish_report(const VerificationReport& rep, const std::string& format, const std::string& report_file,
                  bool timings) {
    emit_report(std::cout, rep, parse_format(format), timings);
    if (!report_file.empty()) {
        std::ofstream out(report_file);
        if (!out) throw Error("cannot write " + report_file);
        emit_report(out, rep, ReportFormat::Structured, timings);
    }
    return rep.all_passed() ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colouring (C_s,P_t)-free graphs: gadgets, checks, solver and classification"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "build a gadget and write PREFIX.gl1 plus a JSON sidecar");
    gen_cmd->add_option("gadget", gen.gadget, "JI, JI_prime, JI_k, theorem5, JI_star_tri, GI_k, mycielski, m_prime, f_prime")
        ->required();
    gen_cmd->add_option("--instance", gen.instance_file, "NAE instance file");
    gen_cmd->add_option("--n", gen.n, "variables of a random instance");
    gen_cmd->add_option("--m", gen.m, "clauses of a random instance");
    gen_cmd->add_option("--seed", gen.seed, "seed of a random instance");
    gen_cmd->add_option("--k", gen.k, "k for JI_k, GI_k, mycielski and f_prime");
    gen_cmd->add_option("--out", gen.out, "output prefix (default: the gadget name)");

    std::string check_file, check_free, check_sidecar, check_format = "text";
    bool check_cb = false;
    auto* check_cmd = app.add_subcommand("check", "check induced-pattern freeness of a graph");
    check_cmd->add_option("graph", check_file, "gl1 graph file")->required();
    check_cmd->add_option("--free", check_free, "comma-separated patterns such as C3,P22,gem,2P7");
    check_cmd->add_flag("--chordal-bipartite", check_cb, "also check chordal bipartiteness");
    check_cmd->add_option("--format", check_format, "text or json");

    std::string solve_file, solve_lists, solve_pre;
    int solve_k = 0;
    auto* solve_cmd = app.add_subcommand("solve", "colour a graph; exit 0 when feasible, 1 when not");
    solve_cmd->add_option("graph", solve_file, "gl1 graph file")->required();
    auto* k_opt = solve_cmd->add_option("--k", solve_k, "plain k-colouring");
    auto* lists_opt = solve_cmd->add_option("--lists", solve_lists, "sidecar with a list assignment");
    auto* pre_opt = solve_cmd->add_option("--pre", solve_pre, "sidecar with a precolouring");
    k_opt->excludes(lists_opt)->excludes(pre_opt);
    lists_opt->excludes(pre_opt);

    std::string verify_what, verify_gadget = "JI", verify_format = "text", verify_report;
    CampaignConfig cfg;
    std::size_t verify_count = 0;
    bool no_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a lemma suite, 'campaign', or 'all'");
    verify_cmd->add_option("what", verify_what, "suite name, campaign or all")->required();
    verify_cmd->add_option("--seed", cfg.seed, "campaign seed");
    verify_cmd->add_option("--count", verify_count, "sampled instances (default 100 for campaigns, 25 for suites)");
    verify_cmd->add_option("--gadget", verify_gadget, "gadget for a campaign");
    verify_cmd->add_option("--k", cfg.k, "k for JI_k and GI_k campaigns");
    verify_cmd->add_option("--n-min", cfg.n_min);
    verify_cmd->add_option("--n-max", cfg.n_max);
    verify_cmd->add_option("--m-min", cfg.m_min);
    verify_cmd->add_option("--m-max", cfg.m_max);
    verify_cmd->add_option("--unsat-extra", cfg.unsat_extra, "Fano-plane variants appended to a campaign");
    verify_cmd->add_option("--jobs", cfg.jobs, "parallel workers (default CSPT_JOBS or hardware threads)");
    verify_cmd->add_option("--format", verify_format, "text or json");
    verify_cmd->add_option("--report", verify_report, "also write the JSON report here");
    verify_cmd->add_flag("--no-timings", no_timings, "omit wall times (byte-stable output)");

    std::string cls_problem, cls_s;
    int cls_k = 0;
    long long cls_t = 0;
    bool cls_audit = false;
    auto* cls_cmd = app.add_subcommand("classify", "complexity of a (C_s,P_t)-free case; s = '-' for P_t-free");
    cls_cmd->add_option("problem", cls_problem, "colouring, precolouring-extension or list-colouring");
    cls_cmd->add_option("k", cls_k);
    cls_cmd->add_option("s", cls_s);
    cls_cmd->add_option("t", cls_t);
    cls_cmd->add_flag("--audit", cls_audit, "run the table audit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*gen_cmd) return run_gen(gen);

        if (*check_cmd) {
            const Graph g = parse_gl1(slurp(check_file));
            VerificationReport rep;
            rep.suite = "check";
            rep.records = check_freeness(g, parse_freeness(check_free));
            if (check_cb) {
                const auto cb = is_chordal_bipartite(g);
                ClaimRecord r{"chordal-bipartite", "", cb.holds ? ClaimStatus::Pass : ClaimStatus::Fail, "", nullptr, 0};
                if (!cb.holds) r.witness = {{"cycle", cb.violating_cycle}};
                rep.records.push_back(r);
            }
            return finish_report(rep, check_format, "", false);
        }

        if (*solve_cmd) {
            Sidecar side;
            const std::string sidecar = !solve_lists.empty() ? solve_lists : solve_pre;
            const Graph g = load_graph(solve_file, sidecar, &side);
            std::optional<Colouring> c;
            if (!solve_lists.empty()) {
                if (!side.lists) throw ParseError("sidecar has no list assignment");
                c = solve_list_colouring(g, *side.lists);
            } else if (!solve_pre.empty()) {
                if (!side.precolouring) throw ParseError("sidecar has no precolouring");
                c = extend_precolouring(g, side.precolouring->k, *side.precolouring);
            } else {
                if (solve_k < 1) throw PreconditionError("solve needs --k, --lists or --pre");
                c = find_k_colouring(g, solve_k);
            }
            if (!c) {
                std::cout << "infeasible\n";
                return kExitFail;
            }
            for (Vertex v = 0; v < g.order(); ++v) std::cout << "v " << v << ' ' << c->colour[v] << '\n';
            return kExitOk;
        }

        if (*verify_cmd) {
            const bool campaign = verify_what == "campaign";
            cfg.count = verify_count ? verify_count : (campaign ? 100 : 25);
            if (campaign) return finish_report(run_equivalence_campaign(cfg, verify_gadget), verify_format, verify_report, !no_timings);
            if (verify_what == "all") {
                VerificationReport all;
                all.suite = "all";
                for (const auto& name : lemma_suite_names()) {
                    auto r = run_lemma_suite(name, cfg);
                    for (auto& rec : r.records) rec.id = name + ":" + rec.id;
                    all.append(r);
                }
                all.metadata = {{"seed", cfg.seed}, {"count", cfg.count}};
                return finish_report(all, verify_format, verify_report, !no_timings);
            }
            const auto& names = lemma_suite_names();
            if (std::find(names.begin(), names.end(), verify_what) == names.end())
                throw PreconditionError("unknown suite '" + verify_what + "'");
            return finish_report(run_lemma_suite(verify_what, cfg), verify_format, verify_report, !no_timings);
        }

        if (*cls_cmd) {
            if (cls_audit) {
                const auto rep = audit_tables();
                emit_report(std::cout, rep, ReportFormat::Human, false);
                if (cls_problem.empty()) return rep.all_passed() ? kExitOk : kExitFail;
                if (!rep.all_passed()) return kExitFail;
            }
            if (cls_problem.empty() || cls_s.empty()) throw PreconditionError("classify needs <problem> <k> <s> <t>");
            const ProblemKind p = parse_problem(cls_problem);
            const ClassEntry e = cls_s == "-" ? classify_pt_free(p, cls_k, cls_t)
                                              : classify_cs_pt(p, cls_k, std::stoi(cls_s), cls_t);
            std::cout << to_string(e.status) << ' ' << e.citation << '\n';
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
