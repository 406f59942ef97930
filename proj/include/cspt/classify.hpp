#pragma once

// Complexity of k-Colouring, k-Precolouring Extension and List k-Colouring on
// (C_s,P_t)-free graphs and on P_t-free graphs, stored as case rows.
//
// Citations: "(i).2" is item 2 of the list-colouring part of the (C_s,P_t)
// classification, "open(iii).3" the third open bullet for k-Colouring, and
// "table:t=6:k=4" a cell of the P_t-free table.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cspt/error.hpp"
#include "cspt/gadgets.hpp"
#include "cspt/report.hpp"

namespace cspt {

enum class ProblemKind { Colouring, PrecolouringExtension, ListColouring };
enum class ComplexityStatus { PTime, NPComplete, Open };

inline const char* to_string(ProblemKind p) {
    switch (p) {
    case ProblemKind::Colouring: return "colouring";
    case ProblemKind::PrecolouringExtension: return "precolouring-extension";
    case ProblemKind::ListColouring: return "list-colouring";
    }
    return "?";
}

inline ProblemKind parse_problem(const std::string& s) {
    if (s == "colouring" || s == "coloring" || s == "Colouring") return ProblemKind::Colouring;
    if (s == "precolouring-extension" || s == "precoloring-extension" || s == "pre" || s == "PrecolouringExtension")
        return ProblemKind::PrecolouringExtension;
    if (s == "list-colouring" || s == "list-coloring" || s == "list" || s == "ListColouring")
        return ProblemKind::ListColouring;
    throw ParseError("unknown problem '" + s + "'");
}

inline const char* to_string(ComplexityStatus s) {
    switch (s) {
    case ComplexityStatus::PTime: return "P";
    case ComplexityStatus::NPComplete: return "NP-complete";
    case ComplexityStatus::Open: return "open";
    }
    return "?";
}

struct ClassEntry {
    ComplexityStatus status = ComplexityStatus::Open;
    std::string citation;

    friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

namespace detail {

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

/// A t-bound that may depend on k: constant, k + offset, or remark1_bound(k) + offset.
struct TBound {
    enum class Kind { Const, KPlus, Remark1 } kind = Kind::Const;
    std::int64_t value = 0;

    std::int64_t eval(int k) const {
        switch (kind) {
        case Kind::Const: return value;
        case Kind::KPlus: return k + value;
        case Kind::Remark1:
            // beyond k = 60 the bound overflows; treat it as unreachable
            return (k > 60 ? kUnbounded / 2 : static_cast<std::int64_t>(remark1_bound(k))) + value;
        }
        return value;
    }
};

inline TBound lit(std::int64_t v) { return {TBound::Kind::Const, v}; }
inline TBound k_plus(std::int64_t v) { return {TBound::Kind::KPlus, v}; }
inline TBound tk_plus(std::int64_t v) { return {TBound::Kind::Remark1, v}; }

struct CaseRow {
    ProblemKind problem;
    ComplexityStatus status;
    std::string citation;
    std::int64_t k_lo, k_hi;
    std::int64_t s_lo, s_hi;
    TBound t_lo, t_hi;

    bool matches(ProblemKind p, int k, int s, std::int64_t t) const {
        return p == problem && k >= k_lo && k <= k_hi && s >= s_lo && s <= s_hi && t >= t_lo.eval(k) &&
               t <= t_hi.eval(k);
    }
};

} // namespace detail

/// Every case row of the (C_s,P_t)-free classification, open cases included.
inline const std::vector<detail::CaseRow>& cs_pt_rows() {
    using detail::k_plus;
    using detail::kUnbounded;
    using detail::lit;
    using detail::tk_plus;
    constexpr auto L = ProblemKind::ListColouring;
    constexpr auto E = ProblemKind::PrecolouringExtension;
    constexpr auto C = ProblemKind::Colouring;
    constexpr auto NP = ComplexityStatus::NPComplete;
    constexpr auto P = ComplexityStatus::PTime;
    constexpr auto O = ComplexityStatus::Open;
    constexpr std::int64_t INF = kUnbounded;
    static const std::vector<detail::CaseRow> rows{
        {L, NP, "(i).1", 4, INF, 3, 3, lit(8), lit(INF)},
        {L, NP, "(i).2", 4, INF, 5, INF, lit(6), lit(INF)},
        {L, P, "(i).3", 1, 2, 3, INF, lit(1), lit(INF)},
        {L, P, "(i).4", 3, 3, 3, 3, lit(1), lit(6)},
        {L, P, "(i).5", 3, 3, 4, 4, lit(1), lit(INF)},
        {L, P, "(i).6", 3, 3, 5, INF, lit(1), lit(6)},
        {L, P, "(i).7", 4, INF, 3, 3, lit(1), lit(6)},
        {L, P, "(i).8", 4, INF, 4, 4, lit(1), lit(INF)},
        {L, P, "(i).9", 4, INF, 5, INF, lit(1), lit(5)},
        {L, O, "open(i).1", 3, 3, 3, 3, lit(7), lit(INF)},
        {L, O, "open(i).2", 3, 3, 5, INF, lit(7), lit(INF)},
        {L, O, "open(i).3", 4, INF, 3, 3, lit(7), lit(7)},

        {E, NP, "(ii).1", 4, 4, 3, 3, lit(10), lit(INF)},
        {E, NP, "(ii).2", 4, 4, 5, 5, lit(7), lit(INF)},
        {E, NP, "(ii).3", 4, 4, 6, 6, lit(7), lit(INF)},
        {E, NP, "(ii).4", 4, 4, 7, 7, lit(8), lit(INF)},
        {E, NP, "(ii).5", 4, 4, 8, INF, lit(7), lit(INF)},
        {E, NP, "(ii).6", 5, INF, 3, 3, lit(10), lit(INF)},
        {E, NP, "(ii).7", 5, INF, 5, INF, lit(6), lit(INF)},
        {E, P, "(ii).8", 1, 2, 3, INF, lit(1), lit(INF)},
        {E, P, "(ii).9", 3, 3, 3, 3, lit(1), lit(6)},
        {E, P, "(ii).10", 3, 3, 4, 4, lit(1), lit(INF)},
        {E, P, "(ii).11", 3, 3, 5, INF, lit(1), lit(6)},
        {E, P, "(ii).12", 4, INF, 3, 3, lit(1), lit(6)},
        {E, P, "(ii).13", 4, INF, 4, 4, lit(1), lit(INF)},
        {E, P, "(ii).14", 4, INF, 5, INF, lit(1), lit(5)},
        {E, O, "open(ii).1", 3, 3, 3, 3, lit(7), lit(INF)},
        {E, O, "open(ii).2", 3, 3, 5, INF, lit(7), lit(INF)},
        {E, O, "open(ii).3", 4, 4, 3, 3, lit(7), lit(9)},
        {E, O, "open(ii).4", 4, 4, 5, INF, lit(6), lit(6)},
        {E, O, "open(ii).5", 4, 4, 7, 7, lit(7), lit(7)},
        {E, O, "open(ii).6", 5, INF, 3, 3, lit(7), lit(9)},

        {C, NP, "(iii).1", 4, 4, 3, 3, lit(22), lit(INF)},
        {C, NP, "(iii).2", 4, 4, 5, 5, lit(7), lit(INF)},
        {C, NP, "(iii).3", 4, 4, 6, 6, lit(7), lit(INF)},
        {C, NP, "(iii).4", 4, 4, 7, 7, lit(9), lit(INF)},
        {C, NP, "(iii).5", 4, 4, 8, INF, lit(7), lit(INF)},
        {C, NP, "(iii).6", 5, INF, 3, 3, tk_plus(0), lit(INF)},
        {C, NP, "(iii).7", 5, INF, 5, 5, lit(7), lit(INF)},
        {C, NP, "(iii).8", 5, INF, 6, INF, lit(6), lit(INF)},
        {C, P, "(iii).9", 1, 2, 3, INF, lit(1), lit(INF)},
        {C, P, "(iii).10", 3, 3, 3, 3, lit(1), lit(7)},
        {C, P, "(iii).11", 3, 3, 4, 4, lit(1), lit(INF)},
        {C, P, "(iii).12", 3, 3, 5, INF, lit(1), lit(7)},
        {C, P, "(iii).13", 4, 4, 3, 3, lit(1), lit(6)},
        {C, P, "(iii).14", 4, 4, 4, 4, lit(1), lit(INF)},
        {C, P, "(iii).15", 4, 4, 5, 5, lit(1), lit(6)},
        {C, P, "(iii).16", 4, 4, 6, INF, lit(1), lit(5)},
        {C, P, "(iii).17", 5, INF, 3, 3, lit(1), k_plus(2)},
        {C, P, "(iii).18", 5, INF, 4, 4, lit(1), lit(INF)},
        {C, P, "(iii).19", 5, INF, 5, INF, lit(1), lit(5)},
        {C, O, "open(iii).1", 3, 3, 3, 3, lit(8), lit(INF)},
        {C, O, "open(iii).2", 3, 3, 5, INF, lit(8), lit(INF)},
        {C, O, "open(iii).3", 4, 4, 3, 3, lit(7), lit(21)},
        {C, O, "open(iii).4", 4, 4, 6, INF, lit(6), lit(6)},
        {C, O, "open(iii).5", 4, 4, 7, 7, lit(7), lit(8)},
        {C, O, "open(iii).6", 5, INF, 3, 3, k_plus(3), tk_plus(-1)},
        {C, O, "open(iii).7", 5, INF, 5, 5, lit(6), lit(6)},
    };
    return rows;
}

/// All rows matching (p,k,s,t); a well-formed table yields exactly one.
inline std::vector<const detail::CaseRow*> matching_rows(ProblemKind p, int k, int s, std::int64_t t) {
    std::vector<const detail::CaseRow*> out;
    for (const auto& r : cs_pt_rows())
        if (r.matches(p, k, s, t)) out.push_back(&r);
    return out;
}

/// Status of the problem on (C_s,P_t)-free graphs. For k >= 5, s = 3 the
/// threshold t_k is taken to be remark1_bound(k).
inline ClassEntry classify_cs_pt(ProblemKind p, int k, int s, std::int64_t t) {
    if (k < 1 || s < 3 || t < 1)
        throw PreconditionError("classify_cs_pt needs k >= 1, s >= 3, t >= 1");
    const auto rows = matching_rows(p, k, s, t);
    if (rows.size() != 1)
        throw std::logic_error("classification table: " + std::to_string(rows.size()) + " rows match (" +
                               std::string(to_string(p)) + ", " + std::to_string(k) + ", " + std::to_string(s) +
                               ", " + std::to_string(t) + ")");
    return {rows.front()->status, rows.front()->citation};
}

/// Status on P_t-free graphs, k >= 3.
inline ClassEntry classify_pt_free(ProblemKind p, int k, std::int64_t t) {
    if (k < 3 || t < 1) throw PreconditionError("classify_pt_free needs k >= 3, t >= 1");
    constexpr auto P = ComplexityStatus::PTime;
    constexpr auto N = ComplexityStatus::NPComplete;
    constexpr auto O = ComplexityStatus::Open;
    using Row = std::array<ComplexityStatus, 4>; // k = 3, 4, 5, >= 6
    // [problem][t row]: t <= 5, t = 6, t = 7, t >= 8
    static const std::array<std::array<Row, 4>, 3> table{{
        {{{P, P, P, P}, {P, O, N, N}, {P, N, N, N}, {O, N, N, N}}},
        {{{P, P, P, P}, {P, O, N, N}, {O, N, N, N}, {O, N, N, N}}},
        {{{P, P, P, P}, {P, N, N, N}, {O, N, N, N}, {O, N, N, N}}},
    }};
    static const std::array<const char*, 4> row_names{"t<=5", "t=6", "t=7", "t>=8"};
    static const std::array<const char*, 4> col_names{"k=3", "k=4", "k=5", "k>=6"};
    const std::size_t pi = p == ProblemKind::Colouring ? 0 : p == ProblemKind::PrecolouringExtension ? 1 : 2;
    const std::size_t ti = t <= 5 ? 0 : t == 6 ? 1 : t == 7 ? 2 : 3;
    const std::size_t ki = static_cast<std::size_t>(std::min(k, 6) - 3);
    return {table[pi][ti][ki], std::string("table:") + row_names[ti] + ":" + col_names[ki]};
}

inline constexpr int kAuditMaxK = 12;
inline constexpr int kAuditMaxS = 12;
inline constexpr int kAuditMaxT = 30;

/// Totality/disjointness of the case rows and hierarchy consistency
/// (P for List => P for the others; NP-c for Colouring => NP-c for the others)
/// on the grid k <= 12, 3 <= s <= 12, t <= 30.
inline VerificationReport audit_tables() {
    VerificationReport rep;
    rep.suite = "classify-audit";
    constexpr ProblemKind problems[] = {ProblemKind::Colouring, ProblemKind::PrecolouringExtension,
                                        ProblemKind::ListColouring};
    auto triple = [](int k, int s, int t) { return nlohmann::json::array({k, s, t}); };

    ClaimRecord total = timed([&] {
        ClaimRecord r{"classify.total-disjoint", "case rows of (i), (ii), (iii) and the open bullets", ClaimStatus::Pass,
                      "", nlohmann::json::array(), 0};
        std::size_t probes = 0;
        for (ProblemKind p : problems)
            for (int k = 1; k <= kAuditMaxK; ++k)
                for (int s = 3; s <= kAuditMaxS; ++s)
                    for (int t = 1; t <= kAuditMaxT; ++t) {
                        ++probes;
                        const auto rows = matching_rows(p, k, s, t);
                        if (rows.size() != 1) {
                            nlohmann::json v{{"problem", to_string(p)}, {"kst", triple(k, s, t)}, {"rows", nlohmann::json::array()}};
                            for (auto* row : rows) v["rows"].push_back(row->citation);
                            r.witness.push_back(std::move(v));
                        }
                    }
        r.status = r.witness.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
        r.detail = std::to_string(probes) + " probes, " + std::to_string(r.witness.size()) + " violations";
        return r;
    });
    rep.records.push_back(std::move(total));

    ClaimRecord rows_hit = timed([&] {
        ClaimRecord r{"classify.rows-reachable", "every case row is matched somewhere on the grid", ClaimStatus::Pass, "",
                      nlohmann::json::array(), 0};
        for (const auto& row : cs_pt_rows()) {
            bool hit = false;
            for (int k = 1; k <= kAuditMaxK && !hit; ++k)
                for (int s = 3; s <= kAuditMaxS && !hit; ++s)
                    for (int t = 1; t <= kAuditMaxT && !hit; ++t) hit = row.matches(row.problem, k, s, t);
            // (iii).6 starts at remark1_bound(5) = 287, beyond the grid
            if (!hit && row.citation == "(iii).6") hit = row.matches(row.problem, 5, 3, 287);
            if (!hit) r.witness.push_back(row.citation);
        }
        r.status = r.witness.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
        r.detail = std::to_string(cs_pt_rows().size()) + " rows";
        return r;
    });
    rep.records.push_back(std::move(rows_hit));

    ClaimRecord hierarchy = timed([&] {
        ClaimRecord r{"classify.hierarchy", "colouring within precolouring extension within list colouring",
                      ClaimStatus::Pass, "", nlohmann::json::array(), 0};
        auto safe = [](ProblemKind p, int k, int s, int t) -> std::optional<ComplexityStatus> {
            auto rows = matching_rows(p, k, s, t);
            if (rows.size() != 1) return std::nullopt;
            return rows.front()->status;
        };
        for (int k = 1; k <= kAuditMaxK; ++k)
            for (int s = 3; s <= kAuditMaxS; ++s)
                for (int t = 1; t <= kAuditMaxT; ++t) {
                    auto col = safe(ProblemKind::Colouring, k, s, t);
                    auto pre = safe(ProblemKind::PrecolouringExtension, k, s, t);
                    auto lst = safe(ProblemKind::ListColouring, k, s, t);
                    if (!col || !pre || !lst) continue; // reported by the totality claim
                    auto bad = [&](const char* why) {
                        r.witness.push_back({{"kst", triple(k, s, t)}, {"rule", why}});
                    };
                    using S = ComplexityStatus;
                    if (*lst == S::PTime && (*pre != S::PTime || *col != S::PTime)) bad("P for list implies P below");
                    if (*pre == S::PTime && *col != S::PTime) bad("P for extension implies P for colouring");
                    if (*col == S::NPComplete && (*pre != S::NPComplete || *lst != S::NPComplete))
                        bad("NP-c for colouring implies NP-c above");
                    if (*pre == S::NPComplete && *lst != S::NPComplete) bad("NP-c for extension implies NP-c for list");
                }
        r.status = r.witness.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
        r.detail = std::to_string(r.witness.size()) + " violations";
        return r;
    });
    rep.records.push_back(std::move(hierarchy));

    ClaimRecord table = timed([&] {
        ClaimRecord r{"classify.pt-free-hierarchy", "P_t-free table respects the same hierarchy", ClaimStatus::Pass, "",
                      nlohmann::json::array(), 0};
        using S = ComplexityStatus;
        for (int k = 3; k <= kAuditMaxK; ++k)
            for (int t = 1; t <= kAuditMaxT; ++t) {
                const S col = classify_pt_free(ProblemKind::Colouring, k, t).status;
                const S pre = classify_pt_free(ProblemKind::PrecolouringExtension, k, t).status;
                const S lst = classify_pt_free(ProblemKind::ListColouring, k, t).status;
                const bool ok = !(lst == S::PTime && (pre != S::PTime || col != S::PTime)) &&
                                !(pre == S::PTime && col != S::PTime) &&
                                !(col == S::NPComplete && (pre != S::NPComplete || lst != S::NPComplete)) &&
                                !(pre == S::NPComplete && lst != S::NPComplete);
                if (!ok) r.witness.push_back(nlohmann::json::array({k, t}));
            }
        r.status = r.witness.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
        r.detail = std::to_string(r.witness.size()) + " violations";
        return r;
    });
    rep.records.push_back(std::move(table));
    rep.metadata = {{"k_max", kAuditMaxK}, {"s_max", kAuditMaxS}, {"t_max", kAuditMaxT}};
    return rep;
}

} // namespace cspt
