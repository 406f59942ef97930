#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cspt/error.hpp"

namespace cspt {

enum class ClaimStatus { Pass, Fail, Skipped };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
    }
    return "skipped";
}

inline ClaimStatus parse_claim_status(const std::string& s) {
    if (s == "pass") return ClaimStatus::Pass;
    if (s == "fail") return ClaimStatus::Fail;
    if (s == "skipped") return ClaimStatus::Skipped;
    throw ParseError("unknown claim status: " + s);
}

/// One verified (or refuted) claim. `witness` holds the evidence: for a fail it
/// is a counterexample that can be re-parsed and re-checked on its own.
struct ClaimRecord {
    std::string id;
    std::string citation;
    ClaimStatus status = ClaimStatus::Skipped;
    std::string detail;
    nlohmann::json witness = nullptr;
    double seconds = 0.0;

    friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct VerificationReport {
    std::string suite;
    std::vector<ClaimRecord> records;
    nlohmann::json metadata = nlohmann::json::object();

    bool all_passed() const {
        for (const auto& r : records)
            if (r.status == ClaimStatus::Fail) return false;
        return true;
    }
    std::size_t count(ClaimStatus s) const {
        std::size_t n = 0;
        for (const auto& r : records) n += r.status == s;
        return n;
    }
    void append(const VerificationReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs `body` and stamps the wall time onto the record it returns.
template <class F>
ClaimRecord timed(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    ClaimRecord r = body();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline nlohmann::json to_json(const ClaimRecord& r, bool with_timings = true) {
    nlohmann::json j = {{"id", r.id},           {"citation", r.citation}, {"status", to_string(r.status)},
                        {"detail", r.detail}, {"witness", r.witness}};
    if (with_timings) j["seconds"] = r.seconds;
    return j;
}

inline nlohmann::json to_json(const VerificationReport& rep, bool with_timings = true) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : rep.records) records.push_back(to_json(r, with_timings));
    return {{"suite", rep.suite},
            {"metadata", rep.metadata},
            {"records", std::move(records)},
            {"summary",
             {{"pass", rep.count(ClaimStatus::Pass)},
              {"fail", rep.count(ClaimStatus::Fail)},
              {"skipped", rep.count(ClaimStatus::Skipped)}}}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport rep;
    try {
        rep.suite = j.at("suite").get<std::string>();
        rep.metadata = j.at("metadata");
        for (const auto& r : j.at("records")) {
            ClaimRecord c;
            c.id = r.at("id").get<std::string>();
            c.citation = r.at("citation").get<std::string>();
            c.status = parse_claim_status(r.at("status").get<std::string>());
            c.detail = r.at("detail").get<std::string>();
            c.witness = r.at("witness");
            c.seconds = r.value("seconds", 0.0);
            rep.records.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return rep;
}

enum class ReportFormat { Structured, Human };

inline void emit_report(std::ostream& os, const VerificationReport& rep, ReportFormat format,
                        bool with_timings = true) {
    if (format == ReportFormat::Structured) {
        os << to_json(rep, with_timings).dump(2) << '\n';
        return;
    }
    os << "suite " << rep.suite << ": " << rep.count(ClaimStatus::Pass) << " pass, " << rep.count(ClaimStatus::Fail)
       << " fail, " << rep.count(ClaimStatus::Skipped) << " skipped\n";
    for (const auto& r : rep.records) {
        os << "  [" << to_string(r.status) << "] " << r.id;
        if (!r.citation.empty()) os << "  (" << r.citation << ")";
        if (!r.detail.empty()) os << "  " << r.detail;
        if (with_timings) os << "  " << r.seconds << "s";
        os << '\n';
    }
}

} // namespace cspt
