#pragma once

// Positive-literal Not-All-Equal 3-SAT.
//
// Instance file:
//   nae <n> <m>
//   c <i> <j> <k>     (m lines, 1-based variable indices, distinct within a clause)

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cspt/error.hpp"

namespace cspt {

using Clause = std::array<int, 3>;

struct NaeInstance {
    int n = 0;
    std::vector<Clause> clauses;

    std::size_t m() const noexcept { return clauses.size(); }

    bool valid() const {
        if (n < 0) return false;
        for (const auto& c : clauses) {
            for (int v : c)
                if (v < 1 || v > n) return false;
            if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) return false;
        }
        return true;
    }

    friend bool operator==(const NaeInstance&, const NaeInstance&) = default;
};

/// Truth values for x_1..x_n (index 0 holds x_1).
using Assignment = std::vector<bool>;

inline bool is_nae_satisfied(const NaeInstance& inst, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(inst.n))
        throw PreconditionError("assignment has " + std::to_string(a.size()) + " values for " + std::to_string(inst.n) +
                                " variables");
    for (const auto& c : inst.clauses) {
        const bool x = a[c[0] - 1], y = a[c[1] - 1], z = a[c[2] - 1];
        if (x == y && y == z) return false;
    }
    return true;
}

inline constexpr int kMaxBruteForceVariables = 24;

/// Least satisfying assignment, reading x_1 as the least significant bit.
inline std::optional<Assignment> brute_force_nae(const NaeInstance& inst) {
    if (inst.n > kMaxBruteForceVariables)
        throw GuardError("brute_force_nae: n = " + std::to_string(inst.n) + " exceeds " +
                         std::to_string(kMaxBruteForceVariables));
    if (!inst.valid()) throw PreconditionError("brute_force_nae: malformed instance");
    // Each clause as a bitmask over the packed assignment word.
    std::vector<std::uint32_t> masks;
    masks.reserve(inst.m());
    for (const auto& c : inst.clauses)
        masks.push_back((1U << (c[0] - 1)) | (1U << (c[1] - 1)) | (1U << (c[2] - 1)));
    const std::uint32_t limit = inst.n == 0 ? 1U : (1U << inst.n);
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        bool ok = true;
        for (auto m : masks) {
            const auto hit = bits & m;
            if (hit == 0 || hit == m) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Assignment a(inst.n);
            for (int i = 0; i < inst.n; ++i) a[i] = (bits >> i) & 1U;
            return a;
        }
    }
    return std::nullopt;
}

namespace detail {

/// Uniform integer in [0, bound) by rejection, independent of the standard library's distributions.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace detail

/// m clauses, each a uniformly drawn 3-subset of {1..n} in uniformly random order.
inline NaeInstance random_instance(int n, std::size_t m, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("random_instance needs n >= 3");
    std::mt19937_64 rng(seed);
    NaeInstance inst{n, {}};
    inst.clauses.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Clause c{};
        for (int h = 0; h < 3; ++h) {
            int v;
            do {
                v = 1 + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(n)));
            } while ((h > 0 && v == c[0]) || (h > 1 && v == c[1]));
            c[h] = v;
        }
        inst.clauses.push_back(c);
    }
    return inst;
}

inline void write_nae(std::ostream& os, const NaeInstance& inst) {
    os << "nae " << inst.n << ' ' << inst.m() << '\n';
    for (const auto& c : inst.clauses) os << "c " << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

inline std::string to_nae_text(const NaeInstance& inst) {
    std::ostringstream os;
    write_nae(os, inst);
    return os.str();
}

inline NaeInstance read_nae(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) { throw ParseError("nae line " + std::to_string(lineno) + ": " + why); };
    std::optional<NaeInstance> inst;
    std::size_t expected = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "nae") {
            if (inst) fail("duplicate header");
            long long n = -1, m = -1;
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header");
            inst = NaeInstance{static_cast<int>(n), {}};
            expected = static_cast<std::size_t>(m);
        } else if (kind == "c") {
            if (!inst) fail("clause before header");
            Clause c{};
            if (!(ls >> c[0] >> c[1] >> c[2])) fail("malformed clause");
            for (int v : c)
                if (v < 1 || v > inst->n) fail("variable out of range");
            if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) fail("repeated variable in clause");
            inst->clauses.push_back(c);
        } else {
            fail("unknown record '" + kind + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing tokens");
    }
    if (!inst) throw ParseError("nae: missing header");
    if (inst->m() != expected) throw ParseError("nae: clause count does not match header");
    return *inst;
}

inline NaeInstance parse_nae(const std::string& text) {
    std::istringstream is(text);
    return read_nae(is);
}

/// The Fano plane: the smallest positive NAE-3SAT instance with no solution.
inline NaeInstance fano_instance() {
    return {7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}};
}

} // namespace cspt
