#pragma once

// Small conflict-driven clause-learning SAT solver: two watched literals,
// first-UIP learning, activity-ordered decisions with phase saving, Luby
// restarts. No randomness, so runs are reproducible.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

namespace cspt::sat {

/// Literal encoding: 2*var for the positive literal, 2*var+1 for its negation.
using Lit = std::uint32_t;

inline Lit pos(std::uint32_t var) { return 2 * var; }
inline Lit neg(std::uint32_t var) { return 2 * var + 1; }
inline Lit negate(Lit l) { return l ^ 1U; }
inline std::uint32_t var_of(Lit l) { return l >> 1; }

class Solver {
public:
    explicit Solver(std::uint32_t vars)
        : value_(vars, kUnset), level_(vars, 0), reason_(vars, kNoReason), activity_(vars, 0.0),
          phase_(vars, 1), heap_index_(vars, kAbsent), seen_(vars, 0), watches_(2 * std::size_t{vars}) {
        for (std::uint32_t v = 0; v < vars; ++v) heap_insert(v);
    }

    std::uint32_t vars() const { return static_cast<std::uint32_t>(value_.size()); }

    /// Adds a clause at decision level 0. Returns false once the formula is known unsatisfiable.
    bool add_clause(std::vector<Lit> c) {
        if (!ok_) return false;
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        std::vector<Lit> kept;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i + 1 < c.size() && c[i + 1] == negate(c[i])) return true; // tautology
            const int val = lit_value(c[i]);
            if (val == 1) return true;
            if (val == kUnset) kept.push_back(c[i]);
        }
        if (kept.empty()) return ok_ = false;
        if (kept.size() == 1) {
            enqueue(kept[0], kNoReason);
            return ok_ = propagate() == kNoReason;
        }
        attach(std::move(kept));
        return true;
    }

    /// Prefers `l` when its variable is next decided.
    void set_phase(Lit l) { phase_[var_of(l)] = (l & 1U) ? 0 : 1; }

    /// Model as one bool per variable, or nullopt when unsatisfiable.
    std::optional<std::vector<bool>> solve() {
        if (!ok_) return std::nullopt;
        for (std::uint64_t run = 0;; ++run) {
            const std::uint64_t budget = 100 * luby(run);
            const int r = search(budget);
            if (r == 1) {
                std::vector<bool> model(vars());
                for (std::uint32_t v = 0; v < vars(); ++v) model[v] = value_[v] == 1;
                cancel_until(0);
                return model;
            }
            if (r == 0) {
                ok_ = false;
                return std::nullopt;
            }
        }
    }

    std::uint64_t conflicts() const { return conflicts_; }

private:
    static constexpr int kUnset = -1;
    static constexpr std::uint32_t kNoReason = ~std::uint32_t{0};
    static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

    static std::uint64_t luby(std::uint64_t i) {
        // i-th element (0-based) of 1 1 2 1 1 2 4 ...
        std::uint64_t size = 1, seq = 0;
        while (size < i + 1) {
            ++seq;
            size = 2 * size + 1;
        }
        while (size - 1 != i) {
            size = (size - 1) >> 1;
            --seq;
            i = i % size;
        }
        return std::uint64_t{1} << seq;
    }

    int lit_value(Lit l) const {
        const int v = value_[var_of(l)];
        if (v == kUnset) return kUnset;
        return (l & 1U) ? 1 - v : v;
    }

    std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

    std::uint32_t attach(std::vector<Lit> c) {
        const auto idx = static_cast<std::uint32_t>(clauses_.size());
        watches_[c[0]].push_back(idx);
        watches_[c[1]].push_back(idx);
        clauses_.push_back(std::move(c));
        return idx;
    }

    void enqueue(Lit l, std::uint32_t reason) {
        const std::uint32_t v = var_of(l);
        value_[v] = (l & 1U) ? 0 : 1;
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(l);
    }

    /// Returns the index of a conflicting clause, or kNoReason.
    std::uint32_t propagate() {
        while (qhead_ < trail_.size()) {
            const Lit falsified = negate(trail_[qhead_++]);
            auto& ws = watches_[falsified];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const std::uint32_t ci = ws[i];
                auto& c = clauses_[ci];
                if (c[0] == falsified) std::swap(c[0], c[1]);
                if (lit_value(c[0]) == 1) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t j = 2; j < c.size(); ++j) {
                    if (lit_value(c[j]) != 0) {
                        std::swap(c[1], c[j]);
                        watches_[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = ci;
                if (lit_value(c[0]) == 0) {
                    for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
            ws.resize(keep);
        }
        return kNoReason;
    }

    void bump(std::uint32_t v) {
        activity_[v] += inc_;
        if (activity_[v] > 1e100) {
            for (auto& a : activity_) a *= 1e-100;
            inc_ *= 1e-100;
        }
        if (heap_index_[v] != kAbsent) sift_up(heap_index_[v]);
    }

    /// First-UIP learning; returns the learnt clause (asserting literal first) and the backjump level.
    std::pair<std::vector<Lit>, std::uint32_t> analyze(std::uint32_t confl) {
        std::vector<Lit> learnt{0};
        std::uint32_t open = 0;
        std::size_t index = trail_.size();
        Lit p = 0;
        bool first = true;
        std::vector<std::uint32_t> touched;
        do {
            const auto& c = clauses_[confl];
            for (std::size_t j = first ? 0 : 1; j < c.size(); ++j) {
                const std::uint32_t v = var_of(c[j]);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                touched.push_back(v);
                bump(v);
                if (level_[v] == decision_level()) ++open;
                else learnt.push_back(c[j]);
            }
            first = false;
            do {
                p = trail_[--index];
            } while (!seen_[var_of(p)]);
            confl = reason_[var_of(p)];
            seen_[var_of(p)] = 0;
            --open;
        } while (open > 0);
        learnt[0] = negate(p);
        for (auto v : touched) seen_[v] = 0;
        std::uint32_t back = 0;
        if (learnt.size() > 1) {
            std::size_t best = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i)
                if (level_[var_of(learnt[i])] > level_[var_of(learnt[best])]) best = i;
            std::swap(learnt[1], learnt[best]);
            back = level_[var_of(learnt[1])];
        }
        return {std::move(learnt), back};
    }

    void cancel_until(std::uint32_t level) {
        if (decision_level() <= level) return;
        for (std::size_t i = trail_.size(); i > trail_lim_[level]; --i) {
            const std::uint32_t v = var_of(trail_[i - 1]);
            phase_[v] = static_cast<std::int8_t>(value_[v]);
            value_[v] = kUnset;
            reason_[v] = kNoReason;
            if (heap_index_[v] == kAbsent) heap_insert(v);
        }
        trail_.resize(trail_lim_[level]);
        trail_lim_.resize(level);
        qhead_ = trail_.size();
    }

    /// 1 = model found, 0 = unsatisfiable, -1 = restart.
    int search(std::uint64_t budget) {
        std::uint64_t local = 0;
        while (true) {
            const std::uint32_t confl = propagate();
            if (confl != kNoReason) {
                ++conflicts_;
                ++local;
                if (decision_level() == 0) return 0;
                auto [learnt, back] = analyze(confl);
                cancel_until(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    const Lit asserting = learnt[0];
                    const std::uint32_t idx = attach(std::move(learnt));
                    enqueue(asserting, idx);
                }
                inc_ *= 1.0 / 0.95;
                continue;
            }
            if (local >= budget) {
                cancel_until(0);
                return -1;
            }
            std::optional<std::uint32_t> next;
            while (!heap_.empty()) {
                const std::uint32_t v = heap_pop();
                if (value_[v] == kUnset) {
                    next = v;
                    break;
                }
            }
            if (!next) return 1;
            trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
            enqueue(phase_[*next] ? pos(*next) : neg(*next), kNoReason);
        }
    }

    // binary max-heap on activity, ties to the smaller variable
    bool before(std::uint32_t a, std::uint32_t b) const {
        return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
    }
    void sift_up(std::uint32_t i) {
        const std::uint32_t v = heap_[i];
        while (i > 0) {
            const std::uint32_t parent = (i - 1) / 2;
            if (!before(v, heap_[parent])) break;
            heap_[i] = heap_[parent];
            heap_index_[heap_[i]] = i;
            i = parent;
        }
        heap_[i] = v;
        heap_index_[v] = i;
    }
    void sift_down(std::uint32_t i) {
        const std::uint32_t v = heap_[i];
        const auto n = static_cast<std::uint32_t>(heap_.size());
        while (true) {
            std::uint32_t child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
            if (!before(heap_[child], v)) break;
            heap_[i] = heap_[child];
            heap_index_[heap_[i]] = i;
            i = child;
        }
        heap_[i] = v;
        heap_index_[v] = i;
    }
    void heap_insert(std::uint32_t v) {
        heap_.push_back(v);
        heap_index_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
        sift_up(heap_index_[v]);
    }
    std::uint32_t heap_pop() {
        const std::uint32_t top = heap_.front();
        heap_index_[top] = kAbsent;
        const std::uint32_t last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            heap_index_[last] = 0;
            sift_down(0);
        }
        return top;
    }

    std::vector<int> value_;
    std::vector<std::uint32_t> level_;
    std::vector<std::uint32_t> reason_;
    std::vector<double> activity_;
    std::vector<std::int8_t> phase_;
    std::vector<std::uint32_t> heap_index_;
    std::vector<std::uint8_t> seen_;
    std::vector<std::vector<std::uint32_t>> watches_;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<Lit> trail_;
    std::vector<std::uint32_t> trail_lim_;
    std::vector<std::uint32_t> heap_;
    std::size_t qhead_ = 0;
    double inc_ = 1.0;
    std::uint64_t conflicts_ = 0;
    bool ok_ = true;
};

} // namespace cspt::sat
