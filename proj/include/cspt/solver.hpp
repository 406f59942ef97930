#pragma once

// Exact list colouring and the decision procedures built on it.
//
// The core search colours the most constrained vertex first (smallest
// remaining list, then largest degree, then least id) and forward-checks:
// assigning colour c removes c from every uncoloured neighbour, and a
// neighbour left with a single colour is coloured immediately. Whenever the
// uncoloured vertices fall apart into components, each is solved on its own.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cspt/graph.hpp"
#include "cspt/sat.hpp"

namespace cspt {

struct Colouring {
    std::vector<int> colour; // colour[v] in 1..k

    int operator[](Vertex v) const { return colour.at(v); }
    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Proper and, when lists are given, respecting them.
inline bool is_valid_colouring(const Graph& g, const Colouring& c, const ListAssignment* lists = nullptr) {
    if (c.colour.size() != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c.colour[v] < 1 || c.colour[v] > kMaxColours) return false;
        if (lists && !(lists->lists[v] & colour_bit(c.colour[v]))) return false;
    }
    for (const Edge& e : g.edges())
        if (c.colour[e.first] == c.colour[e.second]) return false;
    return true;
}

namespace detail {

inline void audit_solution(const Graph& g, const std::optional<Colouring>& c, const ListAssignment& lists) {
#ifdef CSPT_VALIDATE_SOLUTIONS
    if (c && !is_valid_colouring(g, *c, &lists)) throw std::logic_error("solver returned an invalid colouring");
#else
    (void)g;
    (void)c;
    (void)lists;
#endif
}

class ListColouringSearch {
public:
    /// `symmetric` asserts that all lists are {1..k}; colours are then interchangeable
    /// and a branching vertex never opens a colour beyond the largest one in use plus one.
    /// The search gives up after `node_budget` branching nodes; exhausted() then reports it.
    ListColouringSearch(const Graph& g, const ListAssignment& lists, bool symmetric,
                        std::uint64_t node_budget = UINT64_MAX)
        : g_(g), dom_(lists.lists), col_(g.order(), 0), symmetric_(symmetric), budget_(node_budget) {}

    bool exhausted() const { return exhausted_; }

    std::optional<Colouring> run() {
        for (ColourMask m : dom_)
            if (m == 0) return std::nullopt;
        uncoloured_ = g_.order();
        for (Vertex v = 0; v < g_.order(); ++v)
            if (col_[v] == 0 && std::popcount(dom_[v]) == 1 && !assign(v, std::countr_zero(dom_[v]) + 1))
                return std::nullopt;
        std::vector<Vertex> all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) all[v] = v;
        if (!search(all)) return std::nullopt;
        return Colouring{col_};
    }

private:
    struct Mark {
        std::size_t trail;
        std::size_t assigned;
        int max_used;
    };

    Mark mark() const { return {trail_.size(), assigned_.size(), max_used_}; }

    void undo(const Mark& m) {
        while (trail_.size() > m.trail) {
            dom_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
        while (assigned_.size() > m.assigned) {
            col_[assigned_.back()] = 0;
            assigned_.pop_back();
            ++uncoloured_;
        }
        max_used_ = m.max_used;
    }

    bool assign(Vertex v, int c) {
        pending_.clear();
        pending_.emplace_back(v, c);
        while (!pending_.empty()) {
            auto [u, colour] = pending_.back();
            pending_.pop_back();
            if (col_[u] != 0) {
                if (col_[u] != colour) return false;
                continue;
            }
            if (!(dom_[u] & colour_bit(colour))) return false;
            col_[u] = colour;
            assigned_.push_back(u);
            --uncoloured_;
            max_used_ = std::max(max_used_, colour);
            const ColourMask bit = colour_bit(colour);
            if (dom_[u] != bit) {
                trail_.emplace_back(u, dom_[u]);
                dom_[u] = bit;
            }
            for (Vertex w : g_.neighbours(u)) {
                if (col_[w] != 0) {
                    if (col_[w] == colour) return false;
                    continue;
                }
                if (!(dom_[w] & bit)) continue;
                trail_.emplace_back(w, dom_[w]);
                dom_[w] &= ~bit;
                if (dom_[w] == 0) return false;
                if (std::popcount(dom_[w]) == 1) pending_.emplace_back(w, std::countr_zero(dom_[w]) + 1);
            }
        }
        return true;
    }

    /// Smallest remaining list, then largest degree, then least id, among the uncoloured vertices of `region`.
    std::optional<Vertex> select(const std::vector<Vertex>& region) const {
        std::optional<Vertex> best;
        int best_size = 0;
        std::size_t best_degree = 0;
        for (Vertex v : region) {
            if (col_[v] != 0) continue;
            const int size = std::popcount(dom_[v]);
            const std::size_t degree = g_.degree(v);
            if (!best || size < best_size || (size == best_size && degree > best_degree) ||
                (size == best_size && degree == best_degree && v < *best)) {
                best = v;
                best_size = size;
                best_degree = degree;
            }
        }
        return best;
    }

    /// Connected components of the uncoloured vertices of `region`, each in
    /// ascending order, listed by least vertex. Uncoloured neighbours of a
    /// region vertex always lie in the region, so the BFS needs no membership test.
    std::vector<std::vector<Vertex>> components(const std::vector<Vertex>& region) {
        if (seen_.size() != g_.order()) seen_.assign(g_.order(), 0);
        ++epoch_;
        std::vector<std::vector<Vertex>> out;
        for (Vertex r : region) {
            if (col_[r] != 0 || seen_[r] == epoch_) continue;
            std::vector<Vertex> comp{r};
            seen_[r] = epoch_;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : g_.neighbours(comp[i]))
                    if (col_[w] == 0 && seen_[w] != epoch_) {
                        seen_[w] = epoch_;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }

    /// Colours the uncoloured part of `region`. Independent components are
    /// solved one after another, so a failure in one is never retried against
    /// the alternatives of another.
    bool search(const std::vector<Vertex>& region) {
        auto comps = components(region);
        if (comps.empty()) return true;
        if (comps.size() > 1) {
            for (const auto& comp : comps)
                if (!branch(comp)) return false;
            return true;
        }
        // one component: keep the caller's vector unless it has become mostly coloured
        if (2 * comps.front().size() < region.size()) return branch(comps.front());
        return branch(region);
    }

    bool branch(const std::vector<Vertex>& region) {
        const auto v = select(region);
        if (!v) return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        ColourMask choices = dom_[*v];
        if (symmetric_) choices &= full_mask(max_used_ + 1);
        for (int c = 1; choices; ++c, choices >>= 1) {
            if (!(choices & 1U)) continue;
            const Mark m = mark();
            if (assign(*v, c) && search(region)) return true;
            if (exhausted_) return false;
            undo(m);
        }
        return false;
    }

    const Graph& g_;
    std::vector<ColourMask> dom_;
    std::vector<int> col_;
    std::vector<std::pair<Vertex, ColourMask>> trail_;
    std::vector<Vertex> assigned_;
    std::vector<std::pair<Vertex, int>> pending_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
    std::size_t uncoloured_ = 0;
    int max_used_ = 0;
    bool symmetric_ = false;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

/// A maximal clique grown greedily by degree. Under full lists its vertices
/// can be fixed to colours 1, 2, ... without losing solutions.
inline std::vector<Vertex> greedy_clique(const Graph& g) {
    std::vector<Vertex> clique;
    std::vector<Vertex> cand(g.order());
    for (Vertex v = 0; v < g.order(); ++v) cand[v] = v;
    while (!cand.empty()) {
        Vertex best = cand.front();
        for (Vertex v : cand)
            if (g.degree(v) > g.degree(best)) best = v;
        clique.push_back(best);
        std::vector<Vertex> next;
        for (Vertex v : cand)
            if (v != best && g.adjacent(v, best)) next.push_back(v);
        cand = std::move(next);
    }
    return clique;
}

/// SAT encoding: variable v*k + c - 1 means "v gets colour c".
inline std::optional<Colouring> cdcl_list_colouring(const Graph& g, const ListAssignment& lists, bool symmetric) {
    const auto k = static_cast<std::uint32_t>(lists.k);
    const auto n = static_cast<std::uint32_t>(g.order());
    auto var = [k](Vertex v, int c) { return v * k + static_cast<std::uint32_t>(c - 1); };
    sat::Solver solver(n * k);
    bool ok = true;
    std::vector<ColourMask> dom = lists.lists;
    if (symmetric) {
        const auto clique = greedy_clique(g);
        if (clique.size() > k) return std::nullopt;
        for (std::size_t i = 0; i < clique.size(); ++i) dom[clique[i]] = colour_bit(static_cast<int>(i + 1));
    }
    for (Vertex v = 0; v < n && ok; ++v) {
        std::vector<sat::Lit> alo;
        for (int c = 1; c <= lists.k; ++c) {
            if (dom[v] & colour_bit(c)) alo.push_back(sat::pos(var(v, c)));
            else ok = ok && solver.add_clause({sat::neg(var(v, c))});
        }
        for (std::size_t i = 0; i < alo.size(); ++i)
            for (std::size_t j = i + 1; j < alo.size(); ++j)
                ok = ok && solver.add_clause({sat::negate(alo[i]), sat::negate(alo[j])});
        ok = ok && solver.add_clause(std::move(alo));
    }
    for (const Edge& e : g.edges()) {
        ColourMask common = dom[e.first] & dom[e.second];
        for (int c = 1; common && ok; ++c, common >>= 1)
            if (common & 1U) ok = solver.add_clause({sat::neg(var(e.first, c)), sat::neg(var(e.second, c))});
    }
    if (!ok) return std::nullopt;
    auto model = solver.solve();
    if (!model) return std::nullopt;
    Colouring out{std::vector<int>(n, 0)};
    for (Vertex v = 0; v < n; ++v)
        for (int c = 1; c <= lists.k; ++c)
            if ((*model)[var(v, c)]) out.colour[v] = c;
    return out;
}

inline constexpr std::uint64_t kSearchNodeBudget = 50000;

/// Backtracking first; instances it cannot settle within the node budget go to clause learning.
inline std::optional<Colouring> hybrid_list_colouring(const Graph& g, const ListAssignment& lists, bool symmetric) {
    ListColouringSearch search(g, lists, symmetric, kSearchNodeBudget);
    auto result = search.run();
    if (!search.exhausted()) return result;
    return cdcl_list_colouring(g, lists, symmetric);
}

} // namespace detail

inline void require_lists(const Graph& g, const ListAssignment& lists) {
    if (lists.lists.size() != g.order())
        throw PreconditionError("list assignment covers " + std::to_string(lists.lists.size()) + " of " +
                                std::to_string(g.order()) + " vertices");
    if (lists.k < 1 || lists.k > kMaxColours) throw PreconditionError("list assignment k out of range");
    for (ColourMask m : lists.lists)
        if (m & ~full_mask(lists.k)) throw PreconditionError("list contains a colour outside 1..k");
}

/// Always runs the general backtracking search.
inline std::optional<Colouring> solve_list_colouring_search(const Graph& g, const ListAssignment& lists) {
    require_lists(g, lists);
    auto result = detail::ListColouringSearch(g, lists, false).run();
    detail::audit_solution(g, result, lists);
    return result;
}

/// Decides instances whose lists have at most two colours through the
/// implication graph of the equivalent 2-SAT formula.
inline std::optional<Colouring> solve_two_list_colouring(const Graph& g, const ListAssignment& lists) {
    require_lists(g, lists);
    const std::size_t n = g.order();
    for (ColourMask m : lists.lists) {
        if (m == 0) return std::nullopt;
        if (std::popcount(m) > 2) throw PreconditionError("solve_two_list_colouring: list with more than two colours");
    }
    // Literal 2v: "v takes the lower colour of its list"; 2v+1 is its negation.
    auto low = [&](Vertex v) { return std::countr_zero(lists.lists[v]) + 1; };
    auto high = [&](Vertex v) { return 64 - std::countl_zero(lists.lists[v]); };
    auto lit = [&](Vertex v, int c) -> std::size_t { return 2 * std::size_t{v} + (c == low(v) ? 0 : 1); };
    std::vector<std::vector<std::size_t>> imp(2 * n);
    auto add_clause = [&](std::size_t a, std::size_t b) { // a or b
        imp[a ^ 1].push_back(b);
        imp[b ^ 1].push_back(a);
    };
    for (Vertex v = 0; v < n; ++v)
        if (std::popcount(lists.lists[v]) == 1) add_clause(2 * std::size_t{v}, 2 * std::size_t{v});
    for (const Edge& e : g.edges()) {
        ColourMask common = lists.lists[e.first] & lists.lists[e.second];
        for (int c = 1; common; ++c, common >>= 1)
            if (common & 1U) add_clause(lit(e.first, c) ^ 1, lit(e.second, c) ^ 1);
    }

    // Iterative Tarjan; components are numbered in reverse topological order.
    const std::size_t lits = 2 * n;
    std::vector<std::size_t> index(lits, SIZE_MAX), low_link(lits, 0), comp(lits, SIZE_MAX);
    std::vector<bool> on_stack(lits, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0, components = 0;
    for (std::size_t root = 0; root < lits; ++root) {
        if (index[root] != SIZE_MAX) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low_link[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            if (next < imp[u].size()) {
                const std::size_t w = imp[u][next++];
                if (index[w] == SIZE_MAX) {
                    index[w] = low_link[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low_link[u] = std::min(low_link[u], index[w]);
                }
                continue;
            }
            if (low_link[u] == index[u]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != u);
                ++components;
            }
            const std::size_t done = u;
            call.pop_back();
            if (!call.empty()) low_link[call.back().first] = std::min(low_link[call.back().first], low_link[done]);
        }
    }
    Colouring out{std::vector<int>(n)};
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t t = 2 * std::size_t{v};
        if (comp[t] == comp[t ^ 1]) return std::nullopt;
        out.colour[v] = comp[t] < comp[t ^ 1] ? low(v) : high(v);
    }
    detail::audit_solution(g, out, lists);
    return out;
}

/// Complete search for a colouring respecting `lists`; instances whose lists
/// all have at most two colours go through the 2-SAT route.
inline std::optional<Colouring> solve_list_colouring(const Graph& g, const ListAssignment& lists) {
    require_lists(g, lists);
    if (std::all_of(lists.lists.begin(), lists.lists.end(), [](ColourMask m) { return std::popcount(m) <= 2; }))
        return solve_two_list_colouring(g, lists);
    auto result = detail::hybrid_list_colouring(g, lists, false);
    detail::audit_solution(g, result, lists);
    return result;
}

/// Always runs the clause-learning engine.
inline std::optional<Colouring> solve_list_colouring_cdcl(const Graph& g, const ListAssignment& lists) {
    require_lists(g, lists);
    auto result = detail::cdcl_list_colouring(g, lists, false);
    detail::audit_solution(g, result, lists);
    return result;
}

inline std::optional<Colouring> find_k_colouring(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (g.order() == 0) return Colouring{};
    if (k > kMaxColours) {
        if (g.order() > static_cast<std::size_t>(kMaxColours))
            throw GuardError("k-colouring supports at most " + std::to_string(kMaxColours) + " colours");
        k = kMaxColours;
    }
    const auto lists = ListAssignment::full(g.order(), k);
    auto result = detail::hybrid_list_colouring(g, lists, true);
    detail::audit_solution(g, result, lists);
    return result;
}

inline bool is_k_colourable(const Graph& g, int k) { return find_k_colouring(g, k).has_value(); }

/// Least k <= cap admitting a k-colouring (0 for the empty graph).
inline int chromatic_number(const Graph& g, int cap) {
    if (cap < 1) throw PreconditionError("cap must be at least 1");
    if (g.order() == 0) return 0;
    for (int k = 1; k <= cap; ++k)
        if (is_k_colourable(g, k)) return k;
    throw GuardError("chromatic number exceeds cap " + std::to_string(cap));
}

inline std::optional<Colouring> extend_precolouring(const Graph& g, int k, const Precolouring& pre) {
    if (k < 1 || k > kMaxColours) throw PreconditionError("k out of range");
    for (auto [v, c] : pre.assignment)
        if (c > k) throw PreconditionError("invalid precolouring: colour " + std::to_string(c) + " exceeds k");
    if (!valid_precolouring(g, pre)) throw PreconditionError("invalid precolouring");
    auto lists = ListAssignment::full(g.order(), k);
    for (auto [v, c] : pre.assignment) lists.lists[v] = colour_bit(c);
    return solve_list_colouring(g, lists);
}

/// True iff every k-colouring gives u and v the same colour (u, v non-adjacent).
inline bool forced_equal(const Graph& g, int k, Vertex u, Vertex v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw PreconditionError("forced_equal: u == v");
    if (g.adjacent(u, v)) throw PreconditionError("forced_equal: u and v are adjacent");
    if (!is_k_colourable(g, k)) throw PreconditionError("forced_equal: graph is not k-colourable");
    Graph probe = g;
    probe.add_edge(u, v);
    return !is_k_colourable(probe, k);
}

/// True iff every k-colouring gives u and v different colours.
inline bool forced_distinct(const Graph& g, int k, Vertex u, Vertex v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw PreconditionError("forced_distinct: u == v");
    if (!is_k_colourable(g, k)) throw PreconditionError("forced_distinct: graph is not k-colourable");
    if (g.adjacent(u, v)) return true;
    return !is_k_colourable(identify_vertices(g, u, v), k);
}

} // namespace cspt
