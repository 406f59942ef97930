#pragma once

// Exact detection of induced paths, induced cycles and small induced patterns.
//
// All searches are depth-first in ascending vertex order, so the first witness
// found is the lexicographically least vertex sequence the search can produce.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cspt/bitset.hpp"
#include "cspt/graph.hpp"
#include "cspt/report.hpp"

namespace cspt {

using VertexPath = std::vector<Vertex>;

namespace detail {

/// Vertices reachable from `seeds` through `usable`, stopping once `enough` are found.
inline std::size_t reach_count(const AdjacencyMatrix& adj, Bitset frontier, const Bitset& usable, std::size_t enough) {
    frontier &= usable;
    Bitset reach = frontier;
    std::size_t count = reach.count();
    while (count < enough && frontier.any()) {
        Bitset next(adj.order());
        frontier.for_each([&](std::size_t v) { next |= adj.row(static_cast<Vertex>(v)); });
        next &= usable;
        next.subtract(reach);
        reach |= next;
        count += next.count();
        frontier = std::move(next);
    }
    return count;
}

/// DFS over induced paths. `forbidden` is the path plus the neighbourhood of
/// every path vertex except the last one; extensions are N(last) - forbidden.
class InducedPathSearch {
public:
    explicit InducedPathSearch(const Graph& g) : adj_(g) {}

    const AdjacencyMatrix& adjacency() const { return adj_; }

    /// Lexicographically least induced path on exactly t vertices whose i-th
    /// vertex lies in classes[i] (all vertices when classes is empty).
    std::optional<VertexPath> find(std::size_t t, const std::vector<Bitset>& classes = {}) {
        const std::size_t n = adj_.order();
        if (t == 0 || t > n) return std::nullopt;
        target_ = t;
        classes_ = &classes;
        path_.clear();
        for (Vertex s = 0; s < n; ++s) {
            if (!classes.empty() && !classes[0].test(s)) continue;
            Bitset forbidden(n);
            forbidden.set(s);
            path_.assign(1, s);
            if (extend(forbidden)) return path_;
        }
        return std::nullopt;
    }

    /// Visits every induced path (as a sequence, so both orientations) whose
    /// first vertex is in `starts`. The visitor returns false to stop extending
    /// the current path; `stop` aborts the whole enumeration.
    void for_each(const Bitset& starts, const std::function<bool(const VertexPath&)>& visit, const bool* stop = nullptr) {
        const std::size_t n = adj_.order();
        starts.for_each([&](std::size_t s) {
            if (stop && *stop) return;
            Bitset forbidden(n);
            forbidden.set(s);
            path_.assign(1, static_cast<Vertex>(s));
            enumerate(forbidden, visit, stop);
        });
    }

private:
    bool extend(const Bitset& forbidden) {
        if (path_.size() == target_) return true;
        const Vertex last = path_.back();
        Bitset cand = adj_.row(last);
        cand.subtract(forbidden);
        if (!classes_->empty()) cand &= (*classes_)[path_.size()];
        if (cand.none()) return false;

        const std::size_t remaining = target_ - path_.size();
        if (remaining > 1 && classes_->empty()) {
            // One candidate is taken now; the rest of the path must avoid N[last].
            Bitset usable(adj_.order());
            usable.fill();
            usable.subtract(forbidden);
            usable.subtract(adj_.row(last));
            Bitset seeds(adj_.order());
            cand.for_each([&](std::size_t c) { seeds |= adj_.row(static_cast<Vertex>(c)); });
            if (1 + reach_count(adj_, std::move(seeds), usable, remaining - 1) < remaining) return false;
        }

        const Bitset child = forbidden | adj_.row(last);
        for (std::size_t w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
            path_.push_back(static_cast<Vertex>(w));
            if (extend(child)) return true;
            path_.pop_back();
        }
        return false;
    }

    void enumerate(const Bitset& forbidden, const std::function<bool(const VertexPath&)>& visit, const bool* stop) {
        if (stop && *stop) return;
        if (!visit(path_)) return;
        const Vertex last = path_.back();
        Bitset cand = adj_.row(last);
        cand.subtract(forbidden);
        if (cand.none()) return;
        const Bitset child = forbidden | adj_.row(last);
        for (std::size_t w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
            path_.push_back(static_cast<Vertex>(w));
            enumerate(child, visit, stop);
            path_.pop_back();
            if (stop && *stop) return;
        }
    }

    AdjacencyMatrix adj_;
    VertexPath path_;
    std::size_t target_ = 0;
    const std::vector<Bitset>* classes_ = nullptr;
};

/// Induced cycles anchored at their least vertex v0: the DFS grows an induced
/// path v0 v1 ... whose interior avoids N(v0); a vertex adjacent to v0 closes it.
class InducedCycleSearch {
public:
    explicit InducedCycleSearch(const Graph& g) : adj_(g) {}

    /// Cycle with exactly `exact` vertices, or with at least `min_len` when exact == 0.
    std::optional<VertexPath> find(std::size_t exact, std::size_t min_len) {
        const std::size_t n = adj_.order();
        exact_ = exact;
        min_len_ = min_len;
        if (exact && exact > n) return std::nullopt;
        for (Vertex v0 = 0; v0 < n; ++v0) {
            anchor_ = v0;
            Bitset forbidden(n);
            for (Vertex u = 0; u <= v0; ++u) forbidden.set(u);
            const Bitset& nv0 = adj_.row(v0);
            for (std::size_t v1 = nv0.next(v0 + 1); v1 < n; v1 = nv0.next(v1 + 1)) {
                path_.assign({v0, static_cast<Vertex>(v1)});
                Bitset f = forbidden;
                f.set(v1);
                if (extend(f)) return path_;
            }
        }
        return std::nullopt;
    }

private:
    // forbidden = vertices <= anchor, the path, and N(path[1..len-2]).
    bool extend(const Bitset& forbidden) {
        const Vertex last = path_.back();
        Bitset cand = adj_.row(last);
        cand.subtract(forbidden);
        if (cand.none()) return false;
        const Bitset& n0 = adj_.row(anchor_);
        const std::size_t pos = path_.size();
        const Bitset child = forbidden | adj_.row(last);
        for (std::size_t w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
            if (n0.test(w)) {
                // Closing vertex; v1 < w keeps one orientation per cycle.
                const std::size_t len = pos + 1;
                if (pos >= 2 && w > path_[1] && (exact_ ? len == exact_ : len >= min_len_)) {
                    path_.push_back(static_cast<Vertex>(w));
                    return true;
                }
                continue;
            }
            if (exact_ && pos + 1 >= exact_) continue;
            path_.push_back(static_cast<Vertex>(w));
            if (extend(child)) return true;
            path_.pop_back();
        }
        return false;
    }

    AdjacencyMatrix adj_;
    VertexPath path_;
    Vertex anchor_ = 0;
    std::size_t exact_ = 0;
    std::size_t min_len_ = 0;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Paths and cycles

/// Lexicographically least induced path on exactly t vertices.
inline std::optional<VertexPath> find_induced_path(const Graph& g, std::size_t t) {
    if (t == 0) throw PreconditionError("induced path length must be at least 1");
    detail::InducedPathSearch search(g);
    return search.find(t);
}

inline bool has_induced_path(const Graph& g, std::size_t t) { return find_induced_path(g, t).has_value(); }

/// Induced path on classes.size() vertices whose i-th vertex belongs to classes[i].
inline std::optional<VertexPath> find_typed_induced_path(const Graph& g, const std::vector<Bitset>& classes) {
    if (classes.empty()) throw PreconditionError("typed path needs at least one class");
    for (const auto& c : classes)
        if (c.size() != g.order()) throw PreconditionError("class bitset does not match graph order");
    detail::InducedPathSearch search(g);
    return search.find(classes.size(), classes);
}

/// Calls `visit` on every induced path starting in `starts` (every vertex when
/// empty), in DFS order. Returning false from `visit` prunes that branch.
inline void for_each_induced_path(const Graph& g, const std::function<bool(const VertexPath&)>& visit,
                                  std::optional<Bitset> starts = std::nullopt) {
    detail::InducedPathSearch search(g);
    Bitset s(g.order());
    if (starts) s = *starts;
    else s.fill();
    search.for_each(s, visit);
}

/// Witness lists the cycle's vertices in order, starting at its least vertex.
inline std::optional<VertexPath> find_induced_cycle(const Graph& g, std::size_t s) {
    if (s < 3) throw PreconditionError("induced cycle length must be at least 3");
    detail::InducedCycleSearch search(g);
    return search.find(s, 0);
}

inline bool has_induced_cycle(const Graph& g, std::size_t s) { return find_induced_cycle(g, s).has_value(); }

/// Any induced cycle on at least `min_len` vertices.
inline std::optional<VertexPath> find_long_induced_cycle(const Graph& g, std::size_t min_len) {
    detail::InducedCycleSearch search(g);
    return search.find(0, std::max<std::size_t>(min_len, 3));
}

/// Length of a shortest cycle; nullopt for forests (infinite girth).
inline std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
        dist[root] = 0;
        parent[root] = root;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbours(u)) {
                if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Endpoint-constrained paths

enum class EndpointMode { BothEnds, OneEnd };

struct ConstrainedPathResult {
    std::size_t max_vertices = 0; // capped at bound + 1
    VertexPath witness;
};

/// Largest induced path whose endpoints (both, or at least one) lie in `endpoints_in`.
/// The search stops as soon as a path longer than `bound` turns up.
inline ConstrainedPathResult constrained_induced_paths(const Graph& g, std::span<const Vertex> endpoints_in,
                                                       EndpointMode mode, std::size_t bound) {
    if (bound < 1) throw PreconditionError("bound must be at least 1");
    Bitset anchors(g.order());
    for (Vertex v : endpoints_in) {
        g.require_vertex(v);
        anchors.set(v);
    }
    ConstrainedPathResult result;
    bool stop = false;
    detail::InducedPathSearch search(g);
    search.for_each(
        anchors,
        [&](const VertexPath& p) {
            if ((mode == EndpointMode::OneEnd || anchors.test(p.back())) && p.size() > result.max_vertices) {
                result.max_vertices = p.size();
                result.witness = p;
                if (p.size() > bound) {
                    stop = true;
                    return false;
                }
            }
            return true;
        },
        &stop);
    return result;
}

/// Two vertex-disjoint induced paths on len_a and len_b vertices, each with an
/// endvertex in `anchors`, with no edge between them (an induced P_a + P_b).
inline std::optional<std::pair<VertexPath, VertexPath>>
find_anchored_path_pair(const Graph& g, std::span<const Vertex> anchors, std::size_t len_a, std::size_t len_b) {
    if (len_a == 0 || len_b == 0) throw PreconditionError("path lengths must be at least 1");
    Bitset starts(g.order());
    for (Vertex v : anchors) {
        g.require_vertex(v);
        starts.set(v);
    }
    const AdjacencyMatrix adj(g);
    struct Entry {
        VertexPath path;
        Bitset vertices;
        Bitset closed; // vertices plus their neighbours
    };
    auto collect = [&](std::size_t len) {
        std::vector<Entry> out;
        for_each_induced_path(
            g,
            [&](const VertexPath& p) {
                if (p.size() < len) return true;
                Entry e{p, Bitset(g.order()), Bitset(g.order())};
                for (Vertex v : p) {
                    e.vertices.set(v);
                    e.closed.set(v);
                    e.closed |= adj.row(v);
                }
                out.push_back(std::move(e));
                return false;
            },
            starts);
        return out;
    };
    const auto as = collect(len_a);
    const auto bs = len_b == len_a ? as : collect(len_b);
    for (const auto& a : as)
        for (const auto& b : bs)
            if (!b.vertices.intersects(a.closed)) return std::make_pair(a.path, b.path);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bipartiteness and chordal bipartite graphs

/// Shortest odd cycle when g is not bipartite (such a cycle is always induced).
inline std::optional<VertexPath> find_odd_cycle(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    bool bipartite = true;
    for (Vertex r = 0; r < g.order() && bipartite; ++r) {
        if (side[r] != -1) continue;
        side[r] = 0;
        std::deque<Vertex> q{r};
        while (!q.empty() && bipartite) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push_back(w);
                } else if (side[w] == side[u]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }
    if (bipartite) return std::nullopt;
    for (std::size_t s = 3; s <= g.order(); s += 2)
        if (auto c = find_induced_cycle(g, s)) return c;
    return std::nullopt; // unreachable for a non-bipartite graph
}

struct ChordalBipartiteResult {
    bool holds = false;
    VertexPath violating_cycle; // odd cycle or induced cycle on >= 6 vertices
};

inline ChordalBipartiteResult is_chordal_bipartite(const Graph& g) {
    if (auto odd = find_odd_cycle(g)) return {false, *odd};
    if (auto longc = find_long_induced_cycle(g, 6)) return {false, *longc};
    return {true, {}};
}

// ---------------------------------------------------------------------------
// Small induced patterns

inline constexpr std::size_t kMaxPatternOrder = 16;

/// Embedding f with f[i] the image of pattern vertex i, such that the image
/// set induces a copy of `pattern`. Least in the order f[0], f[1], ...
inline std::optional<VertexPath> find_induced_embedding(const Graph& g, const Graph& pattern) {
    const std::size_t p = pattern.order();
    if (p > kMaxPatternOrder)
        throw GuardError("pattern-too-large: " + std::to_string(p) + " vertices (limit " +
                         std::to_string(kMaxPatternOrder) + ")");
    if (p == 0) return VertexPath{};
    if (p > g.order()) return std::nullopt;
    const AdjacencyMatrix adj(g);
    VertexPath f(p);
    Bitset all(g.order());
    all.fill();

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == p) return true;
        Bitset cand = all;
        for (std::size_t j = 0; j < i; ++j) {
            if (pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) cand &= adj.row(f[j]);
            else cand.subtract(adj.row(f[j]));
            cand.reset(f[j]);
        }
        const std::size_t need = pattern.degree(static_cast<Vertex>(i));
        for (std::size_t v = cand.first(); v < cand.size(); v = cand.next(v + 1)) {
            if (g.degree(static_cast<Vertex>(v)) < need) continue;
            f[i] = static_cast<Vertex>(v);
            if (place(i + 1)) return true;
        }
        return false;
    };
    if (place(0)) return f;
    return std::nullopt;
}

inline bool contains_induced(const Graph& g, const Graph& pattern) {
    return find_induced_embedding(g, pattern).has_value();
}

// ---------------------------------------------------------------------------
// Freeness specifications

struct PatternDescriptor {
    enum class Kind { PathOn, CycleOn, CliqueOn, Named };
    Kind kind = Kind::PathOn;
    std::size_t size = 1;
    Graph graph;      // Named only
    std::string name; // Named only

    static PatternDescriptor path_on(std::size_t t) {
        if (t < 1) throw PreconditionError("PathOn needs t >= 1");
        return {Kind::PathOn, t, {}, {}};
    }
    static PatternDescriptor cycle_on(std::size_t s) {
        if (s < 3) throw PreconditionError("CycleOn needs s >= 3");
        return {Kind::CycleOn, s, {}, {}};
    }
    static PatternDescriptor clique_on(std::size_t r) {
        if (r < 1) throw PreconditionError("CliqueOn needs r >= 1");
        return {Kind::CliqueOn, r, {}, {}};
    }
    static PatternDescriptor named(std::string name, Graph g) {
        if (g.order() > kMaxPatternOrder) throw GuardError("pattern-too-large: " + name);
        const std::size_t n = g.order();
        return {Kind::Named, n, std::move(g), std::move(name)};
    }

    std::string label() const {
        switch (kind) {
        case Kind::PathOn: return "P" + std::to_string(size);
        case Kind::CycleOn: return "C" + std::to_string(size);
        case Kind::CliqueOn: return "K" + std::to_string(size);
        case Kind::Named: return name;
        }
        return name;
    }
};

using FreenessSpec = std::vector<PatternDescriptor>;

/// Parses "P22", "C3", "K4", "gem", "wheel" and disjoint sums such as "P8+P1" or "2P7".
inline PatternDescriptor parse_pattern(const std::string& token) {
    if (token == "gem") return PatternDescriptor::named("gem", gem_graph());
    if (token == "wheel") return PatternDescriptor::named("wheel", wheel5_graph());
    auto parse_term = [&](const std::string& term, std::size_t& mult, char& kind, std::size_t& n) {
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        mult = i ? std::stoul(term.substr(0, i)) : 1;
        if (i >= term.size() || (term[i] != 'P' && term[i] != 'C' && term[i] != 'K'))
            throw ParseError("bad pattern '" + token + "'");
        kind = term[i];
        const std::string digits = term.substr(i + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad pattern '" + token + "'");
        n = std::stoul(digits);
        if (mult == 0 || n == 0 || (kind == 'C' && n < 3)) throw ParseError("bad pattern '" + token + "'");
    };
    std::vector<std::string> terms;
    for (std::size_t start = 0;;) {
        auto plus = token.find('+', start);
        terms.push_back(token.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (terms.size() == 1) {
        std::size_t mult = 0, n = 0;
        char kind = 0;
        parse_term(terms[0], mult, kind, n);
        if (mult == 1) {
            if (kind == 'P') return PatternDescriptor::path_on(n);
            if (kind == 'C') return PatternDescriptor::cycle_on(n);
            return PatternDescriptor::clique_on(n);
        }
    }
    Graph g;
    for (const auto& term : terms) {
        std::size_t mult = 0, n = 0;
        char kind = 0;
        parse_term(term, mult, kind, n);
        if (n > kMaxPatternOrder) throw GuardError("pattern-too-large: " + token);
        const Graph part = kind == 'P' ? path_graph(n) : kind == 'C' ? cycle_graph(n) : complete_graph(n);
        for (std::size_t i = 0; i < mult; ++i) {
            g = disjoint_union(g, part);
            if (g.order() > kMaxPatternOrder) throw GuardError("pattern-too-large: " + token);
        }
    }
    return PatternDescriptor::named(token, std::move(g));
}

inline FreenessSpec parse_freeness(const std::string& csv) {
    FreenessSpec spec;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) spec.push_back(parse_pattern(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return spec;
}

/// Witness for `d` in g, if any.
inline std::optional<VertexPath> find_pattern(const Graph& g, const PatternDescriptor& d) {
    switch (d.kind) {
    case PatternDescriptor::Kind::PathOn: return find_induced_path(g, d.size);
    case PatternDescriptor::Kind::CycleOn: return find_induced_cycle(g, d.size);
    case PatternDescriptor::Kind::CliqueOn: return find_induced_embedding(g, complete_graph(d.size));
    case PatternDescriptor::Kind::Named: return find_induced_embedding(g, d.graph);
    }
    return std::nullopt;
}

/// One record per forbidden pattern: pass when g is free of it, fail with the witness otherwise.
inline std::vector<ClaimRecord> check_freeness(const Graph& g, const FreenessSpec& spec,
                                               const std::string& citation = {}) {
    std::vector<ClaimRecord> out;
    for (const auto& d : spec) {
        out.push_back(timed([&] {
            ClaimRecord r;
            r.id = d.label() + "-free";
            r.citation = citation;
            if (auto w = find_pattern(g, d)) {
                r.status = ClaimStatus::Fail;
                r.detail = "induced " + d.label() + " found";
                r.witness = {{"pattern", d.label()}, {"vertices", *w}};
            } else {
                r.status = ClaimStatus::Pass;
            }
            return r;
        }));
    }
    return out;
}

/// Independent re-check that `w` induces the pattern `d` in g.
inline bool witness_induces(const Graph& g, const PatternDescriptor& d, const VertexPath& w) {
    std::vector<Vertex> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : w)
        if (!g.has_vertex(v)) return false;
    Graph expected;
    switch (d.kind) {
    case PatternDescriptor::Kind::PathOn: expected = path_graph(d.size); break;
    case PatternDescriptor::Kind::CycleOn: expected = cycle_graph(d.size); break;
    case PatternDescriptor::Kind::CliqueOn: expected = complete_graph(d.size); break;
    case PatternDescriptor::Kind::Named: expected = d.graph; break;
    }
    if (w.size() != expected.order()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.adjacent(w[i], w[j]) != expected.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                return false;
    return true;
}

} // namespace cspt
