#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cspt/bitset.hpp"
#include "cspt/error.hpp"

namespace cspt {

using Vertex = std::uint32_t;

/// Unordered edge stored canonically with first < second.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    static Edge of(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class TagKind : std::uint8_t { Plain, AType, BType, CType, XType, PendantOf, TIndex, MycielskiLevel };

/// Semantic role of a vertex inside a gadget. Metadata only: graph algebra ignores it.
struct VertexTag {
    TagKind kind = TagKind::Plain;
    std::uint32_t value = 0; // referent vertex, T index or Mycielski level

    static VertexTag plain() { return {}; }
    static VertexTag a_type() { return {TagKind::AType, 0}; }
    static VertexTag b_type() { return {TagKind::BType, 0}; }
    static VertexTag c_type() { return {TagKind::CType, 0}; }
    static VertexTag x_type() { return {TagKind::XType, 0}; }
    static VertexTag pendant_of(Vertex u) { return {TagKind::PendantOf, u}; }
    static VertexTag t_index(std::uint32_t i) { return {TagKind::TIndex, i}; }
    static VertexTag mycielski_level(std::uint32_t level) { return {TagKind::MycielskiLevel, level}; }

    friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

inline std::string to_string(const VertexTag& tag) {
    switch (tag.kind) {
    case TagKind::Plain: return "Plain";
    case TagKind::AType: return "A";
    case TagKind::BType: return "B";
    case TagKind::CType: return "C";
    case TagKind::XType: return "X";
    case TagKind::PendantOf: return "PendantOf(" + std::to_string(tag.value) + ")";
    case TagKind::TIndex: return "T(" + std::to_string(tag.value) + ")";
    case TagKind::MycielskiLevel: return "Mycielski(" + std::to_string(tag.value) + ")";
    }
    return "Plain";
}

inline VertexTag parse_tag(const std::string& s) {
    if (s == "Plain") return VertexTag::plain();
    if (s == "A") return VertexTag::a_type();
    if (s == "B") return VertexTag::b_type();
    if (s == "C") return VertexTag::c_type();
    if (s == "X") return VertexTag::x_type();
    auto with_arg = [&](const std::string& prefix) -> std::optional<std::uint32_t> {
        if (s.size() <= prefix.size() + 2 || s.compare(0, prefix.size() + 1, prefix + "(") != 0 || s.back() != ')')
            return std::nullopt;
        const std::string digits = s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad tag argument: " + s);
        return static_cast<std::uint32_t>(std::stoul(digits));
    };
    if (auto v = with_arg("PendantOf")) return VertexTag::pendant_of(*v);
    if (auto v = with_arg("T")) return VertexTag::t_index(*v);
    if (auto v = with_arg("Mycielski")) return VertexTag::mycielski_level(*v);
    throw ParseError("unknown vertex tag: " + s);
}

/// Simple undirected graph on dense ids 0..order()-1 with one tag per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n), tags_(n) {}

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    Vertex add_vertex(VertexTag tag = VertexTag::plain()) {
        adj_.emplace_back();
        tags_.push_back(tag);
        return static_cast<Vertex>(adj_.size() - 1);
    }

    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v) {
        require_vertex(u);
        require_vertex(v);
        if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
        auto& nu = adj_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v) return false;
        nu.insert(it, v);
        auto& nv = adj_[v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
        return true;
    }

    void remove_edge(Vertex u, Vertex v) {
        if (!has_vertex(u) || !has_vertex(v) || !adjacent(u, v))
            throw GraphError("missing edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        auto& nu = adj_[u];
        nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
        auto& nv = adj_[v];
        nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
        --edge_count_;
    }

    bool has_vertex(Vertex v) const noexcept { return v < adj_.size(); }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        const auto& nu = adj_[u];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    const VertexTag& tag(Vertex v) const { return tags_[v]; }
    void set_tag(Vertex v, VertexTag t) {
        require_vertex(v);
        tags_[v] = t;
    }

    /// Sorted canonical edge list.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.push_back({u, v});
        return out;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out(order());
        for (Vertex v = 0; v < out.size(); ++v) out[v] = v;
        return out;
    }

    void require_vertex(Vertex v) const {
        if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<VertexTag> tags_;
    std::size_t edge_count_ = 0;
};

/// Dense adjacency rows for the search engines.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(const Graph& g) : rows_(g.order(), Bitset(g.order())) {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v : g.neighbours(u)) rows_[u].set(v);
    }
    std::size_t order() const noexcept { return rows_.size(); }
    const Bitset& row(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

private:
    std::vector<Bitset> rows_;
};

// ---------------------------------------------------------------------------
// Lists and precolourings

/// Colour sets over {1..k} packed as bits (bit c-1 is colour c).
using ColourMask = std::uint64_t;
inline constexpr int kMaxColours = 63;

inline ColourMask colour_bit(int c) { return ColourMask{1} << (c - 1); }
inline ColourMask full_mask(int k) { return k >= 64 ? ~ColourMask{0} : (ColourMask{1} << k) - 1; }

inline ColourMask mask_of(std::initializer_list<int> colours) {
    ColourMask m = 0;
    for (int c : colours) m |= colour_bit(c);
    return m;
}

inline std::vector<int> colours_in(ColourMask m) {
    std::vector<int> out;
    for (int c = 1; c <= 64 && m; ++c, m >>= 1)
        if (m & 1U) out.push_back(c);
    return out;
}

struct ListAssignment {
    int k = 0;
    std::vector<ColourMask> lists; // indexed by vertex

    static ListAssignment full(std::size_t n, int k) { return {k, std::vector<ColourMask>(n, full_mask(k))}; }

    ColourMask list(Vertex v) const { return lists.at(v); }

    /// Lists are subsets of {1..k}, non-empty, and cover exactly `n` vertices.
    bool valid_for(std::size_t n) const {
        if (k < 1 || k > kMaxColours || lists.size() != n) return false;
        return std::all_of(lists.begin(), lists.end(), [&](ColourMask m) { return m != 0 && (m & ~full_mask(k)) == 0; });
    }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

struct Precolouring {
    int k = 0;
    std::map<Vertex, int> assignment;

    friend bool operator==(const Precolouring&, const Precolouring&) = default;
};

/// Domain inside the graph, colours in range and proper on the precoloured set.
inline bool valid_precolouring(const Graph& g, const Precolouring& pre) {
    for (auto [v, c] : pre.assignment) {
        if (!g.has_vertex(v) || c < 1 || c > pre.k) return false;
        for (Vertex w : g.neighbours(v)) {
            auto it = pre.assignment.find(w);
            if (it != pre.assignment.end() && it->second == c) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Construction primitives. All are pure: the argument graph is not modified.

struct Extension {
    Graph graph;
    Vertex added;
};

/// Replaces edge {u,v} by the path u-w-v with a new vertex w.
inline Extension subdivide_edge(const Graph& g, Edge e, VertexTag tag = VertexTag::plain()) {
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || e.first == e.second || !g.adjacent(e.first, e.second))
        throw GraphError("subdivide_edge: missing edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    Graph out = g;
    out.remove_edge(e.first, e.second);
    Vertex w = out.add_vertex(tag);
    out.add_edge(e.first, w);
    out.add_edge(w, e.second);
    return {std::move(out), w};
}

inline Extension add_pendant(const Graph& g, Vertex u) {
    g.require_vertex(u);
    Graph out = g;
    Vertex w = out.add_vertex(VertexTag::pendant_of(u));
    out.add_edge(u, w);
    return {std::move(out), w};
}

namespace detail {

/// Re-express a tag after vertex renumbering; referents that vanish degrade to Plain.
inline VertexTag remap_tag(VertexTag t, const std::vector<std::optional<Vertex>>& to_new) {
    if (t.kind != TagKind::PendantOf) return t;
    if (t.value < to_new.size() && to_new[t.value]) return VertexTag::pendant_of(*to_new[t.value]);
    return VertexTag::plain();
}

} // namespace detail

/// Merges non-adjacent u and v. The survivor keeps id min(u,v) and its tag;
/// ids above max(u,v) shift down by one.
inline Graph identify_vertices(const Graph& g, Vertex u, Vertex v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw GraphError("identify_vertices: identical vertices");
    if (g.adjacent(u, v))
        throw GraphError("identify_vertices: {" + std::to_string(u) + "," + std::to_string(v) + "} is an edge");
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    std::vector<std::optional<Vertex>> to_new(g.order());
    for (Vertex w = 0; w < g.order(); ++w) to_new[w] = w == drop ? keep : (w < drop ? w : w - 1);

    Graph out(g.order() - 1);
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != drop) out.set_tag(*to_new[w], detail::remap_tag(g.tag(w), to_new));
    for (const Edge& e : g.edges()) out.add_edge(*to_new[e.first], *to_new[e.second]);
    return out;
}

/// g1 + g2; vertices of g2 are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph out = g1;
    const auto offset = static_cast<Vertex>(g1.order());
    for (Vertex v = 0; v < g2.order(); ++v) {
        VertexTag t = g2.tag(v);
        if (t.kind == TagKind::PendantOf) t.value += offset;
        out.add_vertex(t);
    }
    for (const Edge& e : g2.edges()) out.add_edge(e.first + offset, e.second + offset);
    return out;
}

/// Subgraph induced by `keep`; new ids follow the ascending order of the kept vertices.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::optional<Vertex>> to_new(g.order());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        g.require_vertex(sorted[i]);
        to_new[sorted[i]] = static_cast<Vertex>(i);
    }
    Graph out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out.set_tag(static_cast<Vertex>(i), detail::remap_tag(g.tag(sorted[i]), to_new));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (Vertex w : g.neighbours(sorted[i]))
            if (to_new[w] && *to_new[w] > i) out.add_edge(static_cast<Vertex>(i), *to_new[w]);
    return out;
}

/// G - U.
inline Graph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : drop) {
        g.require_vertex(v);
        gone[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out.set_tag(v, g.tag(v));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Named small graphs

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t t) {
    Graph g(t);
    for (Vertex v = 1; v < t; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle_graph(std::size_t s) {
    if (s < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g = path_graph(s);
    g.add_edge(0, static_cast<Vertex>(s - 1));
    return g;
}

inline Graph complete_graph(std::size_t r) {
    Graph g(r);
    for (Vertex u = 0; u < r; ++u)
        for (Vertex v = u + 1; v < r; ++v) g.add_edge(u, v);
    return g;
}

/// Complement of P1 + P4.
inline Graph gem_graph() { return complement(disjoint_union(path_graph(1), path_graph(4))); }

/// Complement of P1 + 2P2, the 5-vertex wheel.
inline Graph wheel5_graph() {
    return complement(disjoint_union(path_graph(1), disjoint_union(path_graph(2), path_graph(2))));
}

} // namespace cspt
