#pragma once

// Deterministic builders for the reduction gadgets and the Mycielski family.
//
// Vertex numbering (all ids 0-based):
//
//   J_I          x_1..x_n first, then per clause j the component
//                a_{j,1} b_{j,1} a_{j,2} b_{j,2} a_{j,3} followed by its primed copy.
//   J_I'         J_I, then one c-vertex per subdivided a-x edge, clause by clause,
//                unprimed component before primed, h = 1..3.
//   J_I^k        J_I', then the pendants of each vertex in id order, one per
//                missing colour, colours ascending.
//   M_k          1-based numbering shifted down by one: M_3 is {0..4}, the shadow of
//                j at level i is j + |V(M_{i-1})| and the apex comes last.
//
// Landmark names follow the construction: "x3", "a2.1", "b'1.2", "c1.3", "t1", ...

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cspt/graph.hpp"
#include "cspt/graph_io.hpp"
#include "cspt/nae.hpp"

namespace cspt {

struct GadgetArtifact {
    std::string name;
    Graph graph;
    std::optional<ListAssignment> lists;
    std::optional<Precolouring> precolouring;
    std::string source;
    std::map<std::string, Vertex> landmarks;
    std::map<std::string, std::vector<Vertex>> groups;

    Vertex at(const std::string& landmark) const {
        auto it = landmarks.find(landmark);
        if (it == landmarks.end()) throw std::out_of_range("no landmark '" + landmark + "' in " + name);
        return it->second;
    }
    const std::vector<Vertex>& group(const std::string& g) const {
        static const std::vector<Vertex> none;
        auto it = groups.find(g);
        return it == groups.end() ? none : it->second;
    }

    Sidecar sidecar() const {
        Sidecar s = sidecar_of(graph);
        s.lists = lists;
        s.precolouring = precolouring;
        s.landmarks = landmarks;
        s.groups = groups;
        s.source = source;
        return s;
    }
};

namespace detail {

inline std::string clause_label(char kind, bool primed, std::size_t j, int h) {
    std::string s(1, kind);
    if (primed) s += '\'';
    return s + std::to_string(j) + "." + std::to_string(h);
}

inline void require_instance(const NaeInstance& inst) {
    if (!inst.valid()) throw PreconditionError("malformed NAE instance");
}

/// Lists of the clause-component vertices in path order; copy 0 is unprimed.
inline ColourMask component_list(int copy, int pos) {
    static const std::array<std::array<ColourMask, 5>, 2> lists{{
        {mask_of({2, 4}), mask_of({3, 4}), mask_of({2, 3, 4}), mask_of({3, 4}), mask_of({2, 3})},
        {mask_of({1, 4}), mask_of({3, 4}), mask_of({1, 3, 4}), mask_of({3, 4}), mask_of({1, 3})},
    }};
    return lists[copy][pos];
}

/// Rebuilds landmarks, groups and precolouring after vertices were dropped.
inline void remap_metadata(GadgetArtifact& art, const std::vector<std::optional<Vertex>>& to_new) {
    std::map<std::string, Vertex> landmarks;
    for (auto& [name, v] : art.landmarks)
        if (to_new[v]) landmarks.emplace(name, *to_new[v]);
    art.landmarks = std::move(landmarks);
    for (auto& [name, members] : art.groups) {
        std::vector<Vertex> kept;
        for (Vertex v : members)
            if (to_new[v]) kept.push_back(*to_new[v]);
        members = std::move(kept);
    }
    if (art.precolouring) {
        std::map<Vertex, int> kept;
        for (auto [v, c] : art.precolouring->assignment)
            if (to_new[v]) kept.emplace(*to_new[v], c);
        art.precolouring->assignment = std::move(kept);
    }
    if (art.lists) {
        std::vector<ColourMask> kept;
        for (Vertex v = 0; v < to_new.size(); ++v)
            if (to_new[v]) kept.push_back(art.lists->lists[v]);
        art.lists->lists = std::move(kept);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// List colouring gadgets

/// J_I with its 4-list assignment L.
inline GadgetArtifact build_JI(const NaeInstance& inst) {
    detail::require_instance(inst);
    GadgetArtifact art;
    art.name = "JI";
    art.source = to_nae_text(inst);
    Graph& g = art.graph;
    std::vector<ColourMask> lists;

    for (int i = 1; i <= inst.n; ++i) {
        Vertex x = g.add_vertex(VertexTag::x_type());
        lists.push_back(mask_of({1, 2}));
        art.landmarks.emplace("x" + std::to_string(i), x);
        art.groups["X"].push_back(x);
    }
    for (std::size_t j = 1; j <= inst.m(); ++j) {
        const Clause& clause = inst.clauses[j - 1];
        for (int copy = 0; copy < 2; ++copy) {
            const bool primed = copy == 1;
            std::array<Vertex, 5> comp{};
            for (int pos = 0; pos < 5; ++pos) {
                const bool is_a = pos % 2 == 0;
                comp[pos] = g.add_vertex(is_a ? VertexTag::a_type() : VertexTag::b_type());
                lists.push_back(detail::component_list(copy, pos));
                const int h = pos / 2 + 1;
                art.landmarks.emplace(detail::clause_label(is_a ? 'a' : 'b', primed, j, h), comp[pos]);
                art.groups[is_a ? "A" : "B"].push_back(comp[pos]);
                if (pos > 0) g.add_edge(comp[pos - 1], comp[pos]);
            }
            for (int h = 0; h < 3; ++h) g.add_edge(comp[2 * h], static_cast<Vertex>(clause[h] - 1));
        }
    }
    for (Vertex x : art.group("X"))
        for (Vertex b : art.group("B")) g.add_edge(x, b);
    art.lists = ListAssignment{4, std::move(lists)};
    return art;
}

/// J_I': every a-x edge of J_I subdivided by a c-vertex with list {1,2}.
inline GadgetArtifact build_JI_prime(const NaeInstance& inst) {
    GadgetArtifact art = build_JI(inst);
    art.name = "JI_prime";
    for (std::size_t j = 1; j <= inst.m(); ++j) {
        for (int copy = 0; copy < 2; ++copy) {
            for (int h = 1; h <= 3; ++h) {
                const Vertex a = art.at(detail::clause_label('a', copy == 1, j, h));
                const Vertex x = static_cast<Vertex>(inst.clauses[j - 1][h - 1] - 1);
                auto [g, c] = subdivide_edge(art.graph, Edge::of(a, x), VertexTag::c_type());
                art.graph = std::move(g);
                art.lists->lists.push_back(mask_of({1, 2}));
                art.landmarks.emplace(detail::clause_label('c', copy == 1, j, h), c);
                art.groups["C"].push_back(c);
            }
        }
    }
    return art;
}

/// J_I^k: each vertex u of J_I' receives k - |L'(u)| pendants precoloured with the
/// colours of {1..k} missing from L'(u). The result carries a precolouring, no lists.
inline GadgetArtifact build_JI_k(const NaeInstance& inst, int k) {
    if (k < 4 || k > kMaxColours) throw PreconditionError("build_JI_k needs 4 <= k");
    GadgetArtifact art = build_JI_prime(inst);
    art.name = "JI_k";
    const ListAssignment lists = *art.lists;
    art.lists.reset();
    Precolouring pre{k, {}};
    const std::size_t base = art.graph.order();
    for (Vertex u = 0; u < base; ++u) {
        const ColourMask missing = full_mask(k) & ~lists.lists[u];
        for (int c : colours_in(missing)) {
            const Vertex w = art.graph.add_vertex(VertexTag::pendant_of(u));
            art.graph.add_edge(u, w);
            pre.assignment.emplace(w, c);
            art.groups["W"].push_back(w);
        }
    }
    art.precolouring = std::move(pre);
    art.source = to_nae_text(inst) + "k " + std::to_string(k) + "\n";
    return art;
}

/// Precolouring-extension gadget on J_I: five precoloured pendants per clause
/// component force L on the a-vertices; c1, c2 (on every x) and y1, y2 (on
/// every b) force {1,2} and {3,4}.
inline GadgetArtifact build_theorem5_gadget(const NaeInstance& inst) {
    GadgetArtifact art = build_JI(inst);
    art.name = "theorem5";
    art.lists.reset();
    Precolouring pre{4, {}};
    Graph& g = art.graph;
    auto pendant = [&](Vertex owner, int colour, const std::string& label) {
        const Vertex w = g.add_vertex(VertexTag::pendant_of(owner));
        g.add_edge(owner, w);
        pre.assignment.emplace(w, colour);
        art.landmarks.emplace(label, w);
        art.groups["W"].push_back(w);
    };
    for (std::size_t j = 1; j <= inst.m(); ++j) {
        for (int copy = 0; copy < 2; ++copy) {
            const bool primed = copy == 1;
            const std::string mark = primed ? "'" : "";
            const std::string js = std::to_string(j);
            pendant(art.at(detail::clause_label('a', primed, j, 1)), 3, "s" + mark + js);
            pendant(art.at(detail::clause_label('a', primed, j, 3)), 4, "t" + mark + js);
            for (int h = 1; h <= 3; ++h)
                pendant(art.at(detail::clause_label('a', primed, j, h)), primed ? 2 : 1,
                        detail::clause_label('u', primed, j, h));
        }
    }
    auto hub = [&](const std::string& label, int colour, const std::vector<Vertex>& targets) {
        const Vertex w = g.add_vertex();
        for (Vertex t : targets) g.add_edge(w, t);
        pre.assignment.emplace(w, colour);
        art.landmarks.emplace(label, w);
        art.groups["W"].push_back(w);
    };
    const std::vector<Vertex> xs = art.group("X");
    const std::vector<Vertex> bs = art.group("B");
    hub("c1", 3, xs);
    hub("c2", 4, xs);
    hub("y1", 1, bs);
    hub("y2", 2, bs);
    art.precolouring = std::move(pre);
    return art;
}

// ---------------------------------------------------------------------------
// Mycielski family

inline constexpr int kMaxMycielski = 8;

/// |V(M_k)| = 3 * 2^(k-2) - 1.
inline std::size_t mycielski_order(int k) {
    if (k < 2) throw PreconditionError("mycielski order needs k >= 2");
    return 3 * (std::size_t{1} << (k - 2)) - 1;
}

namespace detail {

/// Edge list of M_5 in 1-based numbering, as drawn vertex by vertex.
inline const std::vector<std::pair<int, int>>& reference_m5_edges() {
    static const std::vector<std::pair<int, int>> edges{
        {5, 15},  {1, 2},   {3, 2},   {4, 1},   {5, 4},   {6, 2},   {7, 1},   {7, 3},   {8, 2},   {8, 5},
        {9, 1},   {9, 5},   {10, 4},  {10, 3},  {11, 6},  {11, 7},  {11, 8},  {11, 10}, {12, 2},  {3, 13},
        {4, 12},  {5, 14},  {6, 13},  {6, 15},  {7, 12},  {7, 14},  {8, 13},  {8, 16},  {9, 12},  {9, 16},
        {10, 15}, {10, 14}, {11, 17}, {11, 18}, {11, 19}, {11, 20}, {11, 21}, {1, 13},  {14, 2},  {15, 1},
        {16, 4},  {16, 3},  {17, 2},  {17, 4},  {18, 1},  {18, 3},  {19, 2},  {19, 5},  {20, 1},  {20, 5},
        {21, 4},  {21, 3},  {22, 6},  {22, 7},  {22, 8},  {22, 9},  {22, 10}, {23, 12}, {23, 13}, {23, 14},
        {23, 15}, {23, 16}, {23, 17}, {23, 18}, {23, 19}, {23, 20}, {23, 22}, {3, 5},   {21, 23}, {4, 6},
        {9, 11},
    };
    return edges;
}

} // namespace detail

inline GadgetArtifact mycielski(int k) {
    if (k < 2 || k > kMaxMycielski)
        throw GuardError("mycielski: k = " + std::to_string(k) + " outside 2.." + std::to_string(kMaxMycielski));
    GadgetArtifact art;
    art.name = "mycielski";
    art.source = "k " + std::to_string(k) + "\n";
    Graph g(2);
    g.set_tag(0, VertexTag::mycielski_level(2));
    g.set_tag(1, VertexTag::mycielski_level(2));
    g.add_edge(0, 1);
    for (int level = 3; level <= k; ++level) {
        const Graph prev = g;
        const auto shift = static_cast<Vertex>(prev.order());
        for (Vertex v = 0; v < shift; ++v) g.add_vertex(VertexTag::mycielski_level(level));
        const Vertex apex = g.add_vertex(VertexTag::mycielski_level(level));
        for (Vertex v = 0; v < shift; ++v) {
            for (Vertex w : prev.neighbours(v)) g.add_edge(v + shift, w);
            g.add_edge(v + shift, apex);
        }
    }
    if (k >= 5) {
        for (auto [u, v] : detail::reference_m5_edges())
            if (!g.adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
                throw std::logic_error("mycielski: M_5 numbering mismatch at {" + std::to_string(u) + "," +
                                       std::to_string(v) + "}");
        const std::vector<Vertex> first = [] {
            std::vector<Vertex> v(23);
            for (Vertex i = 0; i < 23; ++i) v[i] = i;
            return v;
        }();
        if (induced_subgraph(g, first).size() != detail::reference_m5_edges().size())
            throw std::logic_error("mycielski: M_5 has unexpected extra edges");
    }
    for (Vertex v = 0; v < g.order(); ++v) art.landmarks.emplace("v" + std::to_string(v + 1), v);
    art.landmarks.emplace("apex", static_cast<Vertex>(g.order() - 1));
    art.graph = std::move(g);
    return art;
}

/// M' = M_5 minus {17,23}, with T = {t1,t2,t3,t4} = {2,4,11,23} (1-based).
inline GadgetArtifact m_prime() {
    GadgetArtifact art = mycielski(5);
    art.name = "m_prime";
    art.source.clear();
    art.landmarks.erase("apex");
    art.graph.remove_edge(art.at("v17"), art.at("v23"));
    const std::array<int, 4> t_ids{2, 4, 11, 23};
    for (int i = 0; i < 4; ++i) {
        const Vertex t = art.at("v" + std::to_string(t_ids[i]));
        art.landmarks.emplace("t" + std::to_string(i + 1), t);
        art.groups["T"].push_back(t);
        art.graph.set_tag(t, VertexTag::t_index(static_cast<std::uint32_t>(i + 1)));
    }
    return art;
}

// ---------------------------------------------------------------------------
// Triangle-free 4-colouring gadget

/// J*_I built from J_I^4: drop the pendants of B and C, attach a copy of M',
/// join each remaining pendant v with c(v) = i to every t_j with j != i, and join
/// B to t1, t2 and C to t3, t4. The pendants of A and X form the group S.
inline GadgetArtifact build_JI_star_tri(const NaeInstance& inst) {
    GadgetArtifact base = build_JI_k(inst, 4);
    const Graph& g0 = base.graph;
    std::vector<bool> in_bc(g0.order(), false);
    for (Vertex v : base.group("B")) in_bc[v] = true;
    for (Vertex v : base.group("C")) in_bc[v] = true;

    std::vector<std::optional<Vertex>> to_new(g0.order());
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g0.order(); ++v) {
        const VertexTag& t = g0.tag(v);
        if (t.kind == TagKind::PendantOf && in_bc[t.value]) continue;
        to_new[v] = static_cast<Vertex>(keep.size());
        keep.push_back(v);
    }
    GadgetArtifact art = base;
    art.name = "JI_star_tri";
    art.graph = induced_subgraph(g0, keep);
    detail::remap_metadata(art, to_new);
    const Precolouring pre = *art.precolouring;
    art.precolouring.reset();
    art.groups["S"] = art.groups["W"];
    art.groups.erase("W");

    const GadgetArtifact mp = m_prime();
    const auto offset = static_cast<Vertex>(art.graph.order());
    art.graph = disjoint_union(art.graph, mp.graph);
    for (const auto& [name, v] : mp.landmarks) art.landmarks.emplace(name.front() == 't' ? name : "M'" + name, v + offset);
    for (Vertex v = 0; v < mp.graph.order(); ++v) art.groups["Mprime"].push_back(v + offset);
    std::array<Vertex, 4> t{};
    for (int i = 0; i < 4; ++i) {
        t[i] = art.at("t" + std::to_string(i + 1));
        art.groups["T"].push_back(t[i]);
    }
    for (Vertex v : art.group("S")) {
        const int colour = pre.assignment.at(v);
        for (int j = 1; j <= 4; ++j)
            if (j != colour) art.graph.add_edge(v, t[j - 1]);
    }
    for (Vertex b : art.group("B")) {
        art.graph.add_edge(b, t[0]);
        art.graph.add_edge(b, t[1]);
    }
    for (Vertex c : art.group("C")) {
        art.graph.add_edge(c, t[2]);
        art.graph.add_edge(c, t[3]);
    }
    art.source = to_nae_text(inst);
    return art;
}

// ---------------------------------------------------------------------------
// F' gadgets and G_I^k

/// F' = (M_{k+1} - pq) plus a pendant q* on q, where pq is the least edge of M_{k+1}.
/// Every k-colouring of F' gives p and q* different colours.
inline GadgetArtifact f_prime_from_mycielski(int k) {
    if (k < 3 || k > 6) throw GuardError("f_prime_from_mycielski: k = " + std::to_string(k) + " outside 3..6");
    GadgetArtifact art = mycielski(k + 1);
    art.name = "f_prime";
    art.source = "k " + std::to_string(k) + "\n";
    const Edge pq = art.graph.edges().front();
    art.graph.remove_edge(pq.first, pq.second);
    const Vertex qstar = art.graph.add_vertex(VertexTag::pendant_of(pq.second));
    art.graph.add_edge(pq.second, qstar);
    art.landmarks.erase("apex");
    art.landmarks.emplace("p", pq.first);
    art.landmarks.emplace("q", pq.second);
    art.landmarks.emplace("qstar", qstar);
    return art;
}

/// Replaces edge uv of g by a copy of F' whose p and q* are identified with u and v.
/// Returns the ids given to the copy's vertices (u and v included).
inline std::vector<Vertex> fprime_identify(Graph& g, Vertex u, Vertex v, const GadgetArtifact& fprime) {
    g.remove_edge(u, v);
    const Vertex p = fprime.at("p");
    const Vertex qstar = fprime.at("qstar");
    std::vector<Vertex> image(fprime.graph.order());
    for (Vertex w = 0; w < fprime.graph.order(); ++w) {
        if (w == p) image[w] = u;
        else if (w == qstar) image[w] = v;
        else image[w] = g.add_vertex();
    }
    for (const Edge& e : fprime.graph.edges()) g.add_edge(image[e.first], image[e.second]);
    return image;
}

inline constexpr std::size_t kMaxGadgetVertices = 250000;

/// G_I^k: J_I^k plus a clique r_1..r_k, r_i joined to each pendant w with
/// c(w) != i, and every clique edge and r-pendant edge replaced by F'.
/// For k = 4 the base is J_I^4 exactly.
inline GadgetArtifact build_GI_k(const NaeInstance& inst, int k) {
    if (k < 4 || k > 6) throw GuardError("build_GI_k: k = " + std::to_string(k) + " outside 4..6");
    GadgetArtifact art = build_JI_k(inst, k);
    const GadgetArtifact fp = f_prime_from_mycielski(k);
    const std::size_t edges_to_replace =
        static_cast<std::size_t>(k) * (k - 1) / 2 + art.precolouring->assignment.size() * (k - 1);
    const std::size_t estimate = art.graph.order() + k + edges_to_replace * (fp.graph.order() - 2);
    if (estimate > kMaxGadgetVertices)
        throw GuardError("build_GI_k: about " + std::to_string(estimate) + " vertices exceeds " +
                         std::to_string(kMaxGadgetVertices));
    art.name = "GI_k";
    const Precolouring pre = *art.precolouring;
    art.precolouring.reset();
    Graph& g = art.graph;
    std::vector<Vertex> r(k);
    for (int i = 0; i < k; ++i) {
        r[i] = g.add_vertex();
        art.landmarks.emplace("r" + std::to_string(i + 1), r[i]);
        art.groups["R"].push_back(r[i]);
    }
    std::vector<std::pair<Vertex, Vertex>> replace;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) replace.emplace_back(r[i], r[j]);
    for (auto [w, c] : pre.assignment)
        for (int i = 1; i <= k; ++i)
            if (c != i) replace.emplace_back(r[i - 1], w);
    for (auto [u, v] : replace) {
        g.add_edge(u, v);
        fprime_identify(g, u, v, fp);
    }
    art.source = to_nae_text(inst) + "k " + std::to_string(k) + "\n";
    return art;
}

/// Upper bound k + (k+1)(3 * 2^(k-1) - 1) on the path length t_k.
inline std::uint64_t remark1_bound(int k) {
    if (k < 5 || k > 60) throw PreconditionError("remark1_bound needs 5 <= k <= 60");
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    return kk + (kk + 1) * (3 * (std::uint64_t{1} << (k - 1)) - 1);
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& instance_gadget_names() {
    static const std::vector<std::string> names{"JI", "JI_prime", "JI_k", "theorem5", "JI_star_tri", "GI_k"};
    return names;
}

/// Instance-driven builders by name; `k` is used by JI_k and GI_k.
inline GadgetArtifact build_gadget(const std::string& name, const NaeInstance& inst, int k = 4) {
    if (name == "JI") return build_JI(inst);
    if (name == "JI_prime") return build_JI_prime(inst);
    if (name == "JI_k") return build_JI_k(inst, k);
    if (name == "theorem5") return build_theorem5_gadget(inst);
    if (name == "JI_star_tri") return build_JI_star_tri(inst);
    if (name == "GI_k") return build_GI_k(inst, k);
    throw PreconditionError("unknown gadget '" + name + "'");
}

/// Colour budget the gadget is decided against.
inline int gadget_colours(const GadgetArtifact& art) {
    if (art.lists) return art.lists->k;
    if (art.precolouring) return art.precolouring->k;
    if (art.name == "GI_k") return static_cast<int>(art.group("R").size());
    return 4;
}

} // namespace cspt
