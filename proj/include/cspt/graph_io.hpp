#pragma once

// gl1 graph files and their structured-text sidecars.
//
//   g <n> <m>
//   e <u> <v>        (m lines, u < v, sorted, 0-based)
//
// The sidecar is JSON holding per-vertex tags, an optional list assignment,
// an optional precolouring and named landmarks. Both writers are canonical:
// parsing a written file and writing it again reproduces it byte for byte.

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cspt/graph.hpp"

namespace cspt {

inline void write_gl1(std::ostream& os, const Graph& g) {
    os << "g " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) os << "e " << e.first << ' ' << e.second << '\n';
}

inline std::string to_gl1(const Graph& g) {
    std::ostringstream os;
    write_gl1(os, g);
    return os.str();
}

/// Tags are not part of gl1; every vertex comes back Plain.
inline Graph read_gl1(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) { throw ParseError("gl1 line " + std::to_string(lineno) + ": " + why); };
    std::optional<Graph> g;
    std::size_t expected_edges = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "g") {
            if (g) fail("duplicate header");
            long long n = -1, m = -1;
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header");
            g.emplace(static_cast<std::size_t>(n));
            expected_edges = static_cast<std::size_t>(m);
        } else if (kind == "e") {
            if (!g) fail("edge before header");
            long long u = -1, v = -1;
            if (!(ls >> u >> v) || u < 0 || v < 0) fail("malformed edge");
            if (static_cast<std::size_t>(u) >= g->order() || static_cast<std::size_t>(v) >= g->order())
                fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            if (!g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail("parallel edge");
        } else {
            fail("unknown record '" + kind + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing tokens");
    }
    if (!g) throw ParseError("gl1: missing header");
    if (g->size() != expected_edges)
        throw ParseError("gl1: header announces " + std::to_string(expected_edges) + " edges, found " +
                         std::to_string(g->size()));
    return *g;
}

inline Graph parse_gl1(const std::string& text) {
    std::istringstream is(text);
    return read_gl1(is);
}

struct Sidecar {
    std::vector<VertexTag> tags;
    std::optional<ListAssignment> lists;
    std::optional<Precolouring> precolouring;
    std::map<std::string, Vertex> landmarks;
    std::map<std::string, std::vector<Vertex>> groups;
    std::string source;

    friend bool operator==(const Sidecar&, const Sidecar&) = default;
};

inline Sidecar sidecar_of(const Graph& g) {
    Sidecar s;
    s.tags.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) s.tags.push_back(g.tag(v));
    return s;
}

inline void apply_tags(Graph& g, const Sidecar& s) {
    if (s.tags.size() != g.order()) throw ParseError("sidecar tag count does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v) g.set_tag(v, s.tags[v]);
}

inline nlohmann::json sidecar_to_json(const Sidecar& s) {
    using nlohmann::json;
    json j = json::object();
    json tags = json::array();
    for (const auto& t : s.tags) tags.push_back(to_string(t));
    j["tags"] = std::move(tags);
    if (s.lists) {
        json lists = json::array();
        for (ColourMask m : s.lists->lists) lists.push_back(colours_in(m));
        j["lists"] = {{"k", s.lists->k}, {"lists", std::move(lists)}};
    }
    if (s.precolouring) {
        json assignment = json::array();
        for (auto [v, c] : s.precolouring->assignment) assignment.push_back({v, c});
        j["precolouring"] = {{"k", s.precolouring->k}, {"assignment", std::move(assignment)}};
    }
    if (!s.landmarks.empty()) j["landmarks"] = s.landmarks;
    if (!s.groups.empty()) j["groups"] = s.groups;
    if (!s.source.empty()) j["source"] = s.source;
    return j;
}

inline std::string write_sidecar(const Sidecar& s) { return sidecar_to_json(s).dump(1) + "\n"; }

inline Sidecar sidecar_from_json(const nlohmann::json& j) {
    Sidecar s;
    try {
        for (const auto& t : j.at("tags")) s.tags.push_back(parse_tag(t.get<std::string>()));
        if (j.contains("lists")) {
            ListAssignment l;
            l.k = j.at("lists").at("k").get<int>();
            if (l.k < 1 || l.k > kMaxColours) throw ParseError("sidecar: list k out of range");
            for (const auto& list : j.at("lists").at("lists")) {
                ColourMask m = 0;
                for (int c : list.get<std::vector<int>>()) {
                    if (c < 1 || c > l.k) throw ParseError("sidecar: list colour out of range");
                    m |= colour_bit(c);
                }
                l.lists.push_back(m);
            }
            s.lists = std::move(l);
        }
        if (j.contains("precolouring")) {
            Precolouring p;
            p.k = j.at("precolouring").at("k").get<int>();
            for (const auto& pair : j.at("precolouring").at("assignment")) {
                auto v = pair.at(0).get<Vertex>();
                auto c = pair.at(1).get<int>();
                if (!p.assignment.emplace(v, c).second) throw ParseError("sidecar: vertex precoloured twice");
            }
            s.precolouring = std::move(p);
        }
        if (j.contains("landmarks")) s.landmarks = j.at("landmarks").get<std::map<std::string, Vertex>>();
        if (j.contains("groups")) s.groups = j.at("groups").get<std::map<std::string, std::vector<Vertex>>>();
        if (j.contains("source")) s.source = j.at("source").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sidecar: ") + e.what());
    }
    return s;
}

inline Sidecar parse_sidecar(const std::string& text) {
    try {
        return sidecar_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("sidecar: ") + e.what());
    }
}

} // namespace cspt
