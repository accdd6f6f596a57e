#pragma once

// Text and JSON renderings. Exported vertex ids are one-based:
// id(i, j) = (i - 1) * s + j.

#include "chroma_oracle.hpp"
#include "coloring.hpp"
#include "lattice_canon.hpp"
#include "torus_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torchroma {

using Edge = std::pair<std::size_t, std::size_t>;

/// Edges with u <= v, one entry per copy of a parallel edge or loop, sorted.
inline std::vector<Edge> edge_list(const TorusGraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        bool half_loop = false;
        for (auto v : g.adjacency[u]) {
            if (v > u) {
                edges.emplace_back(u, v);
            } else if (v == u) {
                // Each loop shows up twice in its own row.
                if (half_loop) {
                    edges.emplace_back(u, u);
                }
                half_loop = !half_loop;
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::vector<Edge> edge_list(const SimpleGraph& g)
{
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (auto v : g.adjacency[u]) {
            if (v > u) {
                edges.emplace_back(u, v);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace detail {

inline std::string dot(const TorusParams& p, const std::vector<Edge>& edges)
{
    std::ostringstream out;
    out << "graph \"" << to_string(p) << "\" {\n";
    const auto n = static_cast<std::size_t>(p.order());
    for (std::size_t id = 0; id < n; ++id) {
        out << "  " << id + 1 << " [label=\"" << to_string(vertex_at(p, id)) << "\"];\n";
    }
    for (const auto& [u, v] : edges) {
        out << "  " << u + 1 << " -- " << v + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline nlohmann::json graph_json(const TorusParams& p, const std::vector<Edge>& edges)
{
    nlohmann::json j;
    j["r"] = p.r;
    j["s"] = p.s;
    j["t"] = p.t;
    auto arr = nlohmann::json::array();
    for (const auto& [u, v] : edges) {
        arr.push_back({u + 1, v + 1});
    }
    j["edges"] = std::move(arr);
    return j;
}

} // namespace detail

inline std::string to_dot(const TorusGraph& g)
{
    return detail::dot(g.params, edge_list(g));
}

inline std::string to_dot(const SimpleGraph& g)
{
    return detail::dot(g.params, edge_list(g));
}

/// DIMACS .col text; simple graphs only.
inline std::string to_dimacs(const SimpleGraph& g)
{
    const auto edges = edge_list(g);
    std::ostringstream out;
    out << "c " << to_string(g.params) << "\n";
    out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) {
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

inline std::string to_dimacs(const TorusGraph& g)
{
    if (!classify_edges(g).is_simple) {
        throw std::domain_error(to_string(g.params) + " is a multigraph; DIMACS export needs a simple graph");
    }
    return to_dimacs(underlying_simple_graph(g));
}

inline nlohmann::json to_json(const TorusGraph& g)
{
    return detail::graph_json(g.params, edge_list(g));
}

inline nlohmann::json to_json(const SimpleGraph& g)
{
    return detail::graph_json(g.params, edge_list(g));
}

inline nlohmann::json verdict_json(const TorusParams& p, const Classification& c)
{
    nlohmann::json j;
    j["r"] = p.r;
    j["s"] = p.s;
    j["t"] = p.t;
    if (c.has_loops()) {
        j["verdict"] = "loops";
        j["chi"] = nullptr;
    } else {
        j["verdict"] = "chromatic";
        j["chi"] = c.chi;
    }
    j["rule"] = c.rule;
    return j;
}

/// colors[i - 1][j - 1] is the color of (i, j).
inline nlohmann::json coloring_json(const Coloring& c)
{
    nlohmann::json j;
    j["r"] = c.params.r;
    j["s"] = c.params.s;
    j["t"] = c.params.t;
    j["k"] = c.k;
    j["strategy"] = c.strategy;
    auto columns = nlohmann::json::array();
    for (std::int64_t i = 1; i <= c.params.r; ++i) {
        auto column = nlohmann::json::array();
        for (std::int64_t jj = 1; jj <= c.params.s; ++jj) {
            column.push_back(c.color({i, jj}));
        }
        columns.push_back(std::move(column));
    }
    j["colors"] = std::move(columns);
    return j;
}

/// Grid drawn like the usual picture of T(r, s, t): column 1 on the left,
/// row s on top.
inline std::string render_grid(const Coloring& c)
{
    const auto width = std::to_string(c.k).size();
    std::ostringstream out;
    for (std::int64_t j = c.params.s; j >= 1; --j) {
        for (std::int64_t i = 1; i <= c.params.r; ++i) {
            const auto cell = std::to_string(c.color({i, j}));
            if (i > 1) {
                out << ' ';
            }
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json enumeration_json(const std::vector<TorusParams>& classes)
{
    auto arr = nlohmann::json::array();
    for (const auto& p : classes) {
        const auto len = normal_circuit_lengths(p);
        arr.push_back({{"r", p.r}, {"s", p.s}, {"t", p.t}, {"circuits", {len.a, len.b, len.c}}});
    }
    return arr;
}

} // namespace torchroma
