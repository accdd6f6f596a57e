#pragma once

#include "torus_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torchroma {

/// Vertex coloring of T(r, s, t). colors[vertex_id] lies in 1..k.
struct Coloring {
    TorusParams params;
    std::vector<int> colors;
    int k = 0;
    std::string strategy;

    int color(const Vertex& v) const { return colors.at(vertex_id(params, v)); }

    int colors_used() const
    {
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        int used = 0;
        for (int c : colors) {
            if (c >= 1 && c <= k && !seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                ++used;
            }
        }
        return used;
    }
};

/// Node and wall-clock limits for the exact solver.
struct SolveBudget {
    std::uint64_t node_limit = 500'000'000;
    double time_limit_seconds = 600.0;
};

class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_assignment(std::size_t n, const Coloring& c)
{
    if (c.colors.size() != n) {
        throw std::invalid_argument("coloring assigns " + std::to_string(c.colors.size()) + " of " +
                                    std::to_string(n) + " vertices");
    }
    const auto bad = std::find_if(c.colors.begin(), c.colors.end(), [&](int x) { return x < 1 || x > c.k; });
    if (bad != c.colors.end()) {
        throw std::invalid_argument("vertex " + std::to_string(bad - c.colors.begin()) +
                                    " has no color in 1.." + std::to_string(c.k));
    }
}

} // namespace detail

/// True iff no edge of g joins two vertices of the same color.
inline bool verify_coloring(const TorusGraph& g, const Coloring& c)
{
    detail::check_assignment(g.vertex_count(), c);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (auto v : g.adjacency[u]) {
            if (v == u) {
                throw std::domain_error(to_string(g.params) + " has loops and cannot be colored");
            }
            if (c.colors[u] == c.colors[v]) {
                return false;
            }
        }
    }
    return true;
}

inline bool verify_coloring(const SimpleGraph& g, const Coloring& c)
{
    detail::check_assignment(g.vertex_count(), c);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (auto v : g.adjacency[u]) {
            if (c.colors[u] == c.colors[v]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace torchroma
