#pragma once

// Test-only oracles. None of these go through the lattice code or the
// adjacency bullets used by the library.

#include "torchroma/torus_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

namespace torchroma::oracle {

/// Membership of (a, b) in the sublattice spanned by (r, t) and (0, s).
inline bool in_lattice(const TorusParams& p, std::int64_t a, std::int64_t b)
{
    if (a % p.r != 0) {
        return false;
    }
    return (b - (a / p.r) * p.t) % p.s == 0;
}

/// Neighbor of (i, j) after the lattice step (dx, dy), found by scanning all
/// vertices for the one congruent to the target point.
inline Vertex step_by_search(const TorusParams& p, const Vertex& v, std::int64_t dx, std::int64_t dy)
{
    const auto x = v.i - 1 + dx;
    const auto y = v.j - 1 + dy;
    for (std::int64_t i = 1; i <= p.r; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            if (in_lattice(p, x - (i - 1), y - (j - 1))) {
                return {i, j};
            }
        }
    }
    return {0, 0};
}

/// Multiplicity matrix of a multigraph; loops count 2 on the diagonal.
inline std::vector<std::vector<int>> multiplicity_matrix(const TorusGraph& g)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (auto v : g.adjacency[u]) {
            ++m[u][v];
        }
    }
    return m;
}

namespace detail {

inline bool extend(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                   const std::vector<std::size_t>& order, const std::vector<std::size_t>& parent, std::size_t depth,
                   std::vector<std::size_t>& image, std::vector<bool>& used)
{
    const auto n = a.size();
    if (depth == order.size()) {
        return true;
    }
    const auto u = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) {
            continue;
        }
        // Stay adjacent to the image of the BFS parent.
        if (depth > 0 && b[image[parent[u]]][cand] == 0) {
            continue;
        }
        bool ok = a[u][u] == b[cand][cand];
        for (std::size_t d = 0; ok && d < depth; ++d) {
            const auto w = order[d];
            ok = a[u][w] == b[cand][image[w]];
        }
        if (!ok) {
            continue;
        }
        image[u] = cand;
        used[cand] = true;
        if (extend(a, b, order, parent, depth + 1, image, used)) {
            return true;
        }
        used[cand] = false;
    }
    return false;
}

} // namespace detail

/// Brute-force isomorphism of two connected multigraphs given by
/// multiplicity matrices. Vertex 0 of `a` is sent to each vertex of `b` in
/// turn and the map is grown in BFS order.
inline bool isomorphic(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b)
{
    const auto n = a.size();
    if (n != b.size()) {
        return false;
    }
    if (n == 0) {
        return true;
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, 0);
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop();
        order.push_back(u);
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && a[u][v] > 0) {
                seen[v] = true;
                parent[v] = u;
                queue.push(v);
            }
        }
    }
    if (order.size() != n) {
        return false;
    }
    std::vector<std::size_t> image(n, 0);
    std::vector<bool> used(n, false);
    for (std::size_t target = 0; target < n; ++target) {
        if (a[0][0] != b[target][target]) {
            continue;
        }
        image[0] = target;
        used[target] = true;
        if (detail::extend(a, b, order, parent, 1, image, used)) {
            return true;
        }
        used[target] = false;
    }
    return false;
}

inline bool isomorphic(const TorusGraph& g, const TorusGraph& h)
{
    return isomorphic(multiplicity_matrix(g), multiplicity_matrix(h));
}

/// Simple-graph version: multiplicities collapsed to 0/1.
inline bool isomorphic_simple(const TorusGraph& g, const TorusGraph& h)
{
    auto a = multiplicity_matrix(g);
    auto b = multiplicity_matrix(h);
    for (auto* m : {&a, &b}) {
        for (auto& row : *m) {
            for (auto& x : row) {
                x = x > 0 ? 1 : 0;
            }
        }
    }
    return isomorphic(a, b);
}

/// Length of the cycle traced from v by repeatedly taking the neighbor in
/// slot `slot` of neighbors().
inline std::int64_t walk_length(const TorusParams& p, const Vertex& start, std::size_t slot)
{
    auto v = start;
    std::int64_t steps = 0;
    do {
        v = neighbors(p, v)[slot];
        ++steps;
    } while (v != start && steps <= p.order());
    return steps;
}

/// Proper-coloring check against an explicit edge list, independent of the
/// library's verifier.
inline bool proper(const TorusParams& p, const std::vector<int>& colors)
{
    for (std::int64_t i = 1; i <= p.r; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            const Vertex v{i, j};
            for (auto [dx, dy] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, -1}}) {
                const auto w = step_by_search(p, v, dx, dy);
                if (colors[vertex_id(p, v)] == colors[vertex_id(p, w)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace torchroma::oracle
