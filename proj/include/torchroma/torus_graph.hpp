#pragma once

// Construction of the 6-regular toroidal triangulations T(r, s, t).
//
// Vertices are (i, j) with 1 <= i <= r (column) and 1 <= j <= s (row). The
// graph is kept as a true multigraph: coincident neighbor targets become
// parallel edges and a target equal to its source becomes a loop. A loop is
// listed twice in its vertex's adjacency, so every vertex has exactly six
// edge-endpoints regardless of degeneracy.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torchroma {

struct TorusParams {
    std::int64_t r = 1;
    std::int64_t s = 1;
    std::int64_t t = 0;

    constexpr std::int64_t order() const noexcept { return r * s; }

    friend constexpr auto operator<=>(const TorusParams&, const TorusParams&) = default;
};

inline std::string to_string(const TorusParams& p)
{
    return "T(" + std::to_string(p.r) + "," + std::to_string(p.s) + "," + std::to_string(p.t) + ")";
}

inline bool is_valid(const TorusParams& p) noexcept
{
    return p.r >= 1 && p.s >= 1 && p.t >= 0 && p.t < p.s;
}

inline void validate(const TorusParams& p)
{
    if (!is_valid(p)) {
        throw std::invalid_argument("invalid parameters " + to_string(p) +
                                    ": need r >= 1, s >= 1 and 0 <= t < s");
    }
}

/// Floor modulus; the result lies in [0, m).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept
{
    const std::int64_t q = a % m;
    return q < 0 ? q + m : q;
}

struct Vertex {
    std::int64_t i = 1;
    std::int64_t j = 1;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(const Vertex& v)
{
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

inline bool contains(const TorusParams& p, const Vertex& v) noexcept
{
    return v.i >= 1 && v.i <= p.r && v.j >= 1 && v.j <= p.s;
}

/// Zero-based vertex id, (i - 1) * s + (j - 1). Export formats add one.
inline std::size_t vertex_id(const TorusParams& p, const Vertex& v) noexcept
{
    return static_cast<std::size_t>((v.i - 1) * p.s + (v.j - 1));
}

inline Vertex vertex_at(const TorusParams& p, std::size_t id) noexcept
{
    const auto k = static_cast<std::int64_t>(id);
    return {k / p.s + 1, k % p.s + 1};
}

/// The three lattice directions. Each vertex has one neighbor per direction
/// and sign.
enum class Direction { vertical, horizontal, diagonal };

inline std::string to_string(Direction d)
{
    switch (d) {
    case Direction::vertical:
        return "vertical";
    case Direction::horizontal:
        return "horizontal";
    case Direction::diagonal:
        return "diagonal";
    }
    return "?";
}

/// Slot of the forward neighbor for direction d in the array returned by
/// neighbors(); the backward neighbor is the next slot.
constexpr std::size_t forward_slot(Direction d) noexcept
{
    return 2 * static_cast<std::size_t>(d);
}

/// The six neighbors of v, ordered (i, j+1), (i, j-1), (i+1, j), (i-1, j),
/// (i+1, j-1), (i-1, j+1) after wrapping. Wrapping across the column seam
/// shifts the row by t.
inline std::array<Vertex, 6> neighbors(const TorusParams& p, const Vertex& v)
{
    validate(p);
    if (!contains(p, v)) {
        throw std::out_of_range("vertex " + to_string(v) + " is not in " + to_string(p));
    }
    const auto r = p.r;
    const auto s = p.s;
    const auto t = p.t;
    const auto i = v.i;
    const auto j = v.j;
    auto row = [s](std::int64_t jj) { return floor_mod(jj - 1, s) + 1; };

    if (r == 1) {
        return {{{1, row(j + 1)},
                 {1, row(j - 1)},
                 {1, row(j - t)},
                 {1, row(j + t)},
                 {1, row(j - t - 1)},
                 {1, row(j + t + 1)}}};
    }
    const Vertex up{i, row(j + 1)};
    const Vertex down{i, row(j - 1)};
    if (i == 1) {
        return {{up, down, {2, j}, {r, row(j + t)}, {2, row(j - 1)}, {r, row(j + t + 1)}}};
    }
    if (i == r) {
        return {{up, down, {1, row(j - t)}, {r - 1, j}, {1, row(j - t - 1)}, {r - 1, row(j + 1)}}};
    }
    return {{up, down, {i + 1, j}, {i - 1, j}, {i + 1, row(j - 1)}, {i - 1, row(j + 1)}}};
}

/// Multigraph T(r, s, t). adjacency[id] holds the six neighbor ids, sorted.
struct TorusGraph {
    TorusParams params;
    std::vector<std::array<std::size_t, 6>> adjacency;

    std::size_t vertex_count() const noexcept { return adjacency.size(); }
    /// Number of edges counting multiplicity; always 3n.
    std::size_t edge_count() const noexcept { return 3 * adjacency.size(); }
};

inline TorusGraph build_graph(const TorusParams& p)
{
    validate(p);
    TorusGraph g{p, {}};
    const auto n = static_cast<std::size_t>(p.order());
    g.adjacency.resize(n);
    for (std::size_t id = 0; id < n; ++id) {
        const auto nb = neighbors(p, vertex_at(p, id));
        auto& row = g.adjacency[id];
        for (std::size_t k = 0; k < 6; ++k) {
            row[k] = vertex_id(p, nb[k]);
        }
        std::sort(row.begin(), row.end());
    }
    return g;
}

/// Multiplicity of v in the adjacency of u. A loop at u reports 2 per loop.
inline int multiplicity(const TorusGraph& g, std::size_t u, std::size_t v)
{
    const auto& row = g.adjacency.at(u);
    return static_cast<int>(std::count(row.begin(), row.end(), v));
}

struct EdgeReport {
    bool has_loops = false;
    bool has_parallel_edges = false;
    bool is_simple = true;
    std::vector<std::size_t> loop_vertices;
    /// Pairs u < v joined by more than one edge.
    std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs;
};

inline EdgeReport classify_edges(const TorusGraph& g)
{
    EdgeReport report;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        const auto& row = g.adjacency[u];
        for (std::size_t k = 0; k < row.size();) {
            std::size_t run = 1;
            while (k + run < row.size() && row[k + run] == row[k]) {
                ++run;
            }
            const auto v = row[k];
            if (v == u) {
                report.loop_vertices.push_back(u);
            } else if (run > 1 && u < v) {
                report.parallel_pairs.emplace_back(u, v);
            }
            k += run;
        }
    }
    report.has_loops = !report.loop_vertices.empty();
    report.has_parallel_edges = !report.parallel_pairs.empty();
    report.is_simple = !report.has_loops && !report.has_parallel_edges;
    return report;
}

/// Loop criterion in closed form: s = 1, or r = 1 with s = 2, or r = 1 with
/// t in {0, s - 1}.
inline bool has_loops_by_formula(const TorusParams& p)
{
    validate(p);
    if (p.s == 1) {
        return true;
    }
    return p.r == 1 && (p.s == 2 || p.t == 0 || p.t == p.s - 1);
}

/// Graph on the same vertex set with every adjacency kept once.
struct SimpleGraph {
    TorusParams params;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t vertex_count() const noexcept { return adjacency.size(); }
    std::size_t edge_count() const noexcept
    {
        std::size_t twice = 0;
        for (const auto& row : adjacency) {
            twice += row.size();
        }
        return twice / 2;
    }
};

inline SimpleGraph underlying_simple_graph(const TorusGraph& g)
{
    SimpleGraph h{g.params, {}};
    h.adjacency.resize(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        const auto& row = g.adjacency[u];
        if (std::find(row.begin(), row.end(), u) != row.end()) {
            throw std::domain_error(to_string(g.params) + " has loops; no simple graph underlies it");
        }
        auto& out = h.adjacency[u];
        out.assign(row.begin(), row.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return h;
}

} // namespace torchroma
