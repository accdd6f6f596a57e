#pragma once

// Four-colorings of the unshifted grids T(p, q, 0), p, q >= 3.
//
// The grid is cut into rectangular tiles whose widths and heights come from a
// small set. Each tile is a fixed proper coloring of its own torus
// T(w, h, 0), and within one tile family
//   - the first and last row depend only on the tile width,
//   - the first and last column depend only on the tile height.
// Every edge leaving a tile therefore lands on the color the tile's own
// torus would have put there, so any arrangement of tiles is proper.
//
// Family A uses widths and heights {3, 4}; its first columns also have no
// repeated color at vertical distance 1 or 2. Width 5 is covered by family B
// (heights {3, 5, 7}) plus a lone 5 x 4 tile; a height of 5 is handled by
// transposing.

#include "coloring.hpp"
#include "exact_solver.hpp"
#include "torus_graph.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace torchroma {

namespace detail {

// cells[x][y], colors 0..3; x is the column, y the row.
struct Tile {
    int width;
    int height;
    std::array<std::array<int, 7>, 5> cells;
};

inline constexpr std::array<Tile, 4> family_a{{
    {3, 3, {{{1, 2, 0}, {3, 1, 2}, {2, 3, 1}}}},
    {3, 4, {{{1, 2, 3, 0}, {3, 0, 1, 2}, {2, 3, 0, 1}}}},
    {4, 3, {{{1, 2, 0}, {0, 1, 3}, {3, 0, 2}, {2, 3, 1}}}},
    {4, 4, {{{1, 2, 3, 0}, {0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}}}},
}};

inline constexpr std::array<Tile, 3> family_b{{
    {5, 3, {{{0, 3, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 3}, {3, 1, 2}}}},
    {5, 5, {{{0, 2, 3, 0, 1}, {1, 0, 1, 3, 2}, {2, 3, 0, 1, 0}, {0, 2, 3, 2, 3}, {3, 1, 0, 1, 2}}}},
    {5,
     7,
     {{{0, 2, 1, 0, 2, 0, 1},
       {1, 0, 2, 3, 1, 3, 2},
       {2, 3, 1, 0, 2, 1, 0},
       {0, 2, 3, 1, 0, 2, 3},
       {3, 1, 0, 2, 3, 1, 2}}}},
}};

inline constexpr Tile tile_5x4{5, 4, {{{0, 1, 3, 2}, {2, 0, 1, 3}, {1, 3, 2, 0}, {0, 1, 3, 2}, {3, 2, 0, 1}}}};

/// Splits m into a sum of parts; the fewest parts win, larger parts first.
inline std::optional<std::vector<int>> split_into(int m, std::initializer_list<int> parts)
{
    std::vector<int> best(static_cast<std::size_t>(m) + 1, -1);
    std::vector<int> last(static_cast<std::size_t>(m) + 1, 0);
    best[0] = 0;
    for (int v = 1; v <= m; ++v) {
        for (int part : parts) {
            if (part <= v && best[static_cast<std::size_t>(v - part)] >= 0) {
                const int cand = best[static_cast<std::size_t>(v - part)] + 1;
                auto& cur = best[static_cast<std::size_t>(v)];
                if (cur < 0 || cand < cur || (cand == cur && part > last[static_cast<std::size_t>(v)])) {
                    cur = cand;
                    last[static_cast<std::size_t>(v)] = part;
                }
            }
        }
    }
    if (best[static_cast<std::size_t>(m)] < 0) {
        return std::nullopt;
    }
    std::vector<int> out;
    for (int v = m; v > 0; v -= last[static_cast<std::size_t>(v)]) {
        out.push_back(last[static_cast<std::size_t>(v)]);
    }
    return out;
}

template <std::size_t N>
const Tile* find_tile(const std::array<Tile, N>& family, int w, int h)
{
    for (const auto& tile : family) {
        if (tile.width == w && tile.height == h) {
            return &tile;
        }
    }
    return nullptr;
}

// grid[x][y] with colors 0..3, or nullopt when the tiles cannot cover p x q.
inline std::optional<std::vector<std::vector<int>>> tile_grid(int p, int q)
{
    std::optional<std::vector<int>> widths;
    std::optional<std::vector<int>> heights;
    auto lookup = [](int w, int h) -> const Tile* {
        if (w == 5) {
            return h == 4 ? &tile_5x4 : find_tile(family_b, w, h);
        }
        return find_tile(family_a, w, h);
    };
    if (p == 5) {
        widths = std::vector<int>{5};
        heights = q == 4 ? std::optional<std::vector<int>>{std::vector<int>{4}} : split_into(q, {7, 5, 3});
    } else {
        widths = split_into(p, {4, 3});
        heights = split_into(q, {4, 3});
    }
    if (!widths || !heights) {
        return std::nullopt;
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(q), 0));
    int x0 = 0;
    for (int w : *widths) {
        int y0 = 0;
        for (int h : *heights) {
            const Tile* tile = lookup(w, h);
            if (tile == nullptr) {
                return std::nullopt;
            }
            for (int x = 0; x < w; ++x) {
                for (int y = 0; y < h; ++y) {
                    grid[static_cast<std::size_t>(x0 + x)][static_cast<std::size_t>(y0 + y)] =
                        tile->cells[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                }
            }
            y0 += h;
        }
        x0 += w;
    }
    return grid;
}

} // namespace detail

/// Proper 4-coloring of T(p, q, 0) for p, q >= 3. Falls back to the exact
/// solver if the tiles do not fit; throws if that fails too.
inline Coloring color_unshifted(std::int64_t p, std::int64_t q, const SolveBudget& budget = {})
{
    if (p < 3 || q < 3) {
        throw std::invalid_argument("unshifted tiling needs p, q >= 3");
    }
    const TorusParams params{p, q, 0};
    Coloring c{params, std::vector<int>(static_cast<std::size_t>(p * q), 0), 4, "unshifted-tiles"};

    // T(p, q, 0) and T(q, p, 0) are mirror images under (x, y) -> (y, x).
    const bool transpose = q == 5 && p != 5;
    const auto w = static_cast<int>(transpose ? q : p);
    const auto h = static_cast<int>(transpose ? p : q);
    if (const auto grid = detail::tile_grid(w, h)) {
        for (std::int64_t i = 1; i <= p; ++i) {
            for (std::int64_t j = 1; j <= q; ++j) {
                const auto x = static_cast<std::size_t>(transpose ? j - 1 : i - 1);
                const auto y = static_cast<std::size_t>(transpose ? i - 1 : j - 1);
                c.colors[vertex_id(params, {i, j})] = (*grid)[x][y] + 1;
            }
        }
        if (verify_coloring(build_graph(params), c)) {
            return c;
        }
    }
    auto solved = solve_exact(build_graph(params), 4, budget);
    if (solved.status != SolveStatus::found) {
        throw std::runtime_error("no 4-coloring of " + to_string(params) + " was constructed");
    }
    return *solved.coloring;
}

} // namespace torchroma
