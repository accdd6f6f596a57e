#pragma once

// Constructive colorings of T(r, s, t) and the cascade that picks one.
//
// Every strategy returns a coloring of the triple it was given and checks it
// before returning. The cascade also tries each strategy on every other
// parameterization of the same lattice and carries the result back through
// the lattice map, so e.g. T(3, 5, 4) gets the pattern coloring of
// T(1, 15, 2).

#include "chroma_oracle.hpp"
#include "coloring.hpp"
#include "exact_solver.hpp"
#include "lattice_canon.hpp"
#include "torus_graph.hpp"
#include "unshifted.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torchroma {

class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Coloring checked(Coloring c)
{
    if (!verify_coloring(build_graph(c.params), c)) {
        throw std::runtime_error(c.strategy + " produced an improper coloring of " + to_string(c.params));
    }
    return c;
}

inline bool is_loop_free(const TorusParams& p)
{
    return !has_loops_by_formula(p);
}

inline bool is_simple(const TorusParams& p)
{
    return classify_edges(build_graph(p)).is_simple;
}

} // namespace detail

/// color(i, j) = ((j - i) mod 3) + 1; proper exactly when s = 0 and r = t
/// (mod 3).
inline Coloring color_three_pattern(const TorusParams& p)
{
    validate(p);
    if (!detail::is_loop_free(p) || !three_pattern_fits(p)) {
        throw precondition_error(to_string(p) + " does not admit the mod-3 pattern");
    }
    Coloring c{p, std::vector<int>(static_cast<std::size_t>(p.order())), 3, "three-pattern"};
    for (std::int64_t i = 1; i <= p.r; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            c.colors[vertex_id(p, {i, j})] = static_cast<int>(floor_mod(j - i, 3)) + 1;
        }
    }
    return detail::checked(std::move(c));
}

/// T(2, s, t) with s even: columns alternate {1, 2} and {3, 4}.
inline Coloring color_two_columns(const TorusParams& p)
{
    validate(p);
    if (p.r != 2 || p.s % 2 != 0) {
        throw precondition_error(to_string(p) + " is not a two-column grid of even height");
    }
    Coloring c{p, std::vector<int>(static_cast<std::size_t>(p.order())), 4, "two-columns"};
    for (std::int64_t i = 1; i <= 2; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            c.colors[vertex_id(p, {i, j})] = static_cast<int>(2 * (i - 1) + (j % 2) + 1);
        }
    }
    return detail::checked(std::move(c));
}

/// Pattern colorings of T(1, s, 2), where any four consecutive vertices form
/// a K4: period 1234 when 4 | s; otherwise blocks of 1234 then 12345 (five
/// colors); 12345123456 for s = 11; all distinct for s = 7 (K7).
inline Coloring color_t1s2(std::int64_t s)
{
    if (s < 7) {
        throw precondition_error("T(1, s, 2) patterns need s >= 7");
    }
    const TorusParams p{1, s, 2};
    std::vector<int> seq;
    int k = 0;
    if (s % 4 == 0) {
        k = 4;
        for (std::int64_t j = 0; j < s; ++j) {
            seq.push_back(static_cast<int>(j % 4) + 1);
        }
    } else if (s == 7) {
        k = 7;
        for (int j = 1; j <= 7; ++j) {
            seq.push_back(j);
        }
    } else if (s == 11) {
        k = 6;
        seq = {1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 6};
    } else {
        k = 5;
        // s = 4u + 5v with v = s mod 4.
        const auto v = s % 4;
        const auto u = (s - 5 * v) / 4;
        for (std::int64_t b = 0; b < u + v; ++b) {
            const int width = b < u ? 4 : 5;
            for (int c = 1; c <= width; ++c) {
                seq.push_back(c);
            }
        }
    }
    return detail::checked(Coloring{p, std::move(seq), k, "t1s2-pattern"});
}

namespace detail {

// Repeats a coloring of T(r, m, 0) down the rows of T(r, s, t), m | s and
// m | t. The seam shift is a multiple of the period, so it is invisible.
inline Coloring tile_rows(const TorusParams& p, std::int64_t m, const std::string& strategy, const SolveBudget& budget)
{
    const auto block = color_unshifted(p.r, m, budget);
    Coloring c{p, std::vector<int>(static_cast<std::size_t>(p.order())), 4, strategy};
    for (std::int64_t i = 1; i <= p.r; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            c.colors[vertex_id(p, {i, j})] = block.color({i, floor_mod(j - 1, m) + 1});
        }
    }
    return checked(std::move(c));
}

} // namespace detail

/// Vertical tiling for simple T(r, s, t) with r >= 3 whose vertical circuit
/// is the longest: a 4-coloring of T(r, gcd(s, t), 0) repeated s / gcd(s, t)
/// times.
inline Coloring color_by_vertical_tiling(const TorusParams& p, const SolveBudget& budget = {})
{
    validate(p);
    const auto m = std::gcd(p.s, p.t);
    if (p.r < 3 || m < 3 || normal_circuit_lengths(p).a != p.s || !detail::is_simple(p)) {
        throw precondition_error("vertical tiling does not apply to " + to_string(p));
    }
    return detail::tile_rows(p, m, "vertical-tiling", budget);
}

/// Colors `p` from a coloring of an isomorphic triple: vertex v gets the color
/// of its image under rep.map.
inline Coloring transport(const TorusParams& p, const Representation& rep, const Coloring& image)
{
    if (image.params != rep.params) {
        throw std::invalid_argument("coloring does not belong to the target representation");
    }
    Coloring c{p, std::vector<int>(static_cast<std::size_t>(p.order())), image.k, image.strategy};
    for (std::int64_t i = 1; i <= p.r; ++i) {
        for (std::int64_t j = 1; j <= p.s; ++j) {
            c.colors[vertex_id(p, {i, j})] = image.color(map_vertex(rep, {i, j}));
        }
    }
    return detail::checked(std::move(c));
}

/// For lengths a >= b >= c with n/c >= n/b >= 3: view the graph as
/// T(n/c, c, t') with gcd(c, t') = n/b and repeat a coloring of
/// T(n/c, n/b, 0).
inline Coloring color_by_reparam_tiling(const TorusParams& p, const SolveBudget& budget = {})
{
    validate(p);
    const auto len = normal_circuit_lengths(p);
    const auto n = p.order();
    const auto wide = n / len.c;
    const auto period = n / len.b;
    if (!(wide >= period && period >= 3) || !detail::is_simple(p)) {
        throw precondition_error("reparameterized tiling does not apply to " + to_string(p));
    }
    for (const auto& rep : representations(p)) {
        const auto& q = rep.params;
        if (q.s == len.c && q.r == wide && std::gcd(q.s, q.t) == period) {
            const auto image = detail::tile_rows(q, period, "reparam-tiling", budget);
            return transport(p, rep, image);
        }
    }
    throw std::logic_error("no representation T(n/c, c, t') with gcd(c, t') = n/b for " + to_string(p));
}

/// Column-shift construction. Columns 1..y come from a 4-coloring of
/// T(y, s, 0), column y + 1 repeats column 1, and each later column repeats
/// its predecessor shifted up by one row or down by two rows. The net shift
/// must equal t modulo s at the seam.
inline Coloring color_by_column_shifts(const TorusParams& p, const SolveBudget& budget = {})
{
    validate(p);
    const auto r = p.r;
    const auto s = p.s;
    const auto t = p.t;
    const bool shape_ok = r >= 3 && s >= 3 && r != 5 && s != 5;
    const bool region_ok = r >= t + 3 || r > s - (t + 1) / 2;
    if (!shape_ok || !region_ok || !detail::is_simple(p)) {
        throw precondition_error("column shifts do not apply to " + to_string(p));
    }
    const auto graph = build_graph(p);
    // ups - 2 * downs = t (mod s), ups + downs = r - y.
    for (std::int64_t y = r; y >= 3; --y) {
        const auto steps = r - y;
        for (std::int64_t downs = 0; downs <= steps; ++downs) {
            const auto ups = steps - downs;
            if (floor_mod(ups - 2 * downs - t, s) != 0) {
                continue;
            }
            if (steps == 0 && t != 0) {
                continue;
            }
            const auto base = color_unshifted(y, s, budget);
            Coloring c{p, std::vector<int>(static_cast<std::size_t>(p.order())), 4, "column-shifts"};
            for (std::int64_t i = 1; i <= y; ++i) {
                for (std::int64_t j = 1; j <= s; ++j) {
                    c.colors[vertex_id(p, {i, j})] = base.color({i, j});
                }
            }
            // Column y + 1 + k is column 1 moved up by `offset` rows.
            std::int64_t offset = 0;
            for (std::int64_t k = 0; y + 1 + k <= r; ++k) {
                if (k > 0) {
                    offset += k <= ups ? 1 : -2;
                }
                for (std::int64_t j = 1; j <= s; ++j) {
                    c.colors[vertex_id(p, {y + 1 + k, j})] = base.color({1, floor_mod(j - 1 - offset, s) + 1});
                }
            }
            if (verify_coloring(graph, c)) {
                return c;
            }
        }
    }
    throw std::runtime_error("column shifts found no proper coloring of " + to_string(p));
}

namespace detail {

using Strategy = std::function<std::optional<Coloring>(const TorusParams&)>;

template <typename F>
std::optional<Coloring> attempt(F&& f)
{
    try {
        return f();
    } catch (const precondition_error&) {
        return std::nullopt;
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

inline std::vector<std::pair<std::string, Strategy>> cascade(const SolveBudget& budget)
{
    return {
        {"three-pattern", [](const TorusParams& q) { return attempt([&] { return color_three_pattern(q); }); }},
        {"two-columns", [](const TorusParams& q) { return attempt([&] { return color_two_columns(q); }); }},
        {"t1s2-pattern",
         [](const TorusParams& q) -> std::optional<Coloring> {
             if (q.r != 1 || q.t != 2 || q.s < 7) {
                 return std::nullopt;
             }
             return attempt([&] { return color_t1s2(q.s); });
         }},
        {"vertical-tiling",
         [budget](const TorusParams& q) { return attempt([&] { return color_by_vertical_tiling(q, budget); }); }},
        {"reparam-tiling",
         [budget](const TorusParams& q) { return attempt([&] { return color_by_reparam_tiling(q, budget); }); }},
        {"column-shifts",
         [budget](const TorusParams& q) { return attempt([&] { return color_by_column_shifts(q, budget); }); }},
    };
}

} // namespace detail

/// First coloring with at most k colors found by the closed-form strategies,
/// trying each strategy on every parameterization of p. No search beyond the
/// bounded fallback inside the unshifted tiling.
inline std::optional<Coloring> constructive_coloring(const TorusParams& p, int k, const SolveBudget& budget = {})
{
    validate(p);
    if (has_loops_by_formula(p)) {
        throw std::domain_error(to_string(p) + " has loops and cannot be colored");
    }
    const auto reps = representations(p);
    for (const auto& [name, strategy] : detail::cascade(budget)) {
        for (const auto& rep : reps) {
            auto image = strategy(rep.params);
            if (!image || image->k > k) {
                continue;
            }
            auto c = rep.params == p ? *image : transport(p, rep, *image);
            c.k = k;
            return c;
        }
    }
    return std::nullopt;
}

/// A verified coloring with exactly classify(p).chi colors: closed-form
/// strategies first, then the exact solver.
inline Coloring best_coloring(const TorusParams& p, const SolveBudget& budget = {})
{
    const auto verdict = classify(p);
    if (verdict.has_loops()) {
        throw std::domain_error(to_string(p) + " has loops and cannot be colored");
    }
    const int k = verdict.chi;
    if (auto c = constructive_coloring(p, k, budget)) {
        return *c;
    }
    const auto graph = build_graph(p);
    auto solved = solve_exact(graph, k, budget);
    switch (solved.status) {
    case SolveStatus::found:
        return *solved.coloring;
    case SolveStatus::proven_none:
        throw std::logic_error(to_string(p) + " has no " + std::to_string(k) + "-coloring, contradicting its classification");
    case SolveStatus::budget_exceeded:
        break;
    }
    throw budget_exceeded("solver budget exhausted while coloring " + to_string(p));
}

} // namespace torchroma
