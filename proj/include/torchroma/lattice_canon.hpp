#pragma once

// Quotient-lattice model of T(r, s, t).
//
// Put vertex (i, j) at the lattice point (i - 1, j - 1). The six neighbor
// steps are +-(0, 1), +-(1, 0) and +-(1, -1), and T(r, s, t) is the quotient
// of Z^2 by the sublattice spanned by (r, t) and (0, s). Any unimodular map
// that permutes the step set carries the quotient onto an isomorphic one, and
// there are exactly twelve such maps. Reading the image sublattice back in
// Hermite normal form yields another parameter triple for the same graph.

#include "torus_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace torchroma {

struct NormalLengths {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend constexpr auto operator<=>(const NormalLengths&, const NormalLengths&) = default;
};

/// Lengths of the vertical, horizontal and diagonal normal circuits, sorted
/// so that a >= b >= c.
inline NormalLengths normal_circuit_lengths(const TorusParams& p)
{
    validate(p);
    const auto n = p.order();
    std::array<std::int64_t, 3> len{p.s, n / std::gcd(p.s, p.t), n / std::gcd(p.s, p.r + p.t)};
    std::sort(len.begin(), len.end(), std::greater<>{});
    return {len[0], len[1], len[2]};
}

/// Length of the normal circuit in one direction, unsorted.
inline std::int64_t circuit_length(const TorusParams& p, Direction d)
{
    validate(p);
    const auto n = p.order();
    switch (d) {
    case Direction::vertical:
        return p.s;
    case Direction::horizontal:
        return n / std::gcd(p.s, p.t);
    case Direction::diagonal:
        return n / std::gcd(p.s, p.r + p.t);
    }
    return 0;
}

using Vec2 = std::array<std::int64_t, 2>;

/// 2x2 integer matrix acting on column vectors.
struct Mat2 {
    std::array<std::array<std::int64_t, 2>, 2> m{};

    constexpr Vec2 operator()(const Vec2& v) const noexcept
    {
        return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    }
    constexpr std::int64_t det() const noexcept { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) noexcept
    {
        Mat2 z;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                z.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
            }
        }
        return z;
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

inline constexpr Mat2 identity_map{{{{1, 0}, {0, 1}}}};
/// Order-6 rotation: (1,0) -> (0,1) -> (-1,1) -> (-1,0) -> ...
inline constexpr Mat2 rotation_map{{{{0, -1}, {1, 1}}}};
/// Exchanges the horizontal and vertical steps.
inline constexpr Mat2 swap_map{{{{0, 1}, {1, 0}}}};
/// Fixes the column coordinate and exchanges the horizontal and diagonal
/// steps; sends T(r, s, t) to T(r, s, -r - t mod s).
inline constexpr Mat2 seam_reflection_map{{{{1, 0}, {-1, -1}}}};

inline constexpr std::array<Vec2, 3> direction_steps{{{0, 1}, {1, 0}, {1, -1}}};

constexpr Vec2 step_of(Direction d) noexcept
{
    return direction_steps[static_cast<std::size_t>(d)];
}

/// Rotations first (index 0 is the identity), then the rotations composed
/// with the swap.
inline const std::array<Mat2, 12>& point_group()
{
    static const std::array<Mat2, 12> group = [] {
        std::array<Mat2, 12> g{};
        Mat2 rot = identity_map;
        for (std::size_t k = 0; k < 6; ++k) {
            g[k] = rot;
            g[k + 6] = rot * swap_map;
            rot = rotation_map * rot;
        }
        return g;
    }();
    return group;
}

/// Generators of a sublattice of Z^2, one per row.
struct LatticeBasis {
    Vec2 u{};
    Vec2 v{};

    constexpr std::int64_t det() const noexcept { return u[0] * v[1] - u[1] * v[0]; }
};

inline LatticeBasis basis_of(const TorusParams& p)
{
    validate(p);
    return {{p.r, p.t}, {0, p.s}};
}

inline LatticeBasis transform(const Mat2& g, const LatticeBasis& b)
{
    return {g(b.u), g(b.v)};
}

inline std::array<LatticeBasis, 12> symmetry_images(const LatticeBasis& b)
{
    std::array<LatticeBasis, 12> out{};
    const auto& group = point_group();
    for (std::size_t k = 0; k < group.size(); ++k) {
        out[k] = transform(group[k], b);
    }
    return out;
}

namespace detail {

struct ExtendedGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};

// g = x * a + y * b with g >= 0.
inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        const auto q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_x = std::exchange(x, old_x - q * x);
        old_y = std::exchange(y, old_y - q * y);
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

} // namespace detail

/// Reads a sublattice back as (r, s, t) with basis (r, t), (0, s) and
/// 0 <= t < s.
inline TorusParams hnf_params(const LatticeBasis& b)
{
    const auto det = b.det();
    if (det == 0) {
        throw std::domain_error("lattice basis is degenerate (zero determinant)");
    }
    const auto eg = detail::extended_gcd(b.u[0], b.v[0]);
    const auto r = eg.g;
    const auto s = (det < 0 ? -det : det) / r;
    const auto y = eg.x * b.u[1] + eg.y * b.v[1];
    return {r, s, floor_mod(y, s)};
}

inline TorusParams canonical_form(const TorusParams& p)
{
    const auto base = basis_of(p);
    std::optional<TorusParams> best;
    for (const auto& image : symmetry_images(base)) {
        const auto q = hnf_params(image);
        if (!best || q < *best) {
            best = q;
        }
    }
    return *best;
}

inline bool are_isomorphic(const TorusParams& p1, const TorusParams& p2)
{
    return p1.order() == p2.order() && canonical_form(p1) == canonical_form(p2);
}

/// Another parameterization of the same graph together with the lattice map
/// that realizes the isomorphism: vertex (i, j) of the source goes to the
/// class of map(i - 1, j - 1) in the target.
struct Representation {
    TorusParams params;
    Mat2 map;
};

/// Distinct parameter triples among the twelve images, sorted by params.
inline std::vector<Representation> representations(const TorusParams& p)
{
    const auto base = basis_of(p);
    std::vector<Representation> out;
    for (const auto& g : point_group()) {
        const auto q = hnf_params(transform(g, base));
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& rep) { return rep.params == q; });
        if (!seen) {
            out.push_back({q, g});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.params < y.params; });
    return out;
}

/// The representation whose vertical circuit is the given circuit of p.
/// Among the maps sending the direction to the vertical one, the least
/// resulting triple wins.
inline Representation reparameterize_with_map(const TorusParams& p, Direction d)
{
    const auto base = basis_of(p);
    const auto step = step_of(d);
    std::optional<Representation> best;
    for (const auto& g : point_group()) {
        const auto img = g(step);
        if (img[0] != 0 || (img[1] != 1 && img[1] != -1)) {
            continue;
        }
        const auto q = hnf_params(transform(g, base));
        if (!best || q < best->params) {
            best = Representation{q, g};
        }
    }
    return *best;
}

inline TorusParams reparameterize(const TorusParams& p, Direction d)
{
    return reparameterize_with_map(p, d).params;
}

/// Reduces a lattice point to its vertex in T(p).
inline Vertex reduce(const TorusParams& p, const Vec2& point)
{
    auto x = point[0];
    auto y = point[1];
    const auto q = (x - floor_mod(x, p.r)) / p.r;
    x -= q * p.r;
    y -= q * p.t;
    return {x + 1, floor_mod(y, p.s) + 1};
}

inline Vec2 lattice_point(const Vertex& v) noexcept
{
    return {v.i - 1, v.j - 1};
}

/// Image of a vertex of `from` under rep, as a vertex of rep.params.
inline Vertex map_vertex(const Representation& rep, const Vertex& v)
{
    return reduce(rep.params, rep.map(lattice_point(v)));
}

/// Canonical classes of order n, sorted.
inline std::vector<TorusParams> enumerate_order(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("order must be positive");
    }
    std::vector<TorusParams> out;
    for (std::int64_t r = 1; r <= n; ++r) {
        if (n % r != 0) {
            continue;
        }
        const auto s = n / r;
        for (std::int64_t t = 0; t < s; ++t) {
            out.push_back(canonical_form({r, s, t}));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace torchroma
