#pragma once

// Closed-form chromatic number of T(r, s, t).
//
// The exceptional graphs are listed by parameter triples in several
// families. Membership is decided on canonical forms, since one graph shows
// up under many triples.

#include "lattice_canon.hpp"
#include "torus_graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torchroma {

/// Exact floor((7 + sqrt(1 + 48 g)) / 2).
inline std::int64_t heawood_number(std::int64_t genus)
{
    if (genus < 1) {
        throw std::invalid_argument("Heawood number is defined for genus >= 1");
    }
    const std::int64_t d = 1 + 48 * genus;
    // Integer square root by Newton's method, seeded above the root.
    std::int64_t x = d;
    std::int64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + d / x) / 2;
    }
    return (7 + x) / 2;
}

/// Four-colorability guaranteed by the normal-circuit condition
/// (n/a, n/b) not in {(1,1), (1,2)}. Only meaningful for simple graphs.
inline bool four_colorable_by_main(const TorusParams& p)
{
    if (!classify_edges(build_graph(p)).is_simple) {
        throw std::domain_error(to_string(p) + " is not simple");
    }
    const auto len = normal_circuit_lengths(p);
    const auto n = p.order();
    const auto na = n / len.a;
    const auto nb = n / len.b;
    return !(na == 1 && (nb == 1 || nb == 2));
}

/// s = 0 and r = t (mod 3), with no validity or loop check.
inline bool three_pattern_fits(const TorusParams& p) noexcept
{
    return p.s % 3 == 0 && floor_mod(p.r - p.t, 3) == 0;
}

/// Accepts loopless multigraphs too: parallel edges do not change the
/// chromatic number.
inline bool is_three_chromatic(const TorusParams& p)
{
    validate(p);
    if (has_loops_by_formula(p)) {
        throw std::domain_error(to_string(p) + " has loops");
    }
    return three_pattern_fits(p);
}

/// One member of an exceptional family, with the chromatic number the
/// classification assigns it and the clause that lists it.
struct ExceptionalMember {
    TorusParams params;
    int chi = 0;
    std::string rule;

    friend bool operator==(const ExceptionalMember&, const ExceptionalMember&) = default;
};

namespace detail {

struct Pair {
    std::int64_t t;
    std::int64_t s;
};

inline constexpr std::array<Pair, 16> shift_one_sporadic{{{3, 13},
                                                          {3, 17},
                                                          {3, 18},
                                                          {3, 25},
                                                          {4, 17},
                                                          {6, 17},
                                                          {6, 25},
                                                          {6, 33},
                                                          {7, 19},
                                                          {7, 25},
                                                          {7, 26},
                                                          {9, 25},
                                                          {10, 25},
                                                          {10, 26},
                                                          {10, 37},
                                                          {14, 33}}};
inline constexpr std::array<Pair, 4> two_column_sporadic{{{3, 9}, {3, 13}, {4, 9}, {8, 13}}};
inline constexpr std::array<Pair, 4> three_column_sporadic{{{1, 6}, {2, 6}, {2, 11}, {6, 11}}};
inline constexpr std::array<Pair, 2> five_column_sporadic{{{2, 5}, {3, 5}}};

} // namespace detail

/// Every member of order n of the 7-, 6- and 5-chromatic lists, in clause
/// order. A graph may appear more than once.
inline std::vector<ExceptionalMember> exceptional_families(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("order must be positive");
    }
    std::vector<ExceptionalMember> out;
    auto add = [&out](std::int64_t r, std::int64_t s, std::int64_t t, int chi, const char* rule) {
        out.push_back({{r, s, t}, chi, rule});
    };

    if (n == 7) {
        add(1, 7, 2, 7, "5.1(b)");
    }

    if (n == 6) {
        add(1, 6, 2, 6, "5.1(c) K6");
        add(2, 3, 0, 6, "5.1(c) K6");
        add(2, 3, 1, 6, "5.1(c) K6");
        add(3, 2, 0, 6, "5.1(c) K6");
        add(3, 2, 1, 6, "5.1(c) K6");
    }
    if (n == 11) {
        add(1, 11, 2, 6, "5.1(c) 11-vertex");
        add(1, 11, 3, 6, "5.1(c) 11-vertex");
        add(1, 11, 4, 6, "5.1(c) 11-vertex");
    }

    if (n == 5) {
        add(1, 5, 1, 5, "5.1(d) bullet 1");
        add(1, 5, 2, 5, "5.1(d) bullet 1");
    }
    if (n >= 9 && n != 11 && n % 4 != 0) {
        add(1, n, 2, 5, "5.1(d) bullet 2");
    }
    if (n >= 9 && n % 4 != 0) {
        // s in {2t + 2, 2t + 3, 3t + 1, 3t + 2}
        if ((n - 2) % 2 == 0) {
            add(1, n, (n - 2) / 2, 5, "5.1(d) bullet 3");
        }
        if ((n - 3) % 2 == 0) {
            add(1, n, (n - 3) / 2, 5, "5.1(d) bullet 3");
        }
        if ((n - 1) % 3 == 0) {
            add(1, n, (n - 1) / 3, 5, "5.1(d) bullet 3");
        }
        if ((n - 2) % 3 == 0) {
            add(1, n, (n - 2) / 3, 5, "5.1(d) bullet 3");
        }
    }
    if (n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 5) {
        const auto s = n / 2;
        add(2, s, 0, 5, "5.1(d) bullet 4");
        add(2, s, 1, 5, "5.1(d) bullet 4");
        add(2, s, s - 3, 5, "5.1(d) bullet 4");
        add(2, s, s - 2, 5, "5.1(d) bullet 4");
    }
    if (n % 3 == 0 && n / 3 >= 3 && (n / 3) % 4 != 0) {
        const auto s = n / 3;
        add(3, s, s - 2, 5, "5.1(d) bullet 5");
        add(3, s, s - 1, 5, "5.1(d) bullet 5");
    }
    if (n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 5) {
        const auto r = n / 2;
        add(r, 2, 0, 5, "5.1(d) bullet 6");
        add(r, 2, 1, 5, "5.1(d) bullet 6");
    }
    for (const auto& [t, s] : detail::shift_one_sporadic) {
        if (s == n) {
            add(1, s, t, 5, "5.1(d) bullet 7");
        }
    }
    for (const auto& [t, s] : detail::two_column_sporadic) {
        if (2 * s == n) {
            add(2, s, t, 5, "5.1(d) bullet 8");
        }
    }
    for (const auto& [t, s] : detail::three_column_sporadic) {
        if (3 * s == n) {
            add(3, s, t, 5, "5.1(d) bullet 9");
        }
    }
    for (const auto& [t, s] : detail::five_column_sporadic) {
        if (5 * s == n) {
            add(5, s, t, 5, "5.1(d) bullet 10");
        }
    }
    return out;
}

enum class Verdict { loops, chromatic };

struct Classification {
    Verdict verdict = Verdict::chromatic;
    /// Chromatic number; 0 when the graph has loops.
    int chi = 0;
    std::string rule;

    bool has_loops() const noexcept { return verdict == Verdict::loops; }
};

/// Which clauses of the classification match p, independently of rule
/// precedence. Used to check that the clauses do not overlap.
struct ClauseHits {
    bool loops = false;
    bool seven = false;
    bool six = false;
    bool five = false;
    bool three = false;
};

inline ClauseHits clause_hits(const TorusParams& p)
{
    ClauseHits hits;
    hits.loops = has_loops_by_formula(p);
    const auto canon = canonical_form(p);
    for (const auto& member : exceptional_families(p.order())) {
        if (canonical_form(member.params) != canon) {
            continue;
        }
        hits.seven |= member.chi == 7;
        hits.six |= member.chi == 6;
        hits.five |= member.chi == 5;
    }
    hits.three = !hits.loops && three_pattern_fits(p);
    return hits;
}

/// Chromatic number by the classification. Clauses are applied in the order
/// loops, 7, 6, 5, 3, and 4 otherwise.
inline Classification classify(const TorusParams& p)
{
    validate(p);
    if (has_loops_by_formula(p)) {
        return {Verdict::loops, 0, "5.1(a)"};
    }
    const auto canon = canonical_form(p);
    const auto members = exceptional_families(p.order());
    for (int chi : {7, 6, 5}) {
        for (const auto& member : members) {
            if (member.chi == chi && canonical_form(member.params) == canon) {
                return {Verdict::chromatic, chi, member.rule};
            }
        }
    }
    if (three_pattern_fits(p)) {
        return {Verdict::chromatic, 3, "5.1(f)"};
    }
    return {Verdict::chromatic, 4, "5.1(e)"};
}

} // namespace torchroma
