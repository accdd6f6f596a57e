#pragma once

// Complete backtracking k-coloring with DSATUR branching and forward
// checking.
//
// The vertex to branch on is the uncolored one with the fewest remaining
// colors, ties broken by most uncolored neighbors and then by lowest id.
// Colors are introduced in increasing order (a vertex may take any color
// already in use or the single next unused one), so the first vertex always
// gets color 1 and no two color-permuted branches are explored.

#include "coloring.hpp"
#include "torus_graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace torchroma {

enum class SolveStatus { found, proven_none, budget_exceeded };

inline const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::found:
        return "found";
    case SolveStatus::proven_none:
        return "proven_none";
    case SolveStatus::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

struct SolveResult {
    SolveStatus status = SolveStatus::budget_exceeded;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

namespace detail {

class DsaturSearch {
public:
    DsaturSearch(const SimpleGraph& g, int k, const SolveBudget& budget)
        : g_(g), k_(k), budget_(budget), n_(g.vertex_count()), color_(n_, -1), forbid_(n_ * static_cast<std::size_t>(k), 0),
          free_(n_, k), uncolored_degree_(n_, 0)
    {
        for (std::size_t v = 0; v < n_; ++v) {
            uncolored_degree_[v] = static_cast<int>(g.adjacency[v].size());
        }
        start_ = std::chrono::steady_clock::now();
    }

    SolveStatus run()
    {
        if (n_ == 0) {
            return SolveStatus::found;
        }
        const bool ok = search(0, 0);
        if (aborted_) {
            return SolveStatus::budget_exceeded;
        }
        return ok ? SolveStatus::found : SolveStatus::proven_none;
    }

    const std::vector<int>& colors() const noexcept { return color_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    int& forbid(std::size_t v, int c) { return forbid_[v * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

    bool over_budget()
    {
        if (nodes_ > budget_.node_limit) {
            return true;
        }
        if ((nodes_ & 0x3ff) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.time_limit_seconds) {
                return true;
            }
        }
        return false;
    }

    std::size_t pick() const
    {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) {
                continue;
            }
            if (best == n_ || free_[v] < free_[best] ||
                (free_[v] == free_[best] && uncolored_degree_[v] > uncolored_degree_[best])) {
                best = v;
            }
        }
        return best;
    }

    // Returns false if some uncolored neighbor lost its last color; the
    // assignment is still fully applied so that undo() can mirror it.
    bool assign(std::size_t v, int c)
    {
        color_[v] = c;
        bool alive = true;
        for (auto u : g_.adjacency[v]) {
            --uncolored_degree_[u];
            if (color_[u] >= 0) {
                continue;
            }
            if (forbid(u, c)++ == 0 && --free_[u] == 0) {
                alive = false;
            }
        }
        return alive;
    }

    void undo(std::size_t v, int c)
    {
        for (auto u : g_.adjacency[v]) {
            ++uncolored_degree_[u];
            if (color_[u] >= 0) {
                continue;
            }
            if (--forbid(u, c) == 0) {
                ++free_[u];
            }
        }
        color_[v] = -1;
    }

    bool search(std::size_t colored, int used)
    {
        if (colored == n_) {
            return true;
        }
        ++nodes_;
        if (over_budget()) {
            aborted_ = true;
            return false;
        }
        const auto v = pick();
        const int limit = used < k_ ? used + 1 : k_;
        for (int c = 0; c < limit; ++c) {
            if (forbid(v, c) != 0) {
                continue;
            }
            const bool alive = assign(v, c);
            if (alive && search(colored + 1, c == used ? used + 1 : used)) {
                return true;
            }
            undo(v, c);
            if (aborted_) {
                return false;
            }
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    SolveBudget budget_;
    std::size_t n_;
    std::vector<int> color_;
    std::vector<int> forbid_;
    std::vector<int> free_;
    std::vector<int> uncolored_degree_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

inline SolveResult solve_exact(const SimpleGraph& g, int k, const SolveBudget& budget = {})
{
    if (k < 1) {
        throw std::invalid_argument("color count must be positive");
    }
    detail::DsaturSearch search(g, k, budget);
    SolveResult result;
    result.status = search.run();
    result.nodes = search.nodes();
    if (result.status == SolveStatus::found) {
        Coloring c{g.params, {}, k, "exact-solver"};
        c.colors.reserve(search.colors().size());
        for (int x : search.colors()) {
            c.colors.push_back(x + 1);
        }
        if (!verify_coloring(g, c)) {
            throw std::logic_error("exact solver produced an improper coloring");
        }
        result.coloring = std::move(c);
    }
    return result;
}

/// Runs on the underlying simple graph; parallel edges add no constraint.
inline SolveResult solve_exact(const TorusGraph& g, int k, const SolveBudget& budget = {})
{
    return solve_exact(underlying_simple_graph(g), k, budget);
}

/// Least k admitting a coloring. Throws budget_exceeded rather than guess.
inline int chromatic_number_exact(const TorusGraph& g, const SolveBudget& budget = {})
{
    const auto simple = underlying_simple_graph(g);
    for (int k = 1; k <= 7; ++k) {
        const auto result = solve_exact(simple, k, budget);
        if (result.status == SolveStatus::found) {
            return k;
        }
        if (result.status == SolveStatus::budget_exceeded) {
            throw budget_exceeded("solver budget exhausted on " + to_string(g.params) + " with " +
                                  std::to_string(k) + " colors");
        }
    }
    throw std::logic_error(to_string(g.params) + " needs more than 7 colors");
}

} // namespace torchroma
