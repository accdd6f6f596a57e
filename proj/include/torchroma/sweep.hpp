#pragma once

// Classification-versus-solver sweep over all canonical classes of bounded
// order.

#include "chroma_oracle.hpp"
#include "exact_solver.hpp"
#include "lattice_canon.hpp"
#include "torus_graph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace torchroma {

struct SweepEntry {
    TorusParams params;
    Classification oracle;
    /// Solver's chromatic number; 0 for graphs with loops or when the budget
    /// ran out.
    int exact = 0;
    bool budget_exhausted = false;

    bool mismatch() const noexcept { return !oracle.has_loops() && !budget_exhausted && exact != oracle.chi; }
};

struct SweepRow {
    std::int64_t n = 0;
    std::size_t classes = 0;
    std::size_t loops = 0;
    /// by_chi[k] counts classes whose solver chromatic number is k.
    std::array<std::size_t, 8> by_chi{};
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    std::vector<SweepRow> rows;

    std::size_t mismatches() const
    {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.mismatch(); }));
    }
    std::size_t budget_failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.budget_exhausted; }));
    }
};

/// Classes are ordered by (n, canonical triple); jobs > 1 only changes who
/// does the work.
inline SweepReport verify_sweep(std::int64_t max_n, const SolveBudget& budget = {}, unsigned jobs = 1)
{
    SweepReport report;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (const auto& p : enumerate_order(n)) {
            report.entries.push_back({p, classify(p), 0, false});
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < report.entries.size(); idx = next++) {
            auto& e = report.entries[idx];
            if (e.oracle.has_loops()) {
                continue;
            }
            try {
                e.exact = chromatic_number_exact(build_graph(e.params), budget);
            } catch (const budget_exceeded&) {
                e.budget_exhausted = true;
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                failure = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (const auto& e : report.entries) {
        const auto n = e.params.order();
        if (report.rows.empty() || report.rows.back().n != n) {
            report.rows.push_back({n, 0, 0, {}});
        }
        auto& row = report.rows.back();
        ++row.classes;
        if (e.oracle.has_loops()) {
            ++row.loops;
        } else if (e.exact > 0) {
            ++row.by_chi[static_cast<std::size_t>(e.exact)];
        }
    }
    return report;
}

} // namespace torchroma
