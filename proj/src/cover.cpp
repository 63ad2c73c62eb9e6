#include "wmsn/cover.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wmsn {

namespace {

struct GreedyScratch {
    std::vector<std::uint8_t> covered;  // indexed by cell
    std::size_t covered_count = 0;
    std::size_t universe_size = 0;

    explicit GreedyScratch(const std::vector<CellSet>& family, const CellSet& universe)
        : universe_size(universe.size()) {
        CellIndex max_cell = 0;
        for (CellIndex c : universe) max_cell = std::max(max_cell, c);
        for (const CellSet& s : family)
            for (CellIndex c : s) max_cell = std::max(max_cell, c);
        covered.assign(static_cast<std::size_t>(max_cell) + 1, 0);
    }

    std::size_t gain(const CellSet& s) const {
        std::size_t g = 0;
        for (CellIndex c : s)
            if (!covered[c]) ++g;
        return g;
    }

    void mark(const CellSet& s) {
        for (CellIndex c : s) {
            if (!covered[c]) {
                covered[c] = 1;
                ++covered_count;
            }
        }
    }

    double fraction() const {
        return universe_size == 0 ? 1.0
                                  : static_cast<double>(covered_count) / universe_size;
    }
};

template <typename GainFn>
CoverSolution greedy_core(const std::vector<CellSet>& family, const CellSet& universe,
                          double target_eta, GainFn&& compute_gains) {
    GreedyScratch scratch(family, universe);
    const std::size_t n = family.size();
    std::vector<std::uint8_t> picked(n, 0);
    std::vector<std::size_t> gains(n, 0);

    CoverSolution sol;
    std::size_t prev_gain = SIZE_MAX;
    while (scratch.fraction() < target_eta) {
        compute_gains(scratch, picked, gains);
        std::size_t best = 0;
        NodeId best_id = 0;
        bool found = false;
        for (NodeId i = 0; i < n; ++i) {
            if (!picked[i] && gains[i] > best) {
                best = gains[i];
                best_id = i;
                found = true;
            }
        }
        if (!found) {  // no node adds a new cell
            sol.shortfall = true;
            break;
        }
        assert(best <= prev_gain);  // marginal gains are non-increasing
        prev_gain = best;
        picked[best_id] = 1;
        scratch.mark(family[best_id]);
        sol.selected.push_back(best_id);
    }
    (void)prev_gain;

    sol.m_prime = sol.selected.size();
    sol.achieved_eta = scratch.fraction();
    for (NodeId i = 0; i < n; ++i)
        if (!picked[i]) sol.redundant.push_back(i);
    return sol;
}

}  // namespace

CoverSolution greedy_set_cover(const std::vector<CellSet>& family, const CellSet& universe,
                               double target_eta) {
    return greedy_core(family, universe, target_eta,
                       [&family](const GreedyScratch& scratch,
                                 const std::vector<std::uint8_t>& picked,
                                 std::vector<std::size_t>& gains) {
                           const int n = static_cast<int>(family.size());
#pragma omp parallel for schedule(static)
                           for (int i = 0; i < n; ++i)
                               gains[i] = picked[i] ? 0 : scratch.gain(family[i]);
                       });
}

CoverSolution greedy_set_cover_serial(const std::vector<CellSet>& family,
                                      const CellSet& universe, double target_eta) {
    return greedy_core(family, universe, target_eta,
                       [&family](const GreedyScratch& scratch,
                                 const std::vector<std::uint8_t>& picked,
                                 std::vector<std::size_t>& gains) {
                           for (std::size_t i = 0; i < family.size(); ++i)
                               gains[i] = picked[i] ? 0 : scratch.gain(family[i]);
                       });
}

}  // namespace wmsn
