#pragma once

#include <vector>

#include "wmsn/grid.hpp"

namespace wmsn {

/// Result of the greedy working-set selection.
struct CoverSolution {
    std::vector<NodeId> selected;   ///< in order of selection
    std::vector<NodeId> redundant;  ///< complement of selected, ascending ids
    std::size_t m_prime = 0;        ///< |selected|
    double achieved_eta = 0.0;      ///< covered fraction of the universe at exit
    bool shortfall = false;         ///< union of all sets could not reach the target
};

/**
 * Greedy set cover: repeatedly select the node whose set covers the most
 * not-yet-covered cells (ties to the lowest id) until the covered fraction of
 * the universe reaches target_eta or no node adds a new cell. Every family set
 * must be a subset of the universe. Per-iteration gain evaluation runs in
 * parallel; the selection matches the serial trace exactly.
 */
CoverSolution greedy_set_cover(const std::vector<CellSet>& family, const CellSet& universe,
                               double target_eta);

/// Serial reference for greedy_set_cover; identical output.
CoverSolution greedy_set_cover_serial(const std::vector<CellSet>& family,
                                      const CellSet& universe, double target_eta);

}  // namespace wmsn
