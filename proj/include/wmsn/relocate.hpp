#pragma once

#include <optional>
#include <vector>

#include "wmsn/cover.hpp"
#include "wmsn/grid.hpp"

namespace wmsn {

/// One accepted relocation. cells_gained is the net coverage delta
/// (newly covered minus uniquely covered cells vacated at the old pose).
struct Move {
    NodeId node;
    SensorPose from;
    SensorPose to;
    std::size_t cells_gained;
};

struct RelocationPlan {
    std::vector<Move> moves;
    std::size_t rejected = 0;
    double eta_before = 0.0;
    double eta_after = 0.0;
};

/// Redundant ids ordered by descending in-region covered-cell count of their
/// current footprint, ties to the lowest id.
std::vector<NodeId> rank_redundant(const std::vector<NodeId>& ids,
                                   const CoverageState& state);

/**
 * The uncovered cell whose footprint-equivalent disc (center distance <= radius)
 * holds the most uncovered cells; ties to the lowest cell index. Scoring runs in
 * parallel over uncovered cells via per-row prefix sums. Empty input -> nullopt
 * (the relocation loop stops early).
 */
std::optional<CellIndex> best_target_cell(const CellSet& uncovered, double radius,
                                          const Region& region);

/// Serial brute-force reference for best_target_cell; identical output.
std::optional<CellIndex> best_target_cell_serial(const CellSet& uncovered, double radius,
                                                 const Region& region);

struct RelocationOutcome {
    bool accepted = false;
    SensorPose pose;              ///< new pose when accepted, original otherwise
    std::size_t cells_gained = 0; ///< cells newly covered by the placement
    std::size_t cells_lost = 0;   ///< uniquely covered cells vacated at the old pose
};

/**
 * Try to move one redundant node so its footprint centroid lands on the target
 * cell center. Sixteen candidate azimuths are evaluated (in parallel, with a
 * deterministic argmax over newly covered cells; ties to the lowest azimuth
 * index); z is kept and gamma re-optimized at the candidate position. The move
 * is rejected unless the footprint contains the target cell, the position stays
 * inside the region and the net coverage change is strictly positive; a
 * rejected node keeps its old pose and the state is left untouched.
 */
RelocationOutcome relocate_node(NodeId id, CellIndex target, const SensorPose& current,
                                const ModelParams& params, const Region& region,
                                PredicateMode mode, CoverageState& state);

/**
 * Move redundant nodes in rank order, updating poses and state after each
 * accepted move; stops when the redundant list is exhausted or nothing is
 * uncovered. Total coverage never decreases.
 */
RelocationPlan relocate_all(const CoverSolution& solution, std::vector<SensorPose>& poses,
                            const ModelParams& params, const Region& region,
                            PredicateMode mode, CoverageState& state);

}  // namespace wmsn
