#pragma once

#include <cstdint>
#include <vector>

#include "wmsn/geometry.hpp"

namespace wmsn {

using CellIndex = std::uint32_t;
using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of cell indices (index = row * cols + col).
using CellSet = std::vector<CellIndex>;

/// Rectangular monitored region discretized into square cells.
struct Region {
    double width = 0.0;
    double height = 0.0;
    double cell_size = 1.0;

    /// Throws DomainError unless dimensions are positive integer multiples of cell_size.
    void validate() const;

    int rows() const { return static_cast<int>(std::llround(height / cell_size)); }
    int cols() const { return static_cast<int>(std::llround(width / cell_size)); }
    std::size_t cell_count() const {
        return static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols());
    }
    CellIndex cell_at(int row, int col) const {
        return static_cast<CellIndex>(row) * static_cast<CellIndex>(cols()) +
               static_cast<CellIndex>(col);
    }
    Vec2 cell_center(CellIndex idx) const {
        const int c = cols();
        const int row = static_cast<int>(idx) / c;
        const int col = static_cast<int>(idx) % c;
        return {(col + 0.5) * cell_size, (row + 0.5) * cell_size};
    }
    bool contains(Vec2 p) const {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }
};

/**
 * Cells whose center the footprint covers. Cells outside the region are never
 * emitted; footprints extending past the boundary are clipped by exclusion.
 * Rows are scanned in parallel; the result is sorted ascending.
 */
CellSet covered_cells(const SensorPose& pose, const ModelParams& params,
                      const Region& region, PredicateMode mode = PredicateMode::Quad);

/// Serial reference for covered_cells; identical output.
CellSet covered_cells_serial(const SensorPose& pose, const ModelParams& params,
                             const Region& region, PredicateMode mode = PredicateMode::Quad);

/// Per-node covered-cell sets, nodes processed in parallel.
std::vector<CellSet> rasterize_all(const std::vector<SensorPose>& poses,
                                   const ModelParams& params, const Region& region,
                                   PredicateMode mode = PredicateMode::Quad);

/// Serial reference for rasterize_all; identical output.
std::vector<CellSet> rasterize_all_serial(const std::vector<SensorPose>& poses,
                                          const ModelParams& params, const Region& region,
                                          PredicateMode mode = PredicateMode::Quad);

/**
 * Union of per-node covered-cell sets, maintained as a per-cell coverage count
 * so single-node moves cost O(changed cells). Single-writer.
 */
class CoverageState {
public:
    CoverageState() = default;
    CoverageState(const Region& region, std::size_t node_count);

    /// Install or replace a node's covered-cell set.
    void set_node(NodeId id, CellSet cells);
    void remove_node(NodeId id);

    const CellSet& node_cells(NodeId id) const { return node_cells_[id]; }
    const std::vector<CellSet>& family() const { return node_cells_; }
    std::size_t node_count() const { return node_cells_.size(); }
    std::size_t total_cells() const { return counts_.size(); }
    std::size_t covered_count() const { return covered_; }
    double coverage_ratio() const {
        return counts_.empty() ? 0.0 : static_cast<double>(covered_) / counts_.size();
    }
    std::uint16_t cover_count(CellIndex c) const { return counts_[c]; }
    bool is_covered(CellIndex c) const { return counts_[c] > 0; }

    CellSet uncovered() const;
    std::vector<std::uint8_t> covered_bitmap() const;

    /// Recount covered cells from the counts array (consistency checks).
    std::size_t recount() const;

private:
    std::vector<std::uint16_t> counts_;
    std::vector<CellSet> node_cells_;
    std::size_t covered_ = 0;
};

/// Coverage ratio |covered| / |cells| of a state.
double coverage_ratio(const CoverageState& state);

/// Expected coverage of n independently placed nodes of relative area s:
/// 1 - (1 - s)^n. Throws DomainError unless 0 <= s < 1 and n >= 0.
double analytic_eta(double s_over_g, int n);

/// Node count reaching coverage eta with disjoint footprints of area s in a
/// region of area g: ln(1 - eta) / (ln(g - s) - ln g). Callers ceil the result.
double analytic_min_nodes(double eta, double s, double g);

}  // namespace wmsn
