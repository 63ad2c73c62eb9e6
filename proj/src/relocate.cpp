#include "wmsn/relocate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "wmsn/tilt.hpp"

namespace wmsn {

std::vector<NodeId> rank_redundant(const std::vector<NodeId>& ids,
                                   const CoverageState& state) {
    std::vector<NodeId> order(ids);
    std::sort(order.begin(), order.end(), [&state](NodeId a, NodeId b) {
        const std::size_t ca = state.node_cells(a).size();
        const std::size_t cb = state.node_cells(b).size();
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return order;
}

namespace {

// Largest |dx| such that dx^2 + dy^2 <= r2, matching the brute-force
// predicate bit for bit (sqrt alone can round across the boundary).
int disc_half_width(int dy, double r2) {
    const double q = r2 - static_cast<double>(dy) * dy;
    if (q < 0.0) return -1;
    int w = static_cast<int>(std::floor(std::sqrt(q)));
    while (static_cast<double>(w + 1) * (w + 1) + static_cast<double>(dy) * dy <= r2) ++w;
    while (w >= 0 && static_cast<double>(w) * w + static_cast<double>(dy) * dy > r2) --w;
    return w;
}

struct UncoveredIndex {
    std::vector<std::uint8_t> bitmap;       // rows*cols
    std::vector<std::int32_t> row_prefix;   // rows*(cols+1)
    int rows, cols;

    UncoveredIndex(const CellSet& uncovered, const Region& region)
        : rows(region.rows()), cols(region.cols()) {
        bitmap.assign(static_cast<std::size_t>(rows) * cols, 0);
        for (CellIndex c : uncovered) bitmap[c] = 1;
        row_prefix.assign(static_cast<std::size_t>(rows) * (cols + 1), 0);
        for (int r = 0; r < rows; ++r) {
            std::int32_t acc = 0;
            const std::size_t base = static_cast<std::size_t>(r) * (cols + 1);
            for (int c = 0; c < cols; ++c) {
                row_prefix[base + c] = acc;
                acc += bitmap[static_cast<std::size_t>(r) * cols + c];
            }
            row_prefix[base + cols] = acc;
        }
    }

    std::int32_t row_range(int r, int c_lo, int c_hi) const {  // inclusive cols
        if (r < 0 || r >= rows) return 0;
        c_lo = std::max(c_lo, 0);
        c_hi = std::min(c_hi, cols - 1);
        if (c_lo > c_hi) return 0;
        const std::size_t base = static_cast<std::size_t>(r) * (cols + 1);
        return row_prefix[base + c_hi + 1] - row_prefix[base + c_lo];
    }
};

}  // namespace

std::optional<CellIndex> best_target_cell(const CellSet& uncovered, double radius,
                                          const Region& region) {
    if (uncovered.empty()) return std::nullopt;
    const UncoveredIndex idx(uncovered, region);
    const double rc = radius / region.cell_size;
    const double r2 = rc * rc;
    const int dy_max = disc_half_width(0, r2);
    std::vector<int> half_width(2 * dy_max + 1);
    for (int dy = -dy_max; dy <= dy_max; ++dy)
        half_width[dy + dy_max] = disc_half_width(dy, r2);

    std::vector<std::int32_t> scores(uncovered.size());
    const int n = static_cast<int>(uncovered.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const int row = static_cast<int>(uncovered[i]) / idx.cols;
        const int col = static_cast<int>(uncovered[i]) % idx.cols;
        std::int32_t score = 0;
        for (int dy = -dy_max; dy <= dy_max; ++dy) {
            const int w = half_width[dy + dy_max];
            score += idx.row_range(row + dy, col - w, col + w);
        }
        scores[i] = score;
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < uncovered.size(); ++i)
        if (scores[i] > scores[best]) best = i;  // ties: lowest cell index wins
    return uncovered[best];
}

std::optional<CellIndex> best_target_cell_serial(const CellSet& uncovered, double radius,
                                                 const Region& region) {
    if (uncovered.empty()) return std::nullopt;
    const int rows = region.rows();
    const int cols = region.cols();
    std::vector<std::uint8_t> bitmap(static_cast<std::size_t>(rows) * cols, 0);
    for (CellIndex c : uncovered) bitmap[c] = 1;

    const double rc = radius / region.cell_size;
    const double r2 = rc * rc;
    const int reach = disc_half_width(0, r2);

    CellIndex best_cell = uncovered.front();
    std::int64_t best_score = -1;
    for (CellIndex cell : uncovered) {
        const int row = static_cast<int>(cell) / cols;
        const int col = static_cast<int>(cell) % cols;
        std::int64_t score = 0;
        for (int dy = -reach; dy <= reach; ++dy) {
            const int r = row + dy;
            if (r < 0 || r >= rows) continue;
            for (int dx = -reach; dx <= reach; ++dx) {
                const int c = col + dx;
                if (c < 0 || c >= cols) continue;
                if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy > r2) continue;
                score += bitmap[static_cast<std::size_t>(r) * cols + c];
            }
        }
        if (score > best_score) {
            best_score = score;
            best_cell = cell;
        }
    }
    return best_cell;
}

namespace {

// Fixed-point placement: anchor the footprint centroid on the target while
// re-optimizing gamma at the induced position. Fails when the position leaves
// the region.
std::optional<SensorPose> candidate_pose(const SensorPose& base, double theta, Vec2 target,
                                         const ModelParams& params, const Region& region) {
    SensorPose p = base;
    p.theta = theta;
    const Vec2 u{std::cos(theta), std::sin(theta)};
    for (int it = 0; it < 8; ++it) {
        const SlantDistances s = near_far(p, params);
        const double c = footprint_centroid_distance(s.near_dist, s.far_dist);
        p.x = target.x - c * u.x;
        p.y = target.y - c * u.y;
        if (!region.contains({p.x, p.y})) return std::nullopt;
        p.gamma = optimal_tilt(p, params, region);
    }
    return p;
}

}  // namespace

RelocationOutcome relocate_node(NodeId id, CellIndex target, const SensorPose& current,
                                const ModelParams& params, const Region& region,
                                PredicateMode mode, CoverageState& state) {
    RelocationOutcome out;
    out.pose = current;

    const CellSet old_cells = state.node_cells(id);
    std::size_t unique_loss = 0;
    for (CellIndex c : old_cells)
        if (state.cover_count(c) == 1) ++unique_loss;

    state.remove_node(id);

    const Vec2 target_center = region.cell_center(target);
    constexpr int kAzimuths = 16;
    struct Candidate {
        bool valid = false;
        SensorPose pose;
        CellSet cells;
        std::size_t gain = 0;
    };
    std::vector<Candidate> candidates(kAzimuths);

#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < kAzimuths; ++k) {
        const double theta = kTwoPi * k / kAzimuths;
        auto pose = candidate_pose(current, theta, target_center, params, region);
        if (!pose) continue;
        if (!covers_point(*pose, params, target_center, mode)) continue;
        Candidate& cand = candidates[k];
        cand.pose = *pose;
        cand.cells = covered_cells_serial(*pose, params, region, mode);
        for (CellIndex c : cand.cells)
            if (state.cover_count(c) == 0) ++cand.gain;
        cand.valid = true;
    }

    int best = -1;
    for (int k = 0; k < kAzimuths; ++k) {
        if (!candidates[k].valid) continue;
        if (best < 0 || candidates[k].gain > candidates[best].gain) best = k;
    }

    const bool accept =
        best >= 0 && static_cast<long long>(candidates[best].gain) >
                         static_cast<long long>(unique_loss);
    if (!accept) {
        state.set_node(id, old_cells);  // restore; coverage unchanged
        out.accepted = false;
        return out;
    }

    out.accepted = true;
    out.pose = candidates[best].pose;
    out.cells_gained = candidates[best].gain;
    out.cells_lost = unique_loss;
    state.set_node(id, std::move(candidates[best].cells));
    return out;
}

RelocationPlan relocate_all(const CoverSolution& solution, std::vector<SensorPose>& poses,
                            const ModelParams& params, const Region& region,
                            PredicateMode mode, CoverageState& state) {
    RelocationPlan plan;
    plan.eta_before = state.coverage_ratio();

    const std::vector<NodeId> order = rank_redundant(solution.redundant, state);
    for (NodeId id : order) {
        const CellSet uncovered = state.uncovered();
        if (uncovered.empty()) break;
        const Footprint fp = footprint(poses[id], params);
        const double radius = std::sqrt(std::max(fp.area, 0.0) / kPi);
        const auto target = best_target_cell(uncovered, radius, region);
        if (!target) break;

        const double eta_pre = state.coverage_ratio();
        const RelocationOutcome out =
            relocate_node(id, *target, poses[id], params, region, mode, state);
        if (out.accepted) {
            plan.moves.push_back({id, poses[id], out.pose, out.cells_gained - out.cells_lost});
            poses[id] = out.pose;
        } else {
            ++plan.rejected;
        }
        assert(state.coverage_ratio() >= eta_pre);
        (void)eta_pre;
    }

    plan.eta_after = state.coverage_ratio();
    assert(plan.eta_after >= plan.eta_before);
    return plan;
}

}  // namespace wmsn
