#include "wmsn/grid.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace wmsn {

void Region::validate() const {
    if (!(width > 0.0 && height > 0.0 && cell_size > 0.0))
        throw DomainError("region dimensions and cell_size must be positive");
    const double r = height / cell_size;
    const double c = width / cell_size;
    if (std::abs(r - std::llround(r)) > 1e-9 || std::abs(c - std::llround(c)) > 1e-9)
        throw DomainError("width and height must be integer multiples of cell_size");
    if (cell_count() > static_cast<std::size_t>(UINT32_MAX))
        throw DomainError("grid exceeds 2^32 cells");
}

namespace {

struct CellWindow {
    int row_lo, row_hi;  // inclusive
    int col_lo, col_hi;
    bool empty;
};

// Cell rows/cols whose centers can fall inside the footprint's bounding box,
// widened by one cell and clamped to the region.
CellWindow cell_window(const Footprint& fp, const Region& region) {
    double min_x = fp.vertices[0].x, max_x = fp.vertices[0].x;
    double min_y = fp.vertices[0].y, max_y = fp.vertices[0].y;
    for (const Vec2& v : fp.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    CellWindow w;
    w.col_lo = std::max(0, static_cast<int>(std::floor(min_x / region.cell_size - 0.5)) - 1);
    w.col_hi = std::min(region.cols() - 1,
                        static_cast<int>(std::ceil(max_x / region.cell_size - 0.5)) + 1);
    w.row_lo = std::max(0, static_cast<int>(std::floor(min_y / region.cell_size - 0.5)) - 1);
    w.row_hi = std::min(region.rows() - 1,
                        static_cast<int>(std::ceil(max_y / region.cell_size - 0.5)) + 1);
    w.empty = w.col_lo > w.col_hi || w.row_lo > w.row_hi;
    return w;
}

void scan_row(const CoverPredicate& pred, const Region& region, int row, int col_lo,
              int col_hi, CellSet& out) {
    const double cy = (row + 0.5) * region.cell_size;
    for (int col = col_lo; col <= col_hi; ++col) {
        const double cx = (col + 0.5) * region.cell_size;
        if (pred({cx, cy})) out.push_back(region.cell_at(row, col));
    }
}

}  // namespace

CellSet covered_cells(const SensorPose& pose, const ModelParams& params,
                      const Region& region, PredicateMode mode) {
    const Footprint fp = footprint(pose, params);
    const CellWindow w = cell_window(fp, region);
    if (w.empty) return {};
    const CoverPredicate pred(pose, params, mode);

    const int n_rows = w.row_hi - w.row_lo + 1;
    std::vector<CellSet> per_row(n_rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_rows; ++i)
        scan_row(pred, region, w.row_lo + i, w.col_lo, w.col_hi, per_row[i]);

    CellSet cells;
    std::size_t total = 0;
    for (const CellSet& r : per_row) total += r.size();
    cells.reserve(total);
    for (const CellSet& r : per_row) cells.insert(cells.end(), r.begin(), r.end());
    return cells;
}

CellSet covered_cells_serial(const SensorPose& pose, const ModelParams& params,
                             const Region& region, PredicateMode mode) {
    const Footprint fp = footprint(pose, params);
    const CellWindow w = cell_window(fp, region);
    if (w.empty) return {};
    const CoverPredicate pred(pose, params, mode);
    CellSet cells;
    for (int row = w.row_lo; row <= w.row_hi; ++row)
        scan_row(pred, region, row, w.col_lo, w.col_hi, cells);
    return cells;
}

std::vector<CellSet> rasterize_all(const std::vector<SensorPose>& poses,
                                   const ModelParams& params, const Region& region,
                                   PredicateMode mode) {
    std::vector<CellSet> family(poses.size());
    const int n = static_cast<int>(poses.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        family[i] = covered_cells_serial(poses[i], params, region, mode);
    return family;
}

std::vector<CellSet> rasterize_all_serial(const std::vector<SensorPose>& poses,
                                          const ModelParams& params, const Region& region,
                                          PredicateMode mode) {
    std::vector<CellSet> family(poses.size());
    for (std::size_t i = 0; i < poses.size(); ++i)
        family[i] = covered_cells_serial(poses[i], params, region, mode);
    return family;
}

CoverageState::CoverageState(const Region& region, std::size_t node_count)
    : counts_(region.cell_count(), 0), node_cells_(node_count) {
    if (node_count > 65535) throw DomainError("coverage counts limited to 65535 nodes");
}

void CoverageState::set_node(NodeId id, CellSet cells) {
    assert(std::is_sorted(cells.begin(), cells.end()));
    remove_node(id);
    for (CellIndex c : cells) {
        if (counts_[c]++ == 0) ++covered_;
    }
    node_cells_[id] = std::move(cells);
}

void CoverageState::remove_node(NodeId id) {
    for (CellIndex c : node_cells_[id]) {
        if (--counts_[c] == 0) --covered_;
    }
    node_cells_[id].clear();
}

CellSet CoverageState::uncovered() const {
    CellSet out;
    out.reserve(counts_.size() - covered_);
    for (std::size_t c = 0; c < counts_.size(); ++c)
        if (counts_[c] == 0) out.push_back(static_cast<CellIndex>(c));
    return out;
}

std::vector<std::uint8_t> CoverageState::covered_bitmap() const {
    std::vector<std::uint8_t> bm(counts_.size(), 0);
    for (std::size_t c = 0; c < counts_.size(); ++c) bm[c] = counts_[c] > 0 ? 1 : 0;
    return bm;
}

std::size_t CoverageState::recount() const {
    std::size_t n = 0;
    for (std::uint16_t c : counts_)
        if (c > 0) ++n;
    return n;
}

double coverage_ratio(const CoverageState& state) { return state.coverage_ratio(); }

double analytic_eta(double s_over_g, int n) {
    if (!(s_over_g >= 0.0 && s_over_g < 1.0))
        throw DomainError("relative area must lie in [0, 1), got " + std::to_string(s_over_g));
    if (n < 0) throw DomainError("node count must be non-negative");
    // 1 - (1 - s)^n, evaluated through expm1/log1p to keep digits near 1
    return -std::expm1(static_cast<double>(n) * std::log1p(-s_over_g));
}

double analytic_min_nodes(double eta, double s, double g) {
    if (!(eta >= 0.0 && eta < 1.0))
        throw DomainError("eta must lie in [0, 1), got " + std::to_string(eta));
    if (!(s > 0.0 && s < g))
        throw DomainError("need 0 < s < g, got s=" + std::to_string(s) +
                          " g=" + std::to_string(g));
    if (eta == 0.0) return 0.0;
    // ln(1 - eta) / (ln(g - s) - ln g)
    return std::log1p(-eta) / std::log1p(-s / g);
}

}  // namespace wmsn
