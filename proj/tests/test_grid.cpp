#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wmsn/grid.hpp"

using namespace wmsn;

namespace {

const ModelParams kParams{deg_to_rad(22.5), deg_to_rad(30.0), deg_to_rad(50.0)};
const Region kRegion{500.0, 500.0, 1.0};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("region validation and cell math") {
    CHECK_THROWS_AS((Region{10.0, 10.0, 3.0}.validate()), DomainError);
    CHECK_THROWS_AS((Region{0.0, 10.0, 1.0}.validate()), DomainError);
    CHECK_NOTHROW(kRegion.validate());

    const Region r{6.0, 4.0, 2.0};
    CHECK(r.rows() == 2);
    CHECK(r.cols() == 3);
    CHECK(r.cell_count() == 6);
    CHECK(r.cell_at(0, 0) == 0);
    CHECK(r.cell_at(1, 2) == 5);
    // Row 0 hugs the y = 0 edge.
    CHECK(r.cell_center(0).y == doctest::Approx(1.0));
    CHECK(r.cell_center(5).x == doctest::Approx(5.0));
    CHECK(r.cell_center(5).y == doctest::Approx(3.0));
}

TEST_CASE("footprint entirely outside the region rasterizes to nothing") {
    const SensorPose pose{-50.0, 250.0, 10.0, kPi, deg_to_rad(45.0)};  // facing -x
    CHECK(covered_cells(pose, kParams, kRegion).empty());
}

TEST_CASE("rasterization emits exactly the covered cell centers") {
    const Region small{60.0, 60.0, 1.0};
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const SensorPose pose{uniform(rng, 0.0, 60.0), uniform(rng, 0.0, 60.0),
                              uniform(rng, 2.0, 8.0), uniform(rng, 0.0, kTwoPi),
                              uniform(rng, kParams.beta, kParams.k_max)};
        const auto mode = trial % 2 == 0 ? PredicateMode::Quad : PredicateMode::Annular;
        const CellSet cells = covered_cells(pose, kParams, small, mode);
        CHECK(std::is_sorted(cells.begin(), cells.end()));
        const std::set<CellIndex> have(cells.begin(), cells.end());
        const CoverPredicate pred(pose, kParams, mode);
        for (CellIndex c = 0; c < small.cell_count(); ++c)
            CHECK(pred(small.cell_center(c)) == (have.count(c) > 0));
    }
}

TEST_CASE("parallel rasterization matches the serial reference") {
    std::mt19937_64 rng(11);
    std::vector<SensorPose> poses;
    for (int i = 0; i < 40; ++i)
        poses.push_back({uniform(rng, 0.0, 500.0), uniform(rng, 0.0, 500.0),
                         uniform(rng, 5.0, 13.0), uniform(rng, 0.0, kTwoPi),
                         uniform(rng, kParams.beta, kParams.k_max)});
    const auto par = rasterize_all(poses, kParams, kRegion);
    const auto ser = rasterize_all_serial(poses, kParams, kRegion);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
    for (std::size_t i = 0; i < poses.size(); ++i)
        CHECK(covered_cells(poses[i], kParams, kRegion) == ser[i]);
}

TEST_CASE("degenerate footprint rasterizes close to its analytic area") {
    const SensorPose pose{250.0, 250.0, 12.0, 0.3, kParams.beta};
    const Footprint fp = footprint(pose, kParams);
    const CellSet cells = covered_cells(pose, kParams, kRegion);
    const double covered_area = static_cast<double>(cells.size());
    const double far_edge = 2.0 * fp.far_dist * std::tan(kParams.alpha);
    const double perimeter = far_edge + 2.0 * fp.d2;
    CHECK(std::abs(covered_area - fp.area) <= perimeter * kRegion.cell_size + 4.0);
}

TEST_CASE("large footprints rasterize within 5% of the analytic area") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 25) {
        const SensorPose pose{uniform(rng, 150.0, 350.0), uniform(rng, 150.0, 350.0),
                              uniform(rng, 8.0, 13.0), uniform(rng, 0.0, kTwoPi),
                              uniform(rng, deg_to_rad(40.0), kParams.k_max)};
        const Footprint fp = footprint(pose, kParams);
        if (fp.d2 < 20.0 * kRegion.cell_size) continue;
        bool inside = true;
        for (const Vec2& v : fp.vertices) inside = inside && kRegion.contains(v);
        if (!inside) continue;
        ++checked;
        const double covered_area =
            static_cast<double>(covered_cells(pose, kParams, kRegion).size());
        CHECK(std::abs(covered_area - fp.area) <= 0.05 * fp.area);
    }
}

TEST_CASE("covered-cell count scales quadratically with footprint scale") {
    // All footprint lengths are proportional to z, so doubling z doubles the
    // linear scale.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        SensorPose pose{250.0, 250.0, uniform(rng, 5.0, 6.5), uniform(rng, 0.0, kTwoPi),
                        uniform(rng, deg_to_rad(42.0), kParams.k_max)};
        const double n1 = static_cast<double>(covered_cells(pose, kParams, kRegion).size());
        pose.z *= 2.0;
        const double n2 = static_cast<double>(covered_cells(pose, kParams, kRegion).size());
        if (n1 < 400.0) continue;  // want >= 20 cells across
        CHECK(n2 == doctest::Approx(4.0 * n1).epsilon(0.10));
    }
}

TEST_CASE("coverage ratio on hand-built sets") {
    const Region r{10.0, 10.0, 1.0};
    CoverageState state(r, 3);
    CHECK(state.coverage_ratio() == 0.0);  // no nodes

    CellSet a, b, c;
    for (CellIndex i = 0; i < 10; ++i) a.push_back(i);        // row 0
    for (CellIndex i = 5; i < 15; ++i) b.push_back(i);        // overlaps a
    for (CellIndex i = 90; i < 100; ++i) c.push_back(i);      // row 9
    state.set_node(0, a);
    state.set_node(1, b);
    state.set_node(2, c);
    CHECK(state.covered_count() == 25);
    CHECK(state.coverage_ratio() == doctest::Approx(0.25));

    CoverageState full(r, 1);
    CellSet everything(r.cell_count());
    std::iota(everything.begin(), everything.end(), 0u);
    full.set_node(0, everything);
    CHECK(full.coverage_ratio() == 1.0);
}

TEST_CASE("incremental union matches a from-scratch recomputation") {
    const Region r{20.0, 20.0, 1.0};
    CoverageState state(r, 8);
    std::map<NodeId, std::set<CellIndex>> shadow;
    std::mt19937_64 rng(41);

    for (int step = 0; step < 200; ++step) {
        const NodeId id = static_cast<NodeId>(rng() % 8);
        const int op = static_cast<int>(rng() % 3);
        if (op == 0) {
            state.remove_node(id);
            shadow.erase(id);
        } else {
            CellSet cells;
            const std::size_t count = rng() % 60;
            std::set<CellIndex> unique;
            for (std::size_t i = 0; i < count; ++i)
                unique.insert(static_cast<CellIndex>(rng() % r.cell_count()));
            cells.assign(unique.begin(), unique.end());
            shadow[id] = unique;
            state.set_node(id, std::move(cells));
        }
        std::set<CellIndex> union_oracle;
        for (const auto& [n, s] : shadow) union_oracle.insert(s.begin(), s.end());
        CHECK(state.covered_count() == union_oracle.size());
        CHECK(state.recount() == union_oracle.size());
    }
}

TEST_CASE("coverage is monotone under node insertions and removals") {
    const Region r{20.0, 20.0, 1.0};
    CoverageState state(r, 4);
    std::mt19937_64 rng(43);
    double last = 0.0;
    for (NodeId id = 0; id < 4; ++id) {
        CellSet cells;
        for (int i = 0; i < 50; ++i) cells.push_back(static_cast<CellIndex>(rng() % 400));
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        state.set_node(id, std::move(cells));
        CHECK(state.coverage_ratio() >= last);
        last = state.coverage_ratio();
    }
    for (NodeId id = 0; id < 4; ++id) {
        state.remove_node(id);
        CHECK(state.coverage_ratio() <= last);
        last = state.coverage_ratio();
    }
}

TEST_CASE("analytic coverage fixpoints") {
    CHECK(analytic_eta(0.5, 1) == doctest::Approx(0.5));
    CHECK(analytic_eta(0.5, 2) == doctest::Approx(0.75));
    CHECK(analytic_eta(0.0, 10) == 0.0);
    CHECK_THROWS_AS(analytic_eta(1.0, 3), DomainError);
    CHECK_THROWS_AS(analytic_eta(0.5, -1), DomainError);

    CHECK(analytic_min_nodes(0.0, 1.0, 2.0) == 0.0);
    CHECK(analytic_min_nodes(0.75, 0.5, 1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(analytic_min_nodes(1.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(analytic_min_nodes(0.5, 2.0, 1.0), DomainError);
}

TEST_CASE("analytic_min_nodes inverts analytic_eta") {
    // Once eta crowds 1, the double holding it has too few remaining bits for
    // a 1e-6 round trip, so stay in the representable regime eta <= 0.9999.
    std::mt19937_64 rng(47);
    const double g = 250000.0;
    int checked = 0;
    while (checked < 100) {
        const double s = uniform(rng, 1e-4, 0.7);
        const int n = static_cast<int>(rng() % 200);
        const double eta = analytic_eta(s, n);
        if (eta > 0.9999) continue;
        ++checked;
        const double m = analytic_min_nodes(eta, s * g, g);
        CHECK(std::abs(m - n) <= 1e-6);
    }
}
