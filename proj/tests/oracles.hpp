// Test-side oracles, kept independent of the library implementations they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "wmsn/geometry.hpp"

namespace oracles {

/// Shoelace polygon area (absolute value).
inline double shoelace_area(const std::vector<wmsn::Vec2>& poly) {
    double sum = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const wmsn::Vec2& a = poly[i];
        const wmsn::Vec2& b = poly[(i + 1) % poly.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(sum);
}

inline bool on_segment(wmsn::Vec2 a, wmsn::Vec2 b, wmsn::Vec2 p, double eps = 1e-12) {
    const wmsn::Vec2 ab = b - a;
    const wmsn::Vec2 ap = p - a;
    const double scale = std::max({1.0, std::abs(ab.x), std::abs(ab.y)});
    if (std::abs(cross(ab, ap)) > eps * scale * scale) return false;
    const double t = dot(ap, ab);
    return t >= -eps && t <= dot(ab, ab) + eps;
}

/// Winding-number point-in-polygon test; boundary points count as inside.
/// Works for either vertex orientation.
inline bool point_in_polygon(const std::vector<wmsn::Vec2>& poly, wmsn::Vec2 p) {
    int winding = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const wmsn::Vec2& a = poly[i];
        const wmsn::Vec2& b = poly[(i + 1) % poly.size()];
        if (on_segment(a, b, p)) return true;
        const double is_left = cross(b - a, p - a);
        if (a.y <= p.y) {
            if (b.y > p.y && is_left > 0.0) ++winding;
        } else {
            if (b.y <= p.y && is_left < 0.0) --winding;
        }
    }
    return winding != 0;
}

/// Straightforward sequential greedy cover trace: repeatedly take the set with
/// the most uncovered elements (ties to the lowest index) until the covered
/// fraction of the universe reaches the target or nothing new can be added.
inline std::vector<std::uint32_t> greedy_trace(
    const std::vector<std::vector<std::uint32_t>>& family,
    const std::vector<std::uint32_t>& universe, double target) {
    std::set<std::uint32_t> covered;
    std::vector<bool> used(family.size(), false);
    std::vector<std::uint32_t> trace;
    const auto fraction = [&] {
        return universe.empty() ? 1.0
                                : static_cast<double>(covered.size()) / universe.size();
    };
    while (fraction() < target) {
        std::size_t best_gain = 0;
        std::size_t best = family.size();
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (used[i]) continue;
            std::size_t gain = 0;
            for (std::uint32_t c : family[i])
                if (!covered.count(c)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == family.size()) break;
        used[best] = true;
        covered.insert(family[best].begin(), family[best].end());
        trace.push_back(static_cast<std::uint32_t>(best));
    }
    return trace;
}

/// Exhaustive minimum cover size reaching the target fraction of the universe.
/// Returns SIZE_MAX when no subset reaches it. Family size must stay small.
inline std::size_t exhaustive_min_cover(
    const std::vector<std::vector<std::uint32_t>>& family,
    const std::vector<std::uint32_t>& universe, double target) {
    const std::size_t n = family.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size >= best) continue;
        std::set<std::uint32_t> covered;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) covered.insert(family[i].begin(), family[i].end());
        const double frac = universe.empty()
                                ? 1.0
                                : static_cast<double>(covered.size()) / universe.size();
        if (frac >= target) best = size;
    }
    return best;
}

}  // namespace oracles
