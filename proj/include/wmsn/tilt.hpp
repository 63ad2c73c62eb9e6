#pragma once

#include <vector>

#include "wmsn/grid.hpp"

namespace wmsn {

/// Region face a node's azimuth points toward; one class per node.
enum class BoundaryClass { FaceXMax, FaceYMax, FaceXMin, FaceYMin };

/**
 * Classify by azimuth quadrant: theta in [-45deg, 45deg) faces x = width,
 * [45deg, 135deg) faces y = height, [135deg, 225deg) faces x = 0,
 * [225deg, 315deg) faces y = 0. A boundary angle belongs to the interval it
 * opens (45deg -> FaceYMax).
 */
BoundaryClass classify(const SensorPose& pose, const Region& region);

/// Unclamped area-maximizing tilt: arctan(dist_to_faced_boundary / z) - beta.
/// At this tilt the far-edge midpoint |P'Q2| reaches the faced boundary.
double optimal_tilt_raw(const SensorPose& pose, const ModelParams& params,
                        const Region& region);

/// optimal_tilt_raw clamped into the admissible tilt range [beta, k_max].
double optimal_tilt(const SensorPose& pose, const ModelParams& params,
                    const Region& region);

/// Apply optimal_tilt to every pose independently (parallel across nodes);
/// only gamma changes. Idempotent.
std::vector<SensorPose> optimize_all(const std::vector<SensorPose>& poses,
                                     const ModelParams& params, const Region& region);

/// Serial reference for optimize_all; identical output.
std::vector<SensorPose> optimize_all_serial(const std::vector<SensorPose>& poses,
                                            const ModelParams& params, const Region& region);

}  // namespace wmsn
