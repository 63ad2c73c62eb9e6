#include "wmsn/tilt.hpp"

#include <algorithm>
#include <cmath>

namespace wmsn {

BoundaryClass classify(const SensorPose& pose, const Region& /*region*/) {
    const double t = normalize_angle(pose.theta);
    if (t < 0.25 * kPi) return BoundaryClass::FaceXMax;
    if (t < 0.75 * kPi) return BoundaryClass::FaceYMax;
    if (t < 1.25 * kPi) return BoundaryClass::FaceXMin;
    if (t < 1.75 * kPi) return BoundaryClass::FaceYMin;
    return BoundaryClass::FaceXMax;
}

double optimal_tilt_raw(const SensorPose& pose, const ModelParams& params,
                        const Region& region) {
    double dist = 0.0;
    switch (classify(pose, region)) {
        case BoundaryClass::FaceXMax: dist = region.width - pose.x; break;
        case BoundaryClass::FaceYMax: dist = region.height - pose.y; break;
        case BoundaryClass::FaceXMin: dist = pose.x; break;
        case BoundaryClass::FaceYMin: dist = pose.y; break;
    }
    return std::atan2(dist, pose.z) - params.beta;
}

double optimal_tilt(const SensorPose& pose, const ModelParams& params,
                    const Region& region) {
    return std::clamp(optimal_tilt_raw(pose, params, region), params.beta, params.k_max);
}

std::vector<SensorPose> optimize_all(const std::vector<SensorPose>& poses,
                                     const ModelParams& params, const Region& region) {
    std::vector<SensorPose> out(poses);
    const int n = static_cast<int>(out.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) out[i].gamma = optimal_tilt(out[i], params, region);
    return out;
}

std::vector<SensorPose> optimize_all_serial(const std::vector<SensorPose>& poses,
                                            const ModelParams& params, const Region& region) {
    std::vector<SensorPose> out(poses);
    for (SensorPose& p : out) p.gamma = optimal_tilt(p, params, region);
    return out;
}

}  // namespace wmsn
