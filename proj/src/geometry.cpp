#include "wmsn/geometry.hpp"

#include <cassert>
#include <string>

namespace wmsn {

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

void ModelParams::validate() const {
    if (!(alpha > 0.0 && alpha < kPi / 2.0))
        throw DomainError("alpha must lie in (0, pi/2), got " + std::to_string(alpha));
    if (!(beta > 0.0 && beta < kPi / 2.0))
        throw DomainError("beta must lie in (0, pi/2), got " + std::to_string(beta));
    if (!(beta <= k_max))
        throw DomainError("beta (" + std::to_string(beta) + ") must not exceed k_max (" +
                          std::to_string(k_max) + ")");
    if (!(k_max + beta < kPi / 2.0))
        throw DomainError("k_max + beta (" + std::to_string(k_max + beta) +
                          ") must stay below pi/2; tan(gamma + beta) leaves the trapezoid regime");
}

SlantDistances near_far(const SensorPose& pose, const ModelParams& params) {
    if (!(pose.z > 0.0))
        throw DomainError("mount height must be positive, got " + std::to_string(pose.z));
    if (pose.gamma < params.beta)
        throw DomainError("gamma (" + std::to_string(pose.gamma) + ") below beta (" +
                          std::to_string(params.beta) + "): footprint is not a trapezoid");
    if (pose.gamma + params.beta >= kPi / 2.0)
        throw DomainError("gamma + beta (" + std::to_string(pose.gamma + params.beta) +
                          ") reaches pi/2: far edge diverges");
    const double near_dist = pose.z * std::tan(pose.gamma - params.beta);
    const double far_dist = pose.z * std::tan(pose.gamma + params.beta);
    const double inv_cos_alpha = 1.0 / std::cos(params.alpha);
    return {near_dist, far_dist, near_dist * inv_cos_alpha, far_dist * inv_cos_alpha};
}

Footprint footprint(const SensorPose& pose, const ModelParams& params) {
    const SlantDistances s = near_far(pose, params);
    Footprint fp;
    fp.p_prime = {pose.x, pose.y};
    fp.near_dist = s.near_dist;
    fp.far_dist = s.far_dist;
    fp.d1 = s.d1;
    fp.d2 = s.d2;
    fp.height = s.far_dist - s.near_dist;

    const double tan_alpha = std::tan(params.alpha);
    const double near_half = s.near_dist * tan_alpha;  // |D1D2| / 2
    const double far_half = s.far_dist * tan_alpha;    // |D3D4| / 2
    fp.area = fp.height * (near_half + far_half);      // (h/2) * (|D1D2| + |D3D4|)

    const Vec2 u{std::cos(pose.theta), std::sin(pose.theta)};
    const Vec2 v{-u.y, u.x};  // left-hand perpendicular
    fp.vertices[0] = fp.p_prime + s.near_dist * u - near_half * v;  // D1 at theta - alpha
    fp.vertices[1] = fp.p_prime + s.near_dist * u + near_half * v;  // D2 at theta + alpha
    fp.vertices[2] = fp.p_prime + s.far_dist * u + far_half * v;    // D3 at theta + alpha
    fp.vertices[3] = fp.p_prime + s.far_dist * u - far_half * v;    // D4 at theta - alpha
    return fp;
}

double volume(const SensorPose& pose, const ModelParams& params) {
    const Footprint fp = footprint(pose, params);
    const double v = fp.area * pose.z;
#ifndef NDEBUG
    const double v_slant =
        0.5 * pose.z * (fp.d2 + fp.d1) * (fp.d2 - fp.d1) * std::sin(2.0 * params.alpha);
    assert(std::abs(v - v_slant) <= 1e-9 * std::max(std::abs(v), 1.0));
#endif
    return v;
}

double footprint_centroid_distance(double near_dist, double far_dist) {
    const double sum = near_dist + far_dist;
    if (sum <= 0.0) return 0.0;
    return (2.0 / 3.0) *
           (near_dist * near_dist + near_dist * far_dist + far_dist * far_dist) / sum;
}

CoverPredicate::CoverPredicate(const SensorPose& pose, const ModelParams& params,
                               PredicateMode mode)
    : origin_{pose.x, pose.y},
      dir_{std::cos(pose.theta), std::sin(pose.theta)},
      cos_alpha_{std::cos(params.alpha)},
      mode_{mode} {
    const SlantDistances s = near_far(pose, params);
    near_ = s.near_dist;
    far_ = s.far_dist;
    d1_ = s.d1;
    d2_ = s.d2;
}

bool covers_point(const SensorPose& pose, const ModelParams& params, Vec2 a,
                  PredicateMode mode) {
    return CoverPredicate(pose, params, mode)(a);
}

}  // namespace wmsn
