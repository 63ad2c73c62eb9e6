#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace wmsn {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Input violates the trapezoid sensing-model domain (e.g. gamma < beta).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Normalize an angle to [0, 2*pi).
double normalize_angle(double a);

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/**
 * Shared camera optics: half-angles of the sensing frustum and the tilt limit.
 * 2*alpha and 2*beta are the full horizontal/vertical fields of view.
 */
struct ModelParams {
    double alpha;  ///< horizontal half-FOV, radians
    double beta;   ///< vertical half-FOV, radians
    double k_max;  ///< maximum tilt angle, radians

    /// Throws DomainError unless 0 < alpha,beta < pi/2, beta <= k_max and
    /// k_max + beta < pi/2 (keeps tan(gamma + beta) finite for admissible tilts).
    void validate() const;
};

/**
 * One camera node: ground-plane position of the mount foot P', mount height,
 * azimuth of the sensing direction and tilt from straight-down geometry.
 */
struct SensorPose {
    double x = 0.0;      ///< ground-plane position of P'
    double y = 0.0;
    double z = 1.0;      ///< mount height, > 0
    double theta = 0.0;  ///< azimuth, radians
    double gamma = 0.0;  ///< tilt, radians, within [beta, k_max]
};

/// Point-coverage test variant: exact trapezoid, or the annular-sector reading
/// (slant-radius band d1 <= |P'A| <= d2 inside the angular wedge).
enum class PredicateMode { Quad, Annular };

/// Axial and slant distances from P' to the footprint's near/far edges.
struct SlantDistances {
    double near_dist;  ///< |P'Q1| = z * tan(gamma - beta)
    double far_dist;   ///< |P'Q2| = z * tan(gamma + beta)
    double d1;         ///< near_dist / cos(alpha), slant distance to near corners
    double d2;         ///< far_dist / cos(alpha), slant distance to far corners
};

/**
 * Ground trapezoid a tilted frustum projects onto the plane z = 0.
 *
 * Vertex order: D1, D2 are the near-edge corners at azimuth theta - alpha and
 * theta + alpha; D3, D4 the far-edge corners at theta + alpha and theta - alpha.
 */
struct Footprint {
    Vec2 p_prime;
    double near_dist = 0.0;
    double far_dist = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    std::array<Vec2, 4> vertices{};
    double height = 0.0;  ///< far_dist - near_dist
    double area = 0.0;
};

/// Throws DomainError if z <= 0, gamma < beta or gamma + beta >= pi/2.
SlantDistances near_far(const SensorPose& pose, const ModelParams& params);

Footprint footprint(const SensorPose& pose, const ModelParams& params);

/// Pyramid volume S * z. Debug builds assert it against the closed form
/// (z/2)(d2 + d1)(d2 - d1) sin(2*alpha).
double volume(const SensorPose& pose, const ModelParams& params);

/// Distance from P' to the footprint centroid along the azimuth:
/// (2/3) * (near^2 + near*far + far^2) / (near + far); (2/3)*far when collapsed.
double footprint_centroid_distance(double near_dist, double far_dist);

/**
 * Per-footprint point predicate with the trig precomputed, for bulk testing.
 * Boundary points count as covered.
 */
class CoverPredicate {
public:
    CoverPredicate(const SensorPose& pose, const ModelParams& params,
                   PredicateMode mode = PredicateMode::Quad);

    bool operator()(Vec2 a) const {
        const Vec2 r = a - origin_;
        const double dist = norm(r);
        const double proj = dot(r, dir_);
        if (proj < dist * cos_alpha_) return false;  // outside the angular wedge
        if (mode_ == PredicateMode::Quad) return proj >= near_ && proj <= far_;
        return dist >= d1_ && dist <= d2_;
    }

private:
    Vec2 origin_;
    Vec2 dir_;
    double cos_alpha_;
    double near_, far_, d1_, d2_;
    PredicateMode mode_;
};

bool covers_point(const SensorPose& pose, const ModelParams& params, Vec2 a,
                  PredicateMode mode = PredicateMode::Quad);

}  // namespace wmsn
