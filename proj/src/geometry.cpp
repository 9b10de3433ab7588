#include "harborlink/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace harborlink::geometry {

double distance3d(const Vec3& a, const Vec3& b) {
    return (a - b).norm();
}

namespace {

// Clips the parameter interval [t0, t1] against one open slab
// lo < origin + t*dir < hi. Returns false when the interval empties.
bool clip_open_slab(double origin, double dir, double lo, double hi, double& t0, double& t1) {
    if (dir == 0.0) {
        return origin > lo && origin < hi;
    }
    double ta = (lo - origin) / dir;
    double tb = (hi - origin) / dir;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    return t0 < t1;
}

} // namespace

bool segment_intersects_box(const Vec3& p, const Vec3& q, const Box3& box) {
    if (p == q) {
        throw std::invalid_argument("segment_intersects_box: degenerate segment (p == q)");
    }
    // Transform both endpoints into the box frame: translate to the base
    // center, then rotate by -yaw around z.
    const double c = std::cos(box.yaw);
    const double s = std::sin(box.yaw);
    auto to_local = [&](const Vec3& v) {
        const double dx = v.x - box.center.x;
        const double dy = v.y - box.center.y;
        return Vec3{c * dx + s * dy, -s * dx + c * dy, v.z - box.center.z};
    };
    const Vec3 a = to_local(p);
    const Vec3 b = to_local(q);
    const Vec3 d = b - a;

    // Open interval in segment parameter space; the open-segment and
    // open-interior conventions are both enforced by strict clipping.
    double t0 = 0.0;
    double t1 = 1.0;
    const double hw = box.width / 2.0;
    const double hl = box.length / 2.0;
    if (!clip_open_slab(a.x, d.x, -hw, hw, t0, t1)) return false;
    if (!clip_open_slab(a.y, d.y, -hl, hl, t0, t1)) return false;
    if (!clip_open_slab(a.z, d.z, 0.0, box.height, t0, t1)) return false;
    return t0 < t1;
}

LosState classify_los(const Vec3& tx, const Vec3& rx, std::span<const Box3> obstacles) {
    for (const Box3& box : obstacles) {
        if (segment_intersects_box(tx, rx, box)) return LosState::Nlos;
    }
    return LosState::Los;
}

MinAltitudeResult min_los_altitude(double x, double y,
                                   std::span<const Vec3> endpoints,
                                   std::span<const Box3> obstacles,
                                   double h_max) {
    if (h_max <= 0.0) throw std::invalid_argument("min_los_altitude: h_max must be > 0");
    if (endpoints.empty()) throw std::invalid_argument("min_los_altitude: no endpoints");

    auto sees_all = [&](double z) {
        const Vec3 node{x, y, z};
        for (const Vec3& e : endpoints) {
            if (node == e) continue;
            if (classify_los(node, e, obstacles) == LosState::Nlos) return false;
        }
        return true;
    };

    constexpr double kTolerance = 0.1; // meters
    if (!sees_all(h_max)) {
        return {h_max, false};
    }
    // Obstacles are grounded boxes, so visibility is monotone in z:
    // lo is always blocked (or the 0 floor), hi always clear.
    double lo = 0.0;
    double hi = h_max;
    while (hi - lo > kTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (sees_all(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {hi, true};
}

} // namespace harborlink::geometry
