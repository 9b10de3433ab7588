#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace harborlink::geometry {

/// 3D position in meters. z is height above sea level.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr bool operator==(const Vec3& o) const = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm_xy() const { return std::sqrt(x * x + y * y); }
};

/// Axis-aligned-in-yaw-frame obstacle volume. `center` is the base center
/// (center.z is the bottom of the box, normally 0 = sea level); the box
/// spans width along its local x, length along its local y and rises
/// `height` above the base. `yaw` rotates the local frame around z.
struct Box3 {
    Vec3 center;      // base center, z = bottom
    double width = 0.0;
    double length = 0.0;
    double height = 0.0;
    double yaw = 0.0; // radians

    bool valid() const { return width > 0.0 && length > 0.0 && height > 0.0; }
};

enum class LosState { Los, Nlos };

inline const char* to_string(LosState s) { return s == LosState::Los ? "los" : "nlos"; }

double distance3d(const Vec3& a, const Vec3& b);

/// True iff the open segment pq crosses the open interior of the box
/// (slab test in the box's yaw-rotated frame). Touching a face counts
/// as outside. Throws std::invalid_argument for a degenerate segment.
bool segment_intersects_box(const Vec3& p, const Vec3& q, const Box3& box);

/// Nlos iff the segment tx-rx crosses any obstacle's interior.
LosState classify_los(const Vec3& tx, const Vec3& rx, std::span<const Box3> obstacles);

struct MinAltitudeResult {
    double altitude = 0.0; // meters
    bool reachable = false; // false => no altitude in (0, h_max] sees every endpoint
};

/// Smallest z (binary search, 0.1 m tolerance) such that a node at
/// (xy, z) has line of sight to every endpoint. Returns h_max with
/// reachable = false when even h_max fails.
MinAltitudeResult min_los_altitude(double x, double y,
                                   std::span<const Vec3> endpoints,
                                   std::span<const Box3> obstacles,
                                   double h_max);

} // namespace harborlink::geometry
