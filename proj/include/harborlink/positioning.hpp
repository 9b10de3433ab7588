#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harborlink/geometry.hpp"

namespace harborlink::positioning {

using geometry::Box3;
using geometry::Vec3;

enum class Architecture { Nr, Fpr, Cfmr, Lsmr };

const char* to_string(Architecture a);
std::optional<Architecture> parse_architecture(std::string_view name);

/// Relay pose at one slot. Perched implies host is set and the position
/// coincides with the host ship's landing spot; Absent only occurs for
/// the no-relay architecture.
struct UavPose {
    enum class Mode { Absent, Hovering, Perched, InTransit };
    Vec3 position;
    Mode mode = Mode::Absent;
    std::optional<std::uint32_t> host; // ship index while perched / landing
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct KMeansResult {
    std::vector<Point2> centroids;
    std::vector<std::uint32_t> assignment; // point index -> cluster
    int iterations = 0;                    // Lloyd iterations of the winning start
    double objective = 0.0;                // sum of squared distances
    std::vector<double> objective_trace;   // objective after each iteration
};

/// Lloyd's algorithm from seeded random initial centroids, run to an
/// assignment fixpoint (or max_iter). Several seeded restarts are tried
/// internally and the lowest-objective result wins; everything is
/// deterministic in `seed`.
KMeansResult kmeans(std::span<const Point2> points, std::size_t k, std::uint64_t seed,
                    int max_iter = 100);

/// Fixed-position relay: midpoint of the BS-victim line at slot zero
/// (single-victim) or the center of the movement area (multi-victim);
/// altitude is the lowest that keeps line of sight to the BS and every
/// victim's slot-zero position. Throws std::runtime_error when no
/// altitude up to h_max works.
UavPose position_fpr(const Vec3& bs, std::span<const Vec3> victims_at_start, bool multi_ship,
                     double area_width, double area_length, std::span<const Box3> obstacles,
                     double h_max);

/// Centroid-tracking relay: hovers over the k=1 centroid of the current
/// victim positions at the minimum line-of-sight altitude.
UavPose position_cfmr(const Vec3& bs, std::span<const Vec3> ships, std::span<const Box3> obstacles,
                      double h_max);

/// Landing-spot relay: perches on the victim closest to the k=1 centroid
/// (ties to the lowest ship index). With one ship that ship hosts.
UavPose position_lsmr(std::span<const Vec3> ships, double ls_height);

struct TransitLegs {
    double horizontal_m = 0.0;
    double delta_h_m = 0.0; // signed, up positive
};

TransitLegs transit_legs(const UavPose& prev, const UavPose& next);

} // namespace harborlink::positioning
