#include "harborlink/positioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "harborlink/kernels/kernels.hpp"

namespace harborlink::positioning {

const char* to_string(Architecture a) {
    switch (a) {
        case Architecture::Nr: return "nr";
        case Architecture::Fpr: return "fpr";
        case Architecture::Cfmr: return "cfmr";
        case Architecture::Lsmr: return "lsmr";
    }
    return "nr";
}

std::optional<Architecture> parse_architecture(std::string_view name) {
    if (name == "nr") return Architecture::Nr;
    if (name == "fpr") return Architecture::Fpr;
    if (name == "cfmr") return Architecture::Cfmr;
    if (name == "lsmr") return Architecture::Lsmr;
    return std::nullopt;
}

namespace {

struct LloydRun {
    std::vector<Point2> centroids;
    std::vector<std::uint32_t> assignment;
    int iterations = 0;
    double objective = 0.0;
    std::vector<double> trace;
};

LloydRun lloyd_once(std::span<const Point2> points, std::size_t k, std::uint64_t seed,
                    int max_iter, const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = points.size();
    std::mt19937_64 rng(seed);

    // Forgy initialization: k distinct points drawn without replacement.
    std::vector<std::uint32_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
    LloydRun run;
    run.centroids.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, n - 1);
        std::swap(pool[j], pool[pick(rng)]);
        run.centroids[j] = points[pool[j]];
    }

    std::vector<double> cx(k), cy(k), best_d2(n);
    std::vector<std::uint32_t> assignment(n), previous(n);
    std::vector<double> sum_x(k), sum_y(k);
    std::vector<std::size_t> count(k);

    auto assign_step = [&] {
        for (std::size_t j = 0; j < k; ++j) {
            cx[j] = run.centroids[j].x;
            cy[j] = run.centroids[j].y;
        }
        kernels::assign_nearest(xs.data(), ys.data(), n, cx.data(), cy.data(), k,
                                assignment.data(), best_d2.data());
        double objective = 0.0;
        for (double d2 : best_d2) objective += d2;
        run.trace.push_back(objective);
    };
    auto update_step = [&] {
        std::fill(sum_x.begin(), sum_x.end(), 0.0);
        std::fill(sum_y.begin(), sum_y.end(), 0.0);
        std::fill(count.begin(), count.end(), std::size_t{0});
        for (std::size_t i = 0; i < n; ++i) {
            sum_x[assignment[i]] += points[i].x;
            sum_y[assignment[i]] += points[i].y;
            ++count[assignment[i]];
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (count[j] > 0) {
                run.centroids[j] = {sum_x[j] / static_cast<double>(count[j]),
                                    sum_y[j] / static_cast<double>(count[j])};
            } else {
                // Reseed an emptied cluster on the point farthest from its
                // assigned centroid (deterministic, lowest index on ties).
                std::size_t farthest = 0;
                double worst = -1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (best_d2[i] > worst) {
                        worst = best_d2[i];
                        farthest = i;
                    }
                }
                run.centroids[j] = points[farthest];
            }
        }
    };

    // iterations counts completed assign+update rounds; the final
    // assignment pass only confirms the fixpoint.
    assign_step();
    while (run.iterations < max_iter) {
        previous = assignment;
        update_step();
        ++run.iterations;
        assign_step();
        if (assignment == previous) break;
    }
    run.objective = run.trace.back();
    run.assignment = std::move(assignment);
    return run;
}

} // namespace

KMeansResult kmeans(std::span<const Point2> points, std::size_t k, std::uint64_t seed,
                    int max_iter) {
    if (points.empty()) throw std::invalid_argument("kmeans: empty point set");
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (k > points.size()) throw std::invalid_argument("kmeans: k exceeds point count");
    if (max_iter < 1) throw std::invalid_argument("kmeans: max_iter must be >= 1");

    std::vector<double> xs(points.size()), ys(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        xs[i] = points[i].x;
        ys[i] = points[i].y;
    }

    // Restarts guard Lloyd against poor local minima; k = 1 converges to
    // the arithmetic mean from any start, so one run suffices.
    const int restarts = (k == 1) ? 1 : 8;
    std::optional<LloydRun> best;
    for (int r = 0; r < restarts; ++r) {
        LloydRun run = lloyd_once(points, k, seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r),
                                  max_iter, xs, ys);
        if (!best || run.objective < best->objective) best = std::move(run);
    }

    KMeansResult result;
    result.centroids = std::move(best->centroids);
    result.assignment = std::move(best->assignment);
    result.iterations = best->iterations;
    result.objective = best->objective;
    result.objective_trace = std::move(best->trace);
    return result;
}

namespace {

double min_altitude_or_throw(double x, double y, std::span<const Vec3> endpoints,
                             std::span<const Box3> obstacles, double h_max) {
    const geometry::MinAltitudeResult r =
        geometry::min_los_altitude(x, y, endpoints, obstacles, h_max);
    if (!r.reachable) {
        throw std::runtime_error("relay placement: no altitude up to ceiling gives line of "
                                 "sight to every endpoint");
    }
    return r.altitude;
}

Point2 centroid_of(std::span<const Vec3> ships) {
    std::vector<Point2> pts(ships.size());
    for (std::size_t i = 0; i < ships.size(); ++i) pts[i] = {ships[i].x, ships[i].y};
    const KMeansResult km = kmeans(pts, 1, 0);
    return km.centroids[0];
}

} // namespace

UavPose position_fpr(const Vec3& bs, std::span<const Vec3> victims_at_start, bool multi_ship,
                     double area_width, double area_length, std::span<const Box3> obstacles,
                     double h_max) {
    if (victims_at_start.empty()) throw std::invalid_argument("position_fpr: no victims");
    double x = 0.0;
    double y = 0.0;
    if (multi_ship) {
        x = area_width / 2.0;
        y = area_length / 2.0;
    } else {
        x = (bs.x + victims_at_start[0].x) / 2.0;
        y = (bs.y + victims_at_start[0].y) / 2.0;
    }
    std::vector<Vec3> endpoints(victims_at_start.begin(), victims_at_start.end());
    endpoints.push_back(bs);
    UavPose pose;
    pose.position = {x, y, min_altitude_or_throw(x, y, endpoints, obstacles, h_max)};
    pose.mode = UavPose::Mode::Hovering;
    return pose;
}

UavPose position_cfmr(const Vec3& bs, std::span<const Vec3> ships, std::span<const Box3> obstacles,
                      double h_max) {
    if (ships.empty()) throw std::invalid_argument("position_cfmr: no ships");
    const Point2 c = centroid_of(ships);
    std::vector<Vec3> endpoints(ships.begin(), ships.end());
    endpoints.push_back(bs);
    UavPose pose;
    pose.position = {c.x, c.y, min_altitude_or_throw(c.x, c.y, endpoints, obstacles, h_max)};
    pose.mode = UavPose::Mode::Hovering;
    return pose;
}

UavPose position_lsmr(std::span<const Vec3> ships, double ls_height) {
    if (ships.empty()) throw std::invalid_argument("position_lsmr: no ships");
    std::uint32_t host = 0;
    if (ships.size() > 1) {
        const Point2 c = centroid_of(ships);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ships.size(); ++i) {
            const double dx = ships[i].x - c.x;
            const double dy = ships[i].y - c.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) { // strict: ties keep the lowest ship index
                best = d2;
                host = static_cast<std::uint32_t>(i);
            }
        }
    }
    UavPose pose;
    pose.position = {ships[host].x, ships[host].y, ls_height};
    pose.mode = UavPose::Mode::Perched;
    pose.host = host;
    return pose;
}

TransitLegs transit_legs(const UavPose& prev, const UavPose& next) {
    TransitLegs legs;
    legs.horizontal_m = (Vec3{next.position.x, next.position.y, 0.0} -
                         Vec3{prev.position.x, prev.position.y, 0.0})
                            .norm_xy();
    legs.delta_h_m = next.position.z - prev.position.z;
    return legs;
}

} // namespace harborlink::positioning
