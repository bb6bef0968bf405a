#pragma once

#include <cmath>
#include <vector>

namespace uavnet {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double h = 0.0;
};

/// Terrestrial small-cell base station: fixed ground node with a downlink
/// rate demand drawn from the configured menu.
struct Tsbs {
    int id = 0;
    Point2 pos;
    double demand_bps = 0.0;
};

/// Aerial fronthaul hub; the entities being positioned.
struct Uav {
    int id = 0;
    Point3 pos;
};

inline double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace uavnet
