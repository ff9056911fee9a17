#include "skeg/geom.hpp"

#include <algorithm>

namespace skeg {

bool on_segment(Point a, Point b, Point p) {
    if (std::abs(orient(a, b, p)) > kCrossTol * std::max(1.0, dist(a, b))) return false;
    return std::min(a.x, b.x) - kCrossTol <= p.x && p.x <= std::max(a.x, b.x) + kCrossTol &&
           std::min(a.y, b.y) - kCrossTol <= p.y && p.y <= std::max(a.y, b.y) + kCrossTol;
}

bool segments_cross_properly(Point a, Point b, Point c, Point d) {
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    const double t1 = kCrossTol * std::max(1.0, dist(a, b));
    const double t2 = kCrossTol * std::max(1.0, dist(c, d));
    return ((o1 > t1 && o2 < -t1) || (o1 < -t1 && o2 > t1)) &&
           ((o3 > t2 && o4 < -t2) || (o3 < -t2 && o4 > t2));
}

void append_segment_hits(Point a, Point b, Point c, Point d, std::vector<double>& ts) {
    const Point r = b - a;
    const Point s = d - c;
    const double rlen = norm(r);
    const double slen = norm(s);
    if (rlen <= kCrossTol) return; // degenerate query segment
    const double denom = cross(r, s);

    if (std::abs(denom) > kCrossTol * std::max(1.0, rlen * slen)) {
        const double t = cross(c - a, s) / denom;
        const double u = cross(c - a, r) / denom;
        // Parameter slack equivalent to a kCrossTol contact distance.
        const double tEps = kCrossTol / rlen;
        const double uEps = slen > kCrossTol ? kCrossTol / slen : 0.0;
        if (t >= -tEps && t <= 1.0 + tEps && u >= -uEps && u <= 1.0 + uEps) {
            ts.push_back(std::clamp(t, 0.0, 1.0));
        }
        return;
    }

    // Near-parallel: a contact requires (near-)collinearity.
    if (std::abs(cross(r, c - a)) > kCrossTol * std::max(1.0, rlen)) return;
    const double inv = 1.0 / norm2(r);
    double tc = dot(c - a, r) * inv;
    double td = dot(d - a, r) * inv;
    if (tc > td) std::swap(tc, td);
    const double lo = std::max(0.0, tc);
    const double hi = std::min(1.0, td);
    if (lo <= hi + kCrossTol / rlen) {
        ts.push_back(std::clamp(lo, 0.0, 1.0));
        ts.push_back(std::clamp(hi, 0.0, 1.0));
    }
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
    if (segments_cross_properly(a, b, c, d)) return true;
    if (on_segment(a, b, c) || on_segment(a, b, d)) return true;
    if (on_segment(c, d, a) || on_segment(c, d, b)) return true;
    // Gray zone: grazing contacts where every orientation test is inside
    // tolerance but no endpoint lies on the other segment.
    std::vector<double> ts;
    append_segment_hits(a, b, c, d, ts);
    return !ts.empty();
}

} // namespace skeg
