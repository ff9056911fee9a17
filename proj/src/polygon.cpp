#include "skeg/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "skeg/errors.hpp"

namespace skeg {

namespace {

double signed_area2(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        s += cross(v[i], v[(i + 1) % n]);
    }
    return s;
}

} // namespace

Polygon validate_polygon(std::vector<Point> vertices) {
    const int m = static_cast<int>(vertices.size());
    if (m < 3) {
        throw TooFewVertices("polygon needs at least 3 vertices, got " + std::to_string(m));
    }
    for (int i = 0; i < m; ++i) {
        const Point& a = vertices[static_cast<std::size_t>(i)];
        const Point& b = vertices[static_cast<std::size_t>((i + 1) % m)];
        if (std::abs(a.x - b.x) <= kCrossTol && std::abs(a.y - b.y) <= kCrossTol) {
            throw DegenerateVertex("vertices " + std::to_string(i) + " and " +
                                   std::to_string((i + 1) % m) + " coincide");
        }
    }
    for (int i = 0; i < m; ++i) {
        const Point& a = vertices[static_cast<std::size_t>((i + m - 1) % m)];
        const Point& b = vertices[static_cast<std::size_t>(i)];
        const Point& c = vertices[static_cast<std::size_t>((i + 1) % m)];
        if (std::abs(orient(a, b, c)) <= kCrossTol) {
            throw DegenerateVertex("vertex " + std::to_string(i) +
                                   " is collinear with its neighbours");
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (j == i + 1 || (i == 0 && j == m - 1)) continue; // adjacent edges share a vertex
            if (segments_intersect(vertices[static_cast<std::size_t>(i)],
                                   vertices[static_cast<std::size_t>((i + 1) % m)],
                                   vertices[static_cast<std::size_t>(j)],
                                   vertices[static_cast<std::size_t>((j + 1) % m)])) {
                throw SelfIntersecting("edges " + std::to_string(i) + " and " +
                                       std::to_string(j) + " intersect");
            }
        }
    }

    double a2 = signed_area2(vertices);
    if (a2 < 0.0) {
        // Clockwise input: reverse, keeping the first vertex first.
        std::reverse(vertices.begin() + 1, vertices.end());
        a2 = -a2;
    }

    Polygon p;
    p.vertices = std::move(vertices);
    p.area = 0.5 * a2;
    for (int i = 0; i < m; ++i) {
        const Point& a = p.vertex((i + m - 1) % m);
        const Point& b = p.vertex(i);
        const Point& c = p.vertex((i + 1) % m);
        if (orient(a, b, c) < 0.0) { // right turn on a CCW boundary
            p.reflexIndices.push_back(i);
        }
    }
    return p;
}

Polygon generate_star_polygon(int spikes, double tipRadius, double valleyRadius) {
    if (spikes < 3) {
        throw TooFewVertices("star polygon needs at least 3 spikes, got " +
                             std::to_string(spikes));
    }
    if (!(tipRadius > valleyRadius && valleyRadius > 0.0)) {
        throw DegenerateVertex("star polygon needs tipRadius > valleyRadius > 0");
    }
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(2 * spikes));
    const double step = 2.0 * std::numbers::pi / spikes;
    for (int i = 0; i < spikes; ++i) {
        const double aTip = step * i;
        const double aValley = step * (i + 0.5);
        v.push_back({tipRadius * std::cos(aTip), tipRadius * std::sin(aTip)});
        v.push_back({valleyRadius * std::cos(aValley), valleyRadius * std::sin(aValley)});
    }
    return validate_polygon(std::move(v));
}

bool point_in_polygon(const Polygon& p, Point q) {
    const auto& v = p.vertices;
    const int m = p.size();
    for (int i = 0; i < m; ++i) {
        if (on_segment(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % m)], q)) {
            return true;
        }
    }
    bool in = false;
    for (int i = 0, j = m - 1; i < m; j = i++) {
        const Point& vi = v[static_cast<std::size_t>(i)];
        const Point& vj = v[static_cast<std::size_t>(j)];
        if ((vi.y > q.y) != (vj.y > q.y)) {
            const double xCross = vj.x + (vi.x - vj.x) * (q.y - vj.y) / (vi.y - vj.y);
            if (q.x < xCross) in = !in;
        }
    }
    return in;
}

bool segment_in_polygon(const Polygon& p, Point a, Point b) {
    if (!point_in_polygon(p, a) || !point_in_polygon(p, b)) return false;
    if (dist(a, b) <= kCrossTol) return true;
    // Split [a,b] at every boundary contact; the segment is inside iff every
    // open piece between contacts is. One interior sample per piece decides.
    std::vector<double> ts{0.0, 1.0};
    const int m = p.size();
    for (int i = 0; i < m; ++i) {
        append_segment_hits(a, b, p.vertex(i), p.vertex((i + 1) % m), ts);
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] - ts[i] <= 1e-12) continue;
        const Point mid = a + (0.5 * (ts[i] + ts[i + 1])) * (b - a);
        if (!point_in_polygon(p, mid)) return false;
    }
    return true;
}

} // namespace skeg
