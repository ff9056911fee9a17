#pragma once

#include <vector>

#include "skeg/geom.hpp"

namespace skeg {

/// A validated simple polygon. Vertices are stored counterclockwise;
/// construction goes through validate_polygon.
struct Polygon {
    std::vector<Point> vertices;
    std::vector<int> reflexIndices; // interior angle > pi, ascending
    double area = 0.0;              // positive

    int size() const { return static_cast<int>(vertices.size()); }
    const Point& vertex(int i) const { return vertices[static_cast<std::size_t>(i)]; }
};

/// Validate and normalize a vertex loop.
///
/// Throws TooFewVertices (< 3), DegenerateVertex (repeated or
/// collinear-adjacent vertices within kCrossTol), SelfIntersecting
/// (non-adjacent edges touching or crossing). Clockwise input is reversed
/// in place, keeping the first vertex first.
Polygon validate_polygon(std::vector<Point> vertices);

inline bool is_convex(const Polygon& p) { return p.reflexIndices.empty(); }

/// Star-shaped stress fixture: `spikes` tips at tipRadius alternating with
/// reflex valleys at valleyRadius, equally spaced in angle about the origin.
/// From the origin the geodesic distance to every tip is tipRadius and to
/// every valley vertex is valleyRadius.
Polygon generate_star_polygon(int spikes, double tipRadius = 2.0, double valleyRadius = 0.5);

/// Boundary-inclusive point containment (crossing parity plus an
/// on-boundary check within kCrossTol).
bool point_in_polygon(const Polygon& p, Point q);

/// True iff segment [a,b] stays inside the closed polygon. Grazing a reflex
/// vertex or running along the boundary counts as inside.
bool segment_in_polygon(const Polygon& p, Point a, Point b);

} // namespace skeg
