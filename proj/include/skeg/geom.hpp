#pragma once

#include <cmath>
#include <vector>

namespace skeg {

/// Absolute tolerance on cross products for on-segment / collinearity tests.
inline constexpr double kCrossTol = 1e-12;

/// Tolerance for distance agreement between independent code paths
/// (funnel engine vs. oracle, piece continuity, coverage recounts).
inline constexpr double kDistTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(b - a); }
inline double dist2(Point a, Point b) { return norm2(b - a); }

/// Rotate 90 degrees counterclockwise.
inline Point perp(Point p) { return {-p.y, p.x}; }

/// Signed area of the triangle (a,b,c) times two: > 0 iff c lies to the
/// left of the directed line a->b.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// A straight segment between two boundary points whose interior lies
/// inside the polygon it belongs to (e.g. a triangulation diagonal).
struct Chord {
    Point a;
    Point b;
};

inline double chord_length(const Chord& c) { return dist(c.a, c.b); }

/// p lies on segment [a,b], within kCrossTol on the cross product.
bool on_segment(Point a, Point b, Point p);

/// Segments [a,b] and [c,d] share at least one point (touching counts).
bool segments_intersect(Point a, Point b, Point c, Point d);

/// Interiors cross transversally at a single point; touching does not count.
bool segments_cross_properly(Point a, Point b, Point c, Point d);

/// Append every parameter t in [0,1] at which a + t*(b-a) meets segment
/// [c,d], including touch points and both ends of a collinear overlap.
void append_segment_hits(Point a, Point b, Point c, Point d, std::vector<double>& ts);

} // namespace skeg
