#pragma once

#include <optional>
#include <vector>

#include "skeg/triangulate.hpp"

namespace skeg {

/// Shortest polygonal path between two points inside a simple polygon.
/// Interior waypoints are reflex vertices of the polygon.
struct GeodesicPath {
    std::vector<Point> waypoints;   // source first, destination last
    std::vector<double> cumulative; // arclength from the source, same size

    double length() const { return cumulative.back(); }
};

/// Geodesic between a and b through the triangulated polygon (sleeve walk
/// plus funnel string-pulling; O(m) per query after the one-off adjacency
/// stored in the triangulation). Throws PointOutsidePolygon.
GeodesicPath shortest_path(const Polygon& p, const Triangulation& t, Point a, Point b);

double geodesic_distance(const Polygon& p, const Triangulation& t, Point a, Point b);

/// Point halfway along the path by arclength.
Point path_midpoint(const GeodesicPath& path);

/// Geodesics from a source point to both endpoints of a chord, split at the
/// last common vertex (the apex). Each chain starts at the apex and ends at
/// its chord endpoint; between apex and either chord endpoint the chain is
/// inward-convex.
struct Funnel {
    Point apex;
    double apexOffset = 0.0;     // geodesic distance source -> apex
    std::vector<Point> chainToA; // apex .. ell.a inclusive
    std::vector<Point> chainToB; // apex .. ell.b inclusive
};

Funnel build_funnel(const Polygon& p, const Triangulation& t, Point u, const Chord& ell);

/// One hyperbolic piece of the geodesic-distance-to-chord function:
/// dist(x) = hypot(x - anchorX, anchorY) + offset for x in [xLo, xHi],
/// where x is arclength along the chord from ell.a and (anchorX, anchorY)
/// is the anchor (last path vertex before the chord) in the chord frame.
struct DistancePiece {
    double xLo = 0.0;
    double xHi = 0.0;
    Point anchor;
    double offset = 0.0;
    double anchorX = 0.0;
    double anchorY = 0.0;

    double eval(double x) const;
};

/// Piecewise distance function from the funnel's source to chord points.
/// Pieces tile [0, |ell|] in order; adjacent pieces share their breakpoint
/// (the chord intersection of the extended chain edge) and agree there.
/// The whole function is convex.
std::vector<DistancePiece> distance_function(const Funnel& f, const Chord& ell);

struct ChordProjection {
    Point point;     // nearest chord point
    double param;    // its arclength from ell.a
    double distance; // geodesic distance from the source
};

/// Geodesic projection of u onto the chord: the chord point minimizing
/// geodesic distance (unique by convexity; ties at flat minima resolve to
/// the lower parameter).
ChordProjection project_onto_chord(const Polygon& p, const Triangulation& t,
                                   Point u, const Chord& ell);

/// Closed chord-arclength interval; never represents emptiness as lo > hi
/// (absent optional instead).
struct ChordInterval {
    double lo = 0.0;
    double hi = 0.0;
    int owner = -1; // caller's site index, carried through depth counting
};

/// Intersection of the geodesic disc D(u, rho) with the chord, empty iff
/// rho is below the distance from u to its chord projection.
std::optional<ChordInterval> chord_disc_intersection(const Polygon& p, const Triangulation& t,
                                                     Point u, const Chord& ell, double rho,
                                                     int owner = -1);

// Piece-level entry points, for callers that reuse one distance function
// across many radii (the merge loop does).
ChordProjection project_from_pieces(const std::vector<DistancePiece>& pieces, const Chord& ell);
std::optional<ChordInterval> interval_from_pieces(const std::vector<DistancePiece>& pieces,
                                                  double rho, int owner = -1);

} // namespace skeg
