#include "skeg/geodesic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "skeg/errors.hpp"

namespace skeg {

namespace {

// Near-duplicate waypoints collapse so cumulative arclengths stay strictly
// increasing.
constexpr double kWaypointTol = 1e-13;

bool nearly_same(Point a, Point b) {
    return std::abs(a.x - b.x) <= kWaypointTol && std::abs(a.y - b.y) <= kWaypointTol;
}

// Query points that land within rounding of a polygon vertex (reconstructed
// chord endpoints, projected centers) snap to it exactly. A sub-ULP offset
// otherwise feeds the funnel boundary vectors with garbage directions: the
// vector from the apex to a portal endpoint it "almost" equals has arbitrary
// orientation, and every cross test against it is noise. Exact coincidence
// makes those crosses exact zeros, which the update rules treat as ties.
Point snap_to_vertex(const Polygon& p, Point q) {
    for (int i = 0; i < p.size(); ++i) {
        if (nearly_same(q, p.vertex(i))) return p.vertex(i);
    }
    return q;
}

// Triangles crossed between a's triangle and b's, as a dual-tree path.
std::vector<int> sleeve(const Triangulation& t, int from, int to) {
    std::vector<int> parent(t.triangles.size(), -2);
    std::vector<int> queue{from};
    parent[static_cast<std::size_t>(from)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        if (x == to) break;
        for (int e = 0; e < 3; ++e) {
            const int nb = t.neighbor[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)];
            if (nb >= 0 && parent[static_cast<std::size_t>(nb)] == -2) {
                parent[static_cast<std::size_t>(nb)] = x;
                queue.push_back(nb);
            }
        }
    }
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Portals (left, right) seen while walking the sleeve. Crossing edge slot e
// of CCW triangle x leaves its interior on the left of the directed edge
// (v[e], v[e+1]), so the walker sees v[e+1] on the left and v[e] on the right.
std::vector<std::pair<Point, Point>> portals_along(const Polygon& p, const Triangulation& t,
                                                   const std::vector<int>& tris) {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(tris.size());
    for (std::size_t i = 0; i + 1 < tris.size(); ++i) {
        const int x = tris[i];
        for (int e = 0; e < 3; ++e) {
            if (t.neighbor[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] == tris[i + 1]) {
                const auto& tri = t.triangles[static_cast<std::size_t>(x)];
                out.emplace_back(p.vertex(tri.v[static_cast<std::size_t>((e + 1) % 3)]),
                                 p.vertex(tri.v[static_cast<std::size_t>(e)]));
                break;
            }
        }
    }
    return out;
}

// Bend decisions need a strict crossing. A query point lying exactly on a
// portal line (common: chord points during projection) makes these cross
// products vanish up to rounding, and noise must not masquerade as a bend —
// that would splice the portal endpoint into the path as a fake corner.
bool crosses_beyond(Point bound, Point cand) {
    return cross(bound, cand) > kCrossTol * std::hypot(bound.x, bound.y) * std::hypot(cand.x, cand.y);
}

// Funnel string-pulling over a portal sequence (the final portal is the
// degenerate (b, b)). Restarts the scan after each apex advance.
std::vector<Point> string_pull(Point a, Point b, std::vector<std::pair<Point, Point>> portals) {
    portals.emplace_back(b, b);
    std::vector<Point> path{a};
    Point apex = a;
    Point left = portals[0].first;
    Point right = portals[0].second;
    std::size_t apexIdx = 0, leftIdx = 0, rightIdx = 0;

    for (std::size_t i = 1; i < portals.size(); ++i) {
        const Point pl = portals[i].first;
        const Point pr = portals[i].second;

        if (cross(right - apex, pr - apex) >= 0.0) { // pr tightens the right boundary
            if (!crosses_beyond(left - apex, pr - apex)) {
                right = pr;
                rightIdx = i;
            } else { // crossed over the left boundary: bend at left
                if (!nearly_same(path.back(), left)) path.push_back(left);
                apex = left;
                apexIdx = leftIdx;
                left = right = apex;
                leftIdx = rightIdx = apexIdx;
                i = apexIdx;
                continue;
            }
        }
        if (cross(left - apex, pl - apex) <= 0.0) { // pl tightens the left boundary
            if (!crosses_beyond(pl - apex, right - apex)) {
                left = pl;
                leftIdx = i;
            } else { // crossed over the right boundary: bend at right
                if (!nearly_same(path.back(), right)) path.push_back(right);
                apex = right;
                apexIdx = rightIdx;
                left = right = apex;
                leftIdx = rightIdx = apexIdx;
                i = apexIdx;
                continue;
            }
        }
    }
    if (!nearly_same(path.back(), b)) path.push_back(b);
    return path;
}

GeodesicPath finish_path(std::vector<Point> waypoints) {
    GeodesicPath gp;
    gp.waypoints = std::move(waypoints);
    gp.cumulative.resize(gp.waypoints.size());
    gp.cumulative[0] = 0.0;
    for (std::size_t i = 1; i < gp.waypoints.size(); ++i) {
        gp.cumulative[i] = gp.cumulative[i - 1] + dist(gp.waypoints[i - 1], gp.waypoints[i]);
    }
    return gp;
}

double piece_min_x(const DistancePiece& pc) { return std::clamp(pc.anchorX, pc.xLo, pc.xHi); }

} // namespace

double DistancePiece::eval(double x) const { return std::hypot(x - anchorX, anchorY) + offset; }

GeodesicPath shortest_path(const Polygon& p, const Triangulation& t, Point a, Point b) {
    a = snap_to_vertex(p, a);
    b = snap_to_vertex(p, b);
    if (a == b) return finish_path({a});
    const int ta = locate_point(p, t, a);
    if (ta < 0) throw PointOutsidePolygon("path source lies outside the polygon");
    const int tb = locate_point(p, t, b);
    if (tb < 0) throw PointOutsidePolygon("path destination lies outside the polygon");
    if (ta == tb) return finish_path({a, b});

    auto waypoints = string_pull(a, b, portals_along(p, t, sleeve(t, ta, tb)));
    return finish_path(std::move(waypoints));
}

double geodesic_distance(const Polygon& p, const Triangulation& t, Point a, Point b) {
    return shortest_path(p, t, a, b).length();
}

Point path_midpoint(const GeodesicPath& path) {
    if (path.waypoints.size() == 1) return path.waypoints[0];
    const double half = 0.5 * path.length();
    std::size_t i = 1;
    while (i + 1 < path.cumulative.size() && path.cumulative[i] < half) ++i;
    const double segLen = path.cumulative[i] - path.cumulative[i - 1];
    const double s = segLen > 0.0 ? (half - path.cumulative[i - 1]) / segLen : 0.0;
    return path.waypoints[i - 1] + s * (path.waypoints[i] - path.waypoints[i - 1]);
}

Funnel build_funnel(const Polygon& p, const Triangulation& t, Point u, const Chord& ell) {
    if (chord_length(ell) <= kCrossTol) {
        throw DegenerateVertex("zero-length chord");
    }
    const GeodesicPath toA = shortest_path(p, t, u, ell.a);
    const GeodesicPath toB = shortest_path(p, t, u, ell.b);

    std::size_t common = 0;
    const std::size_t lim = std::min(toA.waypoints.size(), toB.waypoints.size());
    while (common + 1 < lim && toA.waypoints[common + 1] == toB.waypoints[common + 1]) {
        ++common;
    }
    // Paths may be single points (u on a chord endpoint).
    Funnel f;
    f.apex = toA.waypoints[common];
    f.apexOffset = toA.cumulative[common];
    f.chainToA.assign(toA.waypoints.begin() + static_cast<std::ptrdiff_t>(common),
                      toA.waypoints.end());
    f.chainToB.assign(toB.waypoints.begin() + static_cast<std::ptrdiff_t>(common),
                      toB.waypoints.end());
    return f;
}

std::vector<DistancePiece> distance_function(const Funnel& f, const Chord& ell) {
    const double L = chord_length(ell);
    if (L <= kCrossTol) throw DegenerateVertex("zero-length chord");
    const Point tHat = (1.0 / L) * (ell.b - ell.a);
    const Point nHat = perp(tHat);
    const auto toFrame = [&](Point q) -> Point {
        return {dot(q - ell.a, tHat), dot(q - ell.a, nHat)};
    };

    // Anchors ordered by ascending chord parameter: the A-chain backwards
    // (nearest ell.a first), the apex, then the B-chain forwards. Breakpoints
    // are the chord hits of each chain edge extended beyond its far vertex.
    struct Entry {
        Point anchor;
        double offset;
    };
    std::vector<Entry> entries;
    std::vector<double> breaks;

    const auto chainOffsets = [&](const std::vector<Point>& chain) {
        std::vector<double> off(chain.size(), f.apexOffset);
        for (std::size_t i = 1; i < chain.size(); ++i) {
            off[i] = off[i - 1] + dist(chain[i - 1], chain[i]);
        }
        return off;
    };
    const auto extension_hit = [&](Point from, Point through) -> double {
        const Point P = toFrame(from);
        const Point Q = toFrame(through);
        const double dy = P.y - Q.y;
        if (std::abs(dy) <= 1e-300) return Q.x; // degenerate edge parallel to the chord
        const double s = P.y / dy;
        return P.x + s * (Q.x - P.x);
    };

    const auto offA = chainOffsets(f.chainToA);
    const auto offB = chainOffsets(f.chainToB);
    const std::size_t K = f.chainToA.size() - 1; // edges toward ell.a
    const std::size_t Lb = f.chainToB.size() - 1;

    for (std::size_t j = K >= 1 ? K - 1 : 0; j >= 1; --j) {
        entries.push_back({f.chainToA[j], offA[j]});
        breaks.push_back(extension_hit(f.chainToA[j - 1], f.chainToA[j]));
        if (j == 1) break;
    }
    entries.push_back({f.apex, f.apexOffset});
    for (std::size_t j = 1; j + 1 <= Lb; ++j) {
        if (j == Lb) break; // the edge into ell.b bounds no interior domain
        breaks.push_back(extension_hit(f.chainToB[j - 1], f.chainToB[j]));
        entries.push_back({f.chainToB[j], offB[j]});
    }

    // Monotone clamp; inversions beyond FP noise cannot arise from a funnel.
    std::vector<double> xs{0.0};
    for (double b : breaks) xs.push_back(std::clamp(b, xs.back(), L));
    xs.push_back(L);

    std::vector<DistancePiece> pieces;
    pieces.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        DistancePiece pc;
        pc.xLo = xs[i];
        pc.xHi = xs[i + 1];
        pc.anchor = entries[i].anchor;
        pc.offset = entries[i].offset;
        const Point fr = toFrame(entries[i].anchor);
        pc.anchorX = fr.x;
        pc.anchorY = fr.y;
        pieces.push_back(pc);
    }
    return pieces;
}

ChordProjection project_from_pieces(const std::vector<DistancePiece>& pieces, const Chord& ell) {
    double bestX = 0.0;
    double bestD = std::numeric_limits<double>::infinity();
    for (const DistancePiece& pc : pieces) {
        const double x = piece_min_x(pc);
        const double d = pc.eval(x);
        if (d < bestD) {
            bestD = d;
            bestX = x;
        }
    }
    const double L = chord_length(ell);
    const Point tHat = (1.0 / L) * (ell.b - ell.a);
    return {ell.a + bestX * tHat, bestX, bestD};
}

std::optional<ChordInterval> interval_from_pieces(const std::vector<DistancePiece>& pieces,
                                                  double rho, int owner) {
    double minD = std::numeric_limits<double>::infinity();
    for (const DistancePiece& pc : pieces) minD = std::min(minD, pc.eval(piece_min_x(pc)));
    if (rho < minD) return std::nullopt;

    double lo = pieces.front().xLo;
    for (const DistancePiece& pc : pieces) {
        if (pc.eval(piece_min_x(pc)) > rho) continue;
        if (pc.eval(pc.xLo) <= rho) {
            lo = pc.xLo; // only reachable on the first piece, by continuity
        } else {
            const double reach = rho - pc.offset;
            const double off = std::sqrt(std::max(0.0, reach * reach - pc.anchorY * pc.anchorY));
            lo = std::clamp(pc.anchorX - off, pc.xLo, pc.xHi);
        }
        break;
    }
    double hi = pieces.back().xHi;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        const DistancePiece& pc = *it;
        if (pc.eval(piece_min_x(pc)) > rho) continue;
        if (pc.eval(pc.xHi) <= rho) {
            hi = pc.xHi;
        } else {
            const double reach = rho - pc.offset;
            const double off = std::sqrt(std::max(0.0, reach * reach - pc.anchorY * pc.anchorY));
            hi = std::clamp(pc.anchorX + off, pc.xLo, pc.xHi);
        }
        break;
    }
    return ChordInterval{lo, hi, owner};
}

ChordProjection project_onto_chord(const Polygon& p, const Triangulation& t, Point u,
                                   const Chord& ell) {
    return project_from_pieces(distance_function(build_funnel(p, t, u, ell), ell), ell);
}

std::optional<ChordInterval> chord_disc_intersection(const Polygon& p, const Triangulation& t,
                                                     Point u, const Chord& ell, double rho,
                                                     int owner) {
    return interval_from_pieces(distance_function(build_funnel(p, t, u, ell), ell), rho, owner);
}

} // namespace skeg
