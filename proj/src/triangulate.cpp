#include "skeg/triangulate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "skeg/errors.hpp"

namespace skeg {

namespace {

// Does w block the ear (a,b,c)? Conservative mode treats anything within
// kCrossTol of the closed triangle as blocking; relaxed mode requires w
// strictly inside, which unsticks ears whose boundary passes exactly
// through another vertex.
bool blocks_ear(Point a, Point b, Point c, Point w, bool relaxed) {
    const double tol = relaxed ? kCrossTol : -kCrossTol;
    return orient(a, b, w) > tol && orient(b, c, w) > tol && orient(c, a, w) > tol;
}

} // namespace

Triangulation triangulate(const Polygon& p) {
    const int m = p.size();
    const auto& v = p.vertices;
    Triangulation out;
    out.triangles.reserve(static_cast<std::size_t>(m - 2));
    out.diagonals.reserve(static_cast<std::size_t>(std::max(0, m - 3)));

    std::vector<int> next(static_cast<std::size_t>(m));
    std::vector<int> prev(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        next[static_cast<std::size_t>(i)] = (i + 1) % m;
        prev[static_cast<std::size_t>(i)] = (i + m - 1) % m;
    }

    int remaining = m;
    int cur = 0;
    bool relaxed = false;
    while (remaining > 3) {
        bool clipped = false;
        int cand = cur;
        for (int attempt = 0; attempt < remaining; ++attempt, cand = next[static_cast<std::size_t>(cand)]) {
            const int b = cand;
            const int a = prev[static_cast<std::size_t>(b)];
            const int c = next[static_cast<std::size_t>(b)];
            if (orient(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)],
                       v[static_cast<std::size_t>(c)]) <= kCrossTol) {
                continue; // reflex or flat corner cannot be an ear
            }
            bool blocked = false;
            for (int w = next[static_cast<std::size_t>(c)]; w != a; w = next[static_cast<std::size_t>(w)]) {
                if (blocks_ear(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)],
                               v[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(w)],
                               relaxed)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;

            out.triangles.push_back({a, b, c});
            out.diagonals.push_back({a, c});
            next[static_cast<std::size_t>(a)] = c;
            prev[static_cast<std::size_t>(c)] = a;
            --remaining;
            cur = a;
            clipped = true;
            break;
        }
        if (!clipped) {
            if (!relaxed) {
                relaxed = true;
                continue;
            }
            throw SelfIntersecting("ear clipping found no ear; polygon is not simple");
        }
        relaxed = false;
    }
    {
        const int a = cur;
        const int b = next[static_cast<std::size_t>(a)];
        const int c = next[static_cast<std::size_t>(b)];
        out.triangles.push_back({a, b, c});
    }

    // Dual adjacency: undirected vertex pair -> (triangle, edge slot) list.
    const int T = out.size();
    out.neighbor.assign(static_cast<std::size_t>(T), {-1, -1, -1});
    out.neighborDiag.assign(static_cast<std::size_t>(T), {-1, -1, -1});
    std::map<std::pair<int, int>, int> diagIndex;
    for (int d = 0; d < static_cast<int>(out.diagonals.size()); ++d) {
        auto [x, y] = out.diagonals[static_cast<std::size_t>(d)];
        diagIndex[{std::min(x, y), std::max(x, y)}] = d;
    }
    std::map<std::pair<int, int>, std::pair<int, int>> firstSeen;
    for (int ti = 0; ti < T; ++ti) {
        for (int e = 0; e < 3; ++e) {
            const int x = out.triangles[static_cast<std::size_t>(ti)].v[static_cast<std::size_t>(e)];
            const int y = out.triangles[static_cast<std::size_t>(ti)].v[static_cast<std::size_t>((e + 1) % 3)];
            const std::pair<int, int> key{std::min(x, y), std::max(x, y)};
            auto it = firstSeen.find(key);
            if (it == firstSeen.end()) {
                firstSeen[key] = {ti, e};
                continue;
            }
            auto [tj, f] = it->second;
            auto dIt = diagIndex.find(key);
            const int d = dIt == diagIndex.end() ? -1 : dIt->second;
            out.neighbor[static_cast<std::size_t>(ti)][static_cast<std::size_t>(e)] = tj;
            out.neighbor[static_cast<std::size_t>(tj)][static_cast<std::size_t>(f)] = ti;
            out.neighborDiag[static_cast<std::size_t>(ti)][static_cast<std::size_t>(e)] = d;
            out.neighborDiag[static_cast<std::size_t>(tj)][static_cast<std::size_t>(f)] = d;
        }
    }
    return out;
}

int locate_point(const Polygon& p, const Triangulation& t, Point q) {
    for (int ti = 0; ti < t.size(); ++ti) {
        const auto& tri = t.triangles[static_cast<std::size_t>(ti)];
        const Point& a = p.vertex(tri.v[0]);
        const Point& b = p.vertex(tri.v[1]);
        const Point& c = p.vertex(tri.v[2]);
        const double slack = kCrossTol * std::max({1.0, dist(a, b), dist(b, c), dist(c, a)});
        if (orient(a, b, q) >= -slack && orient(b, c, q) >= -slack && orient(c, a, q) >= -slack) {
            return ti;
        }
    }
    return -1;
}

Chord diagonal_chord(const Polygon& p, const Triangulation& t, int diagIndex) {
    const auto& d = t.diagonals[static_cast<std::size_t>(diagIndex)];
    return {p.vertex(d[0]), p.vertex(d[1])};
}

} // namespace skeg
