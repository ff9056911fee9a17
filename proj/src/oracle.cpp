#include "skeg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "skeg/errors.hpp"
#include "skeg/rng.hpp"

namespace skeg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense Dijkstra (no heap; node counts here are small). Returns distances and
// predecessors from `source` over the weight matrix, kInf = no edge.
void dijkstra_dense(const std::vector<std::vector<double>>& w, int source,
                    std::vector<double>& d, std::vector<int>& prev) {
    const std::size_t r = w.size();
    d.assign(r, kInf);
    prev.assign(r, -1);
    std::vector<char> done(r, 0);
    d[static_cast<std::size_t>(source)] = 0.0;
    for (std::size_t round = 0; round < r; ++round) {
        int u = -1;
        double best = kInf;
        for (std::size_t i = 0; i < r; ++i) {
            if (!done[i] && d[i] < best) {
                best = d[i];
                u = static_cast<int>(i);
            }
        }
        if (u < 0) break;
        done[static_cast<std::size_t>(u)] = 1;
        for (std::size_t v = 0; v < r; ++v) {
            const double cand = d[static_cast<std::size_t>(u)] + w[static_cast<std::size_t>(u)][v];
            if (cand < d[v]) {
                d[v] = cand;
                prev[v] = u;
            }
        }
    }
}

double point_segment_dist(Point q, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = norm2(ab);
    if (len2 <= 0.0) return dist(q, a);
    const double s = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
    return dist(q, a + s * ab);
}

} // namespace

GeodesicOracle::GeodesicOracle(const Polygon& p) : poly_(p) {
    for (int idx : p.reflexIndices) nodes_.push_back(p.vertex(idx));
    const std::size_t r = nodes_.size();
    std::vector<std::vector<double>> w(r, std::vector<double>(r, kInf));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (segment_in_polygon(poly_, nodes_[i], nodes_[j])) {
                w[i][j] = w[j][i] = dist(nodes_[i], nodes_[j]);
            }
        }
    }
    nodeDist_.resize(r);
    nodePrev_.resize(r);
    for (std::size_t s = 0; s < r; ++s) {
        dijkstra_dense(w, static_cast<int>(s), nodeDist_[s], nodePrev_[s]);
    }
}

bool GeodesicOracle::visible(Point a, Point b) const { return segment_in_polygon(poly_, a, b); }

double GeodesicOracle::distance(Point a, Point b) const {
    if (!point_in_polygon(poly_, a) || !point_in_polygon(poly_, b)) {
        throw PointOutsidePolygon("oracle query point outside the polygon");
    }
    if (a == b) return 0.0;
    if (visible(a, b)) return dist(a, b);

    const std::size_t r = nodes_.size();
    double best = kInf;
    std::vector<double> da(r, kInf), db(r, kInf);
    for (std::size_t i = 0; i < r; ++i) {
        if (visible(a, nodes_[i])) da[i] = dist(a, nodes_[i]);
        if (visible(b, nodes_[i])) db[i] = dist(b, nodes_[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (da[i] == kInf) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (db[j] == kInf) continue;
            best = std::min(best, da[i] + nodeDist_[i][j] + db[j]);
        }
    }
    if (best == kInf) throw GeometryError("visibility graph disconnected between query points");
    return best;
}

GeodesicPath GeodesicOracle::path(Point a, Point b) const {
    GeodesicPath gp;
    if (!point_in_polygon(poly_, a) || !point_in_polygon(poly_, b)) {
        throw PointOutsidePolygon("oracle query point outside the polygon");
    }
    if (a == b) {
        gp.waypoints = {a};
        gp.cumulative = {0.0};
        return gp;
    }
    std::vector<Point> pts;
    if (visible(a, b)) {
        pts = {a, b};
    } else {
        const std::size_t r = nodes_.size();
        std::vector<double> da(r, kInf), db(r, kInf);
        for (std::size_t i = 0; i < r; ++i) {
            if (visible(a, nodes_[i])) da[i] = dist(a, nodes_[i]);
            if (visible(b, nodes_[i])) db[i] = dist(b, nodes_[i]);
        }
        double best = kInf;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (da[i] == kInf) continue;
            for (std::size_t j = 0; j < r; ++j) {
                if (db[j] == kInf) continue;
                const double cand = da[i] + nodeDist_[i][j] + db[j];
                if (cand < best) {
                    best = cand;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == kInf) throw GeometryError("visibility graph disconnected between query points");
        std::vector<int> hop;
        for (int v = static_cast<int>(bj); v != -1; v = nodePrev_[bi][static_cast<std::size_t>(v)]) {
            hop.push_back(v);
        }
        pts.push_back(a);
        for (auto it = hop.rbegin(); it != hop.rend(); ++it) {
            pts.push_back(nodes_[static_cast<std::size_t>(*it)]);
        }
        pts.push_back(b);
    }
    gp.waypoints.push_back(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i] == gp.waypoints.back())) gp.waypoints.push_back(pts[i]);
    }
    gp.cumulative.resize(gp.waypoints.size(), 0.0);
    for (std::size_t i = 1; i < gp.waypoints.size(); ++i) {
        gp.cumulative[i] = gp.cumulative[i - 1] + dist(gp.waypoints[i - 1], gp.waypoints[i]);
    }
    return gp;
}

double dijkstra_distance(const Polygon& p, Point a, Point b) {
    return GeodesicOracle(p).distance(a, b);
}

namespace {

// Shared scaffolding for grid_oracle: reflex-to-reflex graph distances, so a
// per-site routing table makes arbitrary-point queries cost one visibility
// scan instead of a Dijkstra run each.
struct OracleScratch {
    std::vector<Point> reflex;
    std::vector<std::vector<double>> reflexDist; // pairwise through the graph
};

OracleScratch build_scratch(const Polygon& p) {
    OracleScratch sc;
    for (int idx : p.reflexIndices) sc.reflex.push_back(p.vertex(idx));
    const std::size_t r = sc.reflex.size();
    std::vector<std::vector<double>> w(r, std::vector<double>(r, kInf));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (segment_in_polygon(p, sc.reflex[i], sc.reflex[j])) {
                w[i][j] = w[j][i] = dist(sc.reflex[i], sc.reflex[j]);
            }
        }
    }
    sc.reflexDist.resize(r);
    std::vector<int> prevScratch;
    for (std::size_t s = 0; s < r; ++s) {
        dijkstra_dense(w, static_cast<int>(s), sc.reflexDist[s], prevScratch);
    }
    return sc;
}

// Distance from `q` to every reflex vertex through the graph, given which
// reflex vertices q sees.
std::vector<double> tables_from(const OracleScratch& sc, const std::vector<double>& qToVisible) {
    const std::size_t r = sc.reflex.size();
    std::vector<double> out(r, kInf);
    for (std::size_t v = 0; v < r; ++v) {
        double best = qToVisible[v]; // direct sight, kInf otherwise
        for (std::size_t i = 0; i < r; ++i) {
            if (qToVisible[i] == kInf) continue;
            best = std::min(best, qToVisible[i] + sc.reflexDist[i][v]);
        }
        out[v] = best;
    }
    return out;
}

std::vector<double> sight_row(const Polygon& p, const OracleScratch& sc, Point q) {
    std::vector<double> row(sc.reflex.size(), kInf);
    for (std::size_t i = 0; i < sc.reflex.size(); ++i) {
        if (segment_in_polygon(p, q, sc.reflex[i])) row[i] = dist(q, sc.reflex[i]);
    }
    return row;
}

} // namespace

OptBracket grid_oracle(const Polygon& p, const std::vector<Point>& sites, int k, double eps) {
    const std::size_t n = sites.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw KTooLarge("grid_oracle: k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(n) + "]");
    }
    if (!(eps > 0.0)) throw EmptyGrid("grid_oracle: eps must be positive");

    const OracleScratch sc = build_scratch(p);
    const std::size_t r = sc.reflex.size();

    // Routing table per site: siteTable[s][v] = d_g(site_s, reflex_v).
    std::vector<std::vector<double>> siteTable(n);
    for (std::size_t s = 0; s < n; ++s) {
        siteTable[s] = tables_from(sc, sight_row(p, sc, sites[s]));
    }

    // d_g(q, site_s) given q's sight row; exact because a bent geodesic
    // passes through a reflex vertex.
    const auto geo_to_site = [&](Point q, const std::vector<double>& qSight,
                                 std::size_t s) -> double {
        double best = segment_in_polygon(p, q, sites[s]) ? dist(q, sites[s]) : kInf;
        for (std::size_t v = 0; v < r; ++v) {
            if (qSight[v] == kInf) continue;
            best = std::min(best, qSight[v] + siteTable[s][v]);
        }
        return best;
    };

    std::vector<double> scratch(n);
    const auto rho_at = [&](Point q) -> double {
        const std::vector<double> qSight = sight_row(p, sc, q);
        for (std::size_t s = 0; s < n; ++s) scratch[s] = geo_to_site(q, qSight, s);
        auto kth = scratch.begin() + (k - 1);
        std::nth_element(scratch.begin(), kth, scratch.end());
        return *kth;
    };

    // Stage 1: sites and pairwise geodesic midpoints as candidate centers.
    // For k = 2 a midpoint is the exact optimum; in general this seeds the
    // upper bound that confines the grid region.
    GeodesicOracle midpointHelper(p);
    std::vector<Point> seeds = sites;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            seeds.push_back(path_midpoint(midpointHelper.path(sites[i], sites[j])));
        }
    }
    double rhoHi = kInf;
    Point bestCenter = sites[0];
    for (const Point& c : seeds) {
        const double rho = rho_at(c);
        if (rho < rhoHi) {
            rhoHi = rho;
            bestCenter = c;
        }
    }

    // Stage 2: eps-grid over the bounding box, cell centers, kept when inside
    // the polygon. The optimal center lies within rhoHi (geodesically, hence
    // Euclideanly) of some site, so cells farther than that from every site
    // cannot improve the bound and are skipped.
    double minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    for (const Point& v : p.vertices) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    const double regionPad = 2.0 * eps * std::numbers::sqrt2;

    // Walking the whole bounding-box grid is quadratic in 1/eps even when the
    // useful region is a few small discs, so enumerate only the cells inside
    // the per-site boxes of radius rhoHi + regionPad (everything outside fails
    // the nearSite filter by construction). A fine bracket on a tiny optimal
    // radius then costs O(n (rhoHi/eps)^2) instead of O((diameter/eps)^2).
    const long long cols = static_cast<long long>((maxx - minx) / eps) + 1;
    const long long rows = static_cast<long long>((maxy - miny) / eps) + 1;
    const auto cell_key = [&](long long cx, long long cy) -> long long {
        return cx * 1000003LL + cy;
    };
    std::vector<Point> samples = seeds; // evaluated candidates double as coverage anchors
    bool anyGridInside = false;
    {
        const double reach = rhoHi + regionPad;
        std::unordered_set<long long> visited;
        for (const Point& s : sites) {
            const long long giLo = std::max(0LL, static_cast<long long>((s.x - reach - minx) / eps) - 1);
            const long long gjLo = std::max(0LL, static_cast<long long>((s.y - reach - miny) / eps) - 1);
            const long long giHi = std::min(cols - 1, static_cast<long long>((s.x + reach - minx) / eps) + 1);
            const long long gjHi = std::min(rows - 1, static_cast<long long>((s.y + reach - miny) / eps) + 1);
            for (long long gi = giLo; gi <= giHi; ++gi) {
                const double x = minx + (static_cast<double>(gi) + 0.5) * eps;
                if (x > maxx) continue;
                for (long long gj = gjLo; gj <= gjHi; ++gj) {
                    const double y = miny + (static_cast<double>(gj) + 0.5) * eps;
                    if (y > maxy) continue;
                    if (!visited.insert(cell_key(gi, gj)).second) continue;
                    const Point g{x, y};
                    if (!point_in_polygon(p, g)) continue;
                    anyGridInside = true;
                    double nearSite = kInf;
                    for (const Point& t : sites) nearSite = std::min(nearSite, dist(g, t));
                    if (nearSite > rhoHi + regionPad) continue;
                    samples.push_back(g);
                }
            }
        }
    }
    if (!anyGridInside) {
        // The clipped scan saw nothing inside; distinguish "region misses the
        // polygon" (fine, seeds carry the bracket) from "the grid itself is
        // too coarse to land inside at all" (EmptyGrid, the bracket would be
        // meaningless). Early-exit existence scan over the full box.
        for (long long gi = 0; gi < cols && !anyGridInside; ++gi) {
            const double x = minx + (static_cast<double>(gi) + 0.5) * eps;
            if (x > maxx) break;
            for (long long gj = 0; gj < rows; ++gj) {
                const double y = miny + (static_cast<double>(gj) + 0.5) * eps;
                if (y > maxy) break;
                if (point_in_polygon(p, {x, y})) {
                    anyGridInside = true;
                    break;
                }
            }
        }
        if (!anyGridInside) {
            throw EmptyGrid("grid_oracle: no grid sample of spacing " + std::to_string(eps) +
                            " lands inside the polygon");
        }
    }

    // Evaluate the grid samples (seeds are already done), cheapest filter
    // first: the Euclidean k-th NN distance never exceeds the geodesic one,
    // so samples that cannot beat rhoHi are skipped exactly.
    std::vector<double> euclid(n);
    for (std::size_t i = seeds.size(); i < samples.size(); ++i) {
        const Point g = samples[i];
        for (std::size_t s = 0; s < n; ++s) euclid[s] = dist(g, sites[s]);
        auto kth = euclid.begin() + (k - 1);
        std::nth_element(euclid.begin(), kth, euclid.end());
        if (*kth >= rhoHi) continue;
        const double rho = rho_at(g);
        if (rho < rhoHi) {
            rhoHi = rho;
            bestCenter = g;
        }
    }

    // Stage 3: measured coverage. The bracket needs every potential center
    // (anything within rhoHi of a site) to have an evaluated sample visible
    // from it within `resolution`; probe the region and take the worst case.
    // Probes: cell corners (offset half a cell from the samples), polygon
    // vertices, sites.
    std::unordered_map<long long, std::vector<int>> cellIndex;
    const auto cell_of = [&](Point q) -> std::pair<long long, long long> {
        return {static_cast<long long>(std::floor((q.x - minx) / eps)),
                static_cast<long long>(std::floor((q.y - miny) / eps))};
    };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [cx, cy] = cell_of(samples[i]);
        cellIndex[cell_key(cx, cy)].push_back(static_cast<int>(i));
    }

    const auto nearest_visible = [&](Point q) -> double {
        const auto [cx, cy] = cell_of(q);
        double best = kInf;
        const long long ringMax = std::max(cols, rows) + 2;
        for (long long ring = 0; ring <= ringMax; ++ring) {
            if (ring > 1 && static_cast<double>(ring - 1) * eps >= best) break;
            for (long long dx = -ring; dx <= ring; ++dx) {
                for (long long dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::llabs(dx), std::llabs(dy)) != ring) continue;
                    const auto it = cellIndex.find(cell_key(cx + dx, cy + dy));
                    if (it == cellIndex.end()) continue;
                    for (int si : it->second) {
                        const Point s = samples[static_cast<std::size_t>(si)];
                        const double d = dist(q, s);
                        if (d < best && segment_in_polygon(p, q, s)) best = d;
                    }
                }
            }
        }
        return best;
    };

    // Probe corners clipped the same way: only corners within rhoHi of a site
    // survive the filter below, and those lie inside the per-site boxes.
    std::vector<Point> probes;
    {
        const double reach = rhoHi + eps;
        std::unordered_set<long long> visited;
        for (const Point& s : sites) {
            const long long giLo = std::max(0LL, static_cast<long long>((s.x - reach - minx) / eps) - 1);
            const long long gjLo = std::max(0LL, static_cast<long long>((s.y - reach - miny) / eps) - 1);
            const long long giHi = std::min(cols, static_cast<long long>((s.x + reach - minx) / eps) + 1);
            const long long gjHi = std::min(rows, static_cast<long long>((s.y + reach - miny) / eps) + 1);
            for (long long gi = giLo; gi <= giHi; ++gi) {
                const double x = minx + static_cast<double>(gi) * eps;
                if (x > maxx) continue;
                for (long long gj = gjLo; gj <= gjHi; ++gj) {
                    const double y = miny + static_cast<double>(gj) * eps;
                    if (y > maxy) continue;
                    if (!visited.insert(cell_key(gi, gj)).second) continue;
                    probes.push_back({x, y});
                }
            }
        }
    }
    for (const Point& v : p.vertices) probes.push_back(v);
    for (const Point& s : sites) probes.push_back(s);

    double worst = 0.0;
    for (const Point& q : probes) {
        if (!point_in_polygon(p, q)) continue;
        double nearSite = kInf;
        for (const Point& s : sites) nearSite = std::min(nearSite, dist(q, s));
        if (nearSite > rhoHi) continue; // cannot be an optimal center
        worst = std::max(worst, nearest_visible(q));
    }

    OptBracket out;
    out.resolution = std::max(eps * std::numbers::sqrt2, 1.25 * worst);
    out.rhoHi = rhoHi;
    out.rhoLo = std::max(0.0, rhoHi - out.resolution);
    out.bestCenter = bestCenter;
    return out;
}

Disc pair_candidate_oracle(const Polygon& p, const Triangulation& t,
                           const std::vector<Point>& sites, int k) {
    const std::size_t n = sites.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw KTooLarge("pair_candidate_oracle: k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(n) + "]");
    }
    std::vector<Point> candidates = sites;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            candidates.push_back(path_midpoint(shortest_path(p, t, sites[i], sites[j])));
        }
    }
    Disc best{sites[0], kInf};
    for (const Point& c : candidates) {
        const double rho = kth_nn_distance(p, t, c, sites, k).first;
        if (rho < best.radius) best = {c, rho};
    }
    return best;
}

std::vector<int> brute_depths(const Polygon& p, const Triangulation& t,
                              const std::vector<Point>& sites, const Chord& ell, double rho,
                              const std::vector<double>& candidates) {
    const double L = chord_length(ell);
    const Point tHat = (1.0 / L) * (ell.b - ell.a);
    std::vector<int> out;
    out.reserve(candidates.size());
    for (double x : candidates) {
        const Point q = ell.a + x * tHat;
        int depth = 0;
        for (const Point& s : sites) {
            if (geodesic_distance(p, t, q, s) <= rho) ++depth;
        }
        out.push_back(depth);
    }
    return out;
}

namespace {

// One full 2-opt pass; returns the number of uncrossings applied.
int uncross_pass(std::vector<Point>& pts) {
    const int m = static_cast<int>(pts.size());
    int swaps = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (j == i + 1 || (i == 0 && j == m - 1)) continue; // adjacent edges share a vertex
            const Point a = pts[static_cast<std::size_t>(i)];
            const Point b = pts[static_cast<std::size_t>((i + 1) % m)];
            const Point c = pts[static_cast<std::size_t>(j)];
            const Point d = pts[static_cast<std::size_t>((j + 1) % m)];
            if (segments_cross_properly(a, b, c, d)) {
                std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
                ++swaps;
            }
        }
    }
    return swaps;
}

double min_feature(const Polygon& p) {
    const int m = p.size();
    double worst = kInf;
    for (int v = 0; v < m; ++v) {
        for (int e = 0; e < m; ++e) {
            if (e == v || (e + 1) % m == v) continue; // incident edges touch trivially
            worst = std::min(worst, point_segment_dist(p.vertex(v), p.vertex(e),
                                                       p.vertex((e + 1) % m)));
        }
    }
    return worst;
}

} // namespace

Polygon random_simple_polygon(std::uint64_t seed, int m) {
    if (m < 3) throw TooFewVertices("random_simple_polygon: m = " + std::to_string(m));
    constexpr double kScale = 10.0;
    SplitRng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Point> pts(static_cast<std::size_t>(m));
        for (Point& q : pts) q = {kScale * rng.next_double(), kScale * rng.next_double()};

        // Each uncrossing strictly shortens the tour, so passes terminate;
        // the cap only guards degenerate (collinear-heavy) draws.
        long long budget = 100LL * m * m;
        int swaps = uncross_pass(pts);
        while (swaps > 0 && budget > 0) {
            budget -= swaps;
            swaps = uncross_pass(pts);
        }
        if (swaps > 0) continue;

        try {
            Polygon poly = validate_polygon(pts);
            if (min_feature(poly) < 1e-3 * kScale) continue; // conditioning floor
            return poly;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GeometryError("random_simple_polygon: could not produce a conditioned polygon");
}

std::vector<Point> random_sites(const Polygon& p, std::uint64_t seed, int n) {
    double minx = p.vertices[0].x, maxx = minx, miny = p.vertices[0].y, maxy = miny;
    for (const Point& v : p.vertices) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    SplitRng rng(seed);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    long long guard = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++guard > 10000000LL) {
            throw GeometryError("random_sites: rejection sampling stalled");
        }
        const Point q{minx + (maxx - minx) * rng.next_double(),
                      miny + (maxy - miny) * rng.next_double()};
        if (!point_in_polygon(p, q)) continue;
        bool clash = false;
        for (const Point& s : out) {
            if (dist(q, s) <= kCrossTol) {
                clash = true;
                break;
            }
        }
        if (!clash) out.push_back(q);
    }
    return out;
}

} // namespace skeg
