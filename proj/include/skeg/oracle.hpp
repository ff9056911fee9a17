#pragma once

#include <cstdint>
#include <vector>

#include "skeg/skeg.hpp"

namespace skeg {

// Everything here is deliberately independent of the funnel engine: paths
// and distances come from a visibility graph over the reflex vertices, so
// the two implementations can check each other.

/// Visibility-graph distance oracle for one polygon, reusable across many
/// queries. Node set: reflex vertices (precomputed) plus the two query
/// points per call.
class GeodesicOracle {
  public:
    explicit GeodesicOracle(const Polygon& p);

    double distance(Point a, Point b) const;
    GeodesicPath path(Point a, Point b) const;

  private:
    bool visible(Point a, Point b) const;

    const Polygon& poly_;
    std::vector<Point> nodes_;                  // reflex vertices
    std::vector<std::vector<double>> nodeDist_; // pairwise graph distances
    std::vector<std::vector<int>> nodePrev_;    // nodePrev_[s][v]: v's predecessor toward s
};

/// One-shot convenience wrapper around GeodesicOracle.
double dijkstra_distance(const Polygon& p, Point a, Point b);

/// Bracket [rhoLo, rhoHi] around the optimal k-enclosing radius rho*.
/// rhoHi is achieved by bestCenter; rhoLo = max(0, rhoHi - resolution) where
/// resolution covers the distance from any potential optimal center to its
/// nearest evaluated sample.
struct OptBracket {
    double rhoLo = 0.0;
    double rhoHi = 0.0;
    Point bestCenter;
    double resolution = 0.0;
};

/// Dense-grid bracketing oracle: candidate centers are an eps-grid restricted
/// to the region that can contain an optimal center, plus every site and
/// every pairwise path midpoint. The resolution is eps*sqrt(2), widened to
/// the measured worst distance from probe points to their nearest visible
/// sample when coverage near sharp features is worse than nominal.
/// Throws EmptyGrid when eps is too coarse to land any grid sample.
OptBracket grid_oracle(const Polygon& p, const std::vector<Point>& sites, int k, double eps);

/// Candidate oracle over sites and pairwise geodesic path midpoints. Exact
/// when the optimal disc is determined by two boundary sites (its center is
/// then the midpoint of their geodesic); never below rho*, never above 2 rho*.
Disc pair_candidate_oracle(const Polygon& p, const Triangulation& t,
                           const std::vector<Point>& sites, int k);

/// Reference depth counter: for each candidate chord parameter, the number
/// of sites whose geodesic distance to that chord point is <= rho.
std::vector<int> brute_depths(const Polygon& p, const Triangulation& t,
                              const std::vector<Point>& sites, const Chord& ell,
                              double rho, const std::vector<double>& candidates);

/// Random simple polygon with m vertices: random points untangled by 2-opt
/// (each uncrossing shortens the boundary, so it terminates), then validated;
/// resamples until validation passes and no feature is thinner than a small
/// fraction of the bounding box.
Polygon random_simple_polygon(std::uint64_t seed, int m);

/// n points uniform in the polygon (rejection sampling over the bbox),
/// pairwise distinct within kCrossTol.
std::vector<Point> random_sites(const Polygon& p, std::uint64_t seed, int n);

} // namespace skeg
