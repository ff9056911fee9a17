#pragma once

#include <cstdint>
#include <vector>

#include "skeg/decomp.hpp"
#include "skeg/geodesic.hpp"

namespace skeg {

struct Disc {
    Point center;
    double radius = 0.0;
};

enum class Algo { rs, di, planar, merge, oracle };

const char* algo_name(Algo a);

struct RunStats {
    long long iterations = 0;     // merge-loop iterations, summed over all merges
    long long sampleSize = 0;     // random-sampling runs
    long long recursionDepth = 0; // deepest decomposition node visited
};

/// A k-enclosing disc answer plus enough bookkeeping to reproduce it.
/// coveredCount recounts sites with geodesic distance <= radius + kDistTol.
struct SkegResult {
    Disc disc;
    int coveredCount = 0;
    Algo algorithm = Algo::di;
    std::uint64_t seed = 0;
    RunStats stats;
};

/// Distance from c to its k-th nearest site (k = 1 is the nearest) and the
/// index of the site attaining it. Throws KTooLarge outside [1, n].
std::pair<double, int> kth_nn_distance(const Polygon& p, const Triangulation& t,
                                       Point c, const std::vector<Point>& sites, int k);

/// Random-sampling 2-approximation: ceil((n/k) ln n) samples (at least one),
/// each scored by the distance to its (k-1)-th nearest other site; best
/// sample wins. Succeeds (radius <= 2 rho*) with probability >= 1 - 1/n.
/// sampledOut, when given, receives the sampled site indices.
SkegResult rs_algo(const Polygon& p, const Triangulation& t, const std::vector<Point>& sites,
                   int k, std::uint64_t seed, std::vector<int>* sampledOut = nullptr);

/// Planar (Euclidean) 2-approximation used on convex polygons and as the
/// decomposition base case: every input point is tried as a center with its
/// k-th smallest distance (self counts at 0). Any point of the optimal disc
/// is within 2 rho* of its k-th neighbour, so the minimum is too.
Disc planar_2approx(const std::vector<Point>& points, int k);

struct MergeResult {
    Point center;   // on the chord
    double rho;
    long long iterations;
};

/// Best k-enclosing disc centered on the chord, by random candidate
/// elimination over the sites' chord projections. The returned rho equals
/// the minimum over all projections of the k-th NN distance; expected
/// O(log n') elimination rounds.
MergeResult merge_algo(const Polygon& p, const Triangulation& t, const Chord& ell,
                       const std::vector<Point>& sitesTau, int k, std::uint64_t seed);

/// Number of intervals containing each candidate (closed endpoints).
std::vector<int> interval_depths(const std::vector<ChordInterval>& intervals,
                                 const std::vector<double>& candidates);

/// Divide-and-conquer solver over the decomposition: recurse into children
/// holding at least k sites, solve the diagonal-straddling case with
/// merge_algo, keep the smallest disc. nodeId usually tree.root.
SkegResult di_algo(const Polygon& p, const Triangulation& t, const DecompTree& tree,
                   const SiteAssignment& assign, const std::vector<Point>& sites,
                   int nodeId, int k, std::uint64_t seed);

/// Dispatch: convex polygon -> planar; k log2(max(n,2)) > n -> random
/// sampling; otherwise divide-and-conquer. Result radius <= 2 rho*
/// (deterministically for planar/di, w.h.p. for rs).
SkegResult main_algo(const Polygon& p, const Triangulation& t, const DecompTree& tree,
                     const SiteAssignment& assign, const std::vector<Point>& sites,
                     int k, std::uint64_t seed);

int count_covered(const Polygon& p, const Triangulation& t, const Disc& d,
                  const std::vector<Point>& sites);

} // namespace skeg
