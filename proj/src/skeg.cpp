#include "skeg/skeg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "skeg/errors.hpp"
#include "skeg/rng.hpp"
#include "skeg/triangulate.hpp"

namespace skeg {

namespace {

// Pruning slack for the candidate-elimination loop: keeps a candidate sitting
// exactly on its own k-th neighbour's interval boundary from being dropped by
// the ~1e-14 error of closed-form root extraction. Chosen far below the 1e-9
// agreement tolerance so conservative survivors cannot drift the result.
constexpr double kMergePruneTol = 1e-12;

void require_k(int k, std::size_t n, const char* where) {
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw KTooLarge(std::string(where) + ": k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(n) + "]");
    }
}

double eval_pieces(const std::vector<DistancePiece>& pieces, double x) {
    for (const DistancePiece& pc : pieces) {
        if (x <= pc.xHi) return pc.eval(x);
    }
    return pieces.back().eval(x);
}

std::vector<Point> gather_node_sites(const SiteAssignment& assign,
                                     const std::vector<Point>& sites, int nodeId) {
    const auto [b, e] = assign.nodeRange[static_cast<std::size_t>(nodeId)];
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(e - b));
    for (int i = b; i < e; ++i) {
        out.push_back(sites[static_cast<std::size_t>(assign.order[static_cast<std::size_t>(i)])]);
    }
    return out;
}

} // namespace

const char* algo_name(Algo a) {
    switch (a) {
    case Algo::rs: return "rs";
    case Algo::di: return "di";
    case Algo::planar: return "planar";
    case Algo::merge: return "merge";
    case Algo::oracle: return "oracle";
    }
    return "?";
}

std::pair<double, int> kth_nn_distance(const Polygon& p, const Triangulation& t, Point c,
                                       const std::vector<Point>& sites, int k) {
    require_k(k, sites.size(), "kth_nn_distance");
    std::vector<std::pair<double, int>> d;
    d.reserve(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        d.emplace_back(geodesic_distance(p, t, c, sites[i]), static_cast<int>(i));
    }
    auto kth = d.begin() + (k - 1);
    std::nth_element(d.begin(), kth, d.end());
    return *kth;
}

int count_covered(const Polygon& p, const Triangulation& t, const Disc& d,
                  const std::vector<Point>& sites) {
    int covered = 0;
    for (const Point& s : sites) {
        if (geodesic_distance(p, t, d.center, s) <= d.radius + kDistTol) ++covered;
    }
    return covered;
}

SkegResult rs_algo(const Polygon& p, const Triangulation& t, const std::vector<Point>& sites,
                   int k, std::uint64_t seed, std::vector<int>* sampledOut) {
    const std::size_t n = sites.size();
    require_k(k, n, "rs_algo");

    const double raw = (static_cast<double>(n) / k) * std::log(static_cast<double>(n));
    const long long samples = std::max(1LL, static_cast<long long>(std::ceil(raw)));

    SplitRng rng(seed);
    double minRadius = std::numeric_limits<double>::infinity();
    std::size_t minIdx = 0;
    std::vector<Point> others(n - 1);
    for (long long s = 0; s < samples; ++s) {
        const std::size_t idx = static_cast<std::size_t>(rng.next_below(n));
        if (sampledOut) sampledOut->push_back(static_cast<int>(idx));
        double temp = 0.0;
        if (k >= 2) {
            others.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (j != idx) others.push_back(sites[j]);
            }
            temp = kth_nn_distance(p, t, sites[idx], others, k - 1).first;
        }
        if (temp < minRadius) {
            minRadius = temp;
            minIdx = idx;
        }
    }

    SkegResult r;
    r.disc = {sites[minIdx], minRadius};
    r.algorithm = Algo::rs;
    r.seed = seed;
    r.stats.sampleSize = samples;
    r.coveredCount = count_covered(p, t, r.disc, sites);
    return r;
}

Disc planar_2approx(const std::vector<Point>& points, int k) {
    const std::size_t n = points.size();
    require_k(k, n, "planar_2approx");
    double best = std::numeric_limits<double>::infinity();
    std::size_t bestIdx = 0;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[j] = dist(points[i], points[j]);
        auto kth = d.begin() + (k - 1);
        std::nth_element(d.begin(), kth, d.end());
        if (*kth < best) {
            best = *kth;
            bestIdx = i;
        }
    }
    return {points[bestIdx], best};
}

std::vector<int> interval_depths(const std::vector<ChordInterval>& intervals,
                                 const std::vector<double>& candidates) {
    std::vector<double> los, his;
    los.reserve(intervals.size());
    his.reserve(intervals.size());
    for (const ChordInterval& iv : intervals) {
        los.push_back(iv.lo);
        his.push_back(iv.hi);
    }
    std::sort(los.begin(), los.end());
    std::sort(his.begin(), his.end());
    std::vector<int> depth;
    depth.reserve(candidates.size());
    for (double x : candidates) {
        const auto started = std::upper_bound(los.begin(), los.end(), x) - los.begin();
        const auto ended = std::lower_bound(his.begin(), his.end(), x) - his.begin();
        depth.push_back(static_cast<int>(started - ended));
    }
    return depth;
}

MergeResult merge_algo(const Polygon& p, const Triangulation& t, const Chord& ell,
                       const std::vector<Point>& sitesTau, int k, std::uint64_t seed) {
    const std::size_t n = sitesTau.size();
    require_k(k, n, "merge_algo");

    // One funnel per site, shared by the projection, every k-th-NN evaluation
    // and every interval extraction below.
    std::vector<std::vector<DistancePiece>> pieces(n);
    std::vector<double> params(n);
    std::vector<Point> projected(n);
    for (std::size_t i = 0; i < n; ++i) {
        pieces[i] = distance_function(build_funnel(p, t, sitesTau[i], ell), ell);
        const ChordProjection pr = project_from_pieces(pieces[i], ell);
        params[i] = pr.param;
        projected[i] = pr.point;
    }

    // Sites clamped past the same chord endpoint all project to the identical
    // param, so they are one candidate, not many. Without this collapse the
    // random pruning below degrades to one elimination per round on the tie
    // group.
    std::vector<int> cands(n);
    std::iota(cands.begin(), cands.end(), 0);
    std::sort(cands.begin(), cands.end(),
              [&](int a, int b) { return params[static_cast<std::size_t>(a)] < params[static_cast<std::size_t>(b)]; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [&](int a, int b) {
                                return params[static_cast<std::size_t>(a)] == params[static_cast<std::size_t>(b)];
                            }),
                cands.end());
    std::vector<char> siteActive(n, 1);

    SplitRng rng(seed);
    long long iterations = 0;
    Point center = projected[0];
    double rho = std::numeric_limits<double>::infinity();
    std::vector<double> ds;

    while (!cands.empty()) {
        ++iterations;
        const std::size_t slot = static_cast<std::size_t>(rng.next_below(cands.size()));
        const int pick = cands[slot];

        ds.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (siteActive[j]) ds.push_back(eval_pieces(pieces[j], params[static_cast<std::size_t>(pick)]));
        }
        auto kth = ds.begin() + (k - 1);
        std::nth_element(ds.begin(), kth, ds.end());
        if (*kth < rho) {
            rho = *kth;
            center = projected[static_cast<std::size_t>(pick)];
        }
        if (cands.size() == 1) break;

        // Prune sites whose discs miss the chord, then candidates whose depth
        // drops below k. The widened radius is never the one returned.
        const double rhoWide = rho + kMergePruneTol * (1.0 + rho);
        std::vector<ChordInterval> ivals;
        ivals.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!siteActive[j]) continue;
            const auto iv = interval_from_pieces(pieces[j], rhoWide, static_cast<int>(j));
            if (iv) {
                ivals.push_back(*iv);
            } else {
                siteActive[j] = 0;
            }
        }

        std::vector<double> candParams;
        candParams.reserve(cands.size());
        for (int c : cands) candParams.push_back(params[static_cast<std::size_t>(c)]);
        const std::vector<int> depth = interval_depths(ivals, candParams);

        std::vector<int> next;
        next.reserve(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cands[i] != pick && depth[i] >= k) next.push_back(cands[i]);
        }
        cands = std::move(next);
    }
    return {center, rho, iterations};
}

SkegResult di_algo(const Polygon& p, const Triangulation& t, const DecompTree& tree,
                   const SiteAssignment& assign, const std::vector<Point>& sites, int nodeId,
                   int k, std::uint64_t seed) {
    const DecompNode& node = tree.nodes[static_cast<std::size_t>(nodeId)];
    const std::vector<Point> nodeSites = gather_node_sites(assign, sites, nodeId);
    require_k(k, nodeSites.size(), "di_algo");

    SkegResult res;
    res.algorithm = Algo::di;
    res.seed = seed;
    res.stats.recursionDepth = node.depth;

    if (tree.is_leaf(nodeId)) {
        res.disc = planar_2approx(nodeSites, k);
        res.coveredCount = count_covered(p, t, res.disc, nodeSites);
        return res;
    }

    double minRadius = std::numeric_limits<double>::infinity();
    Point minPoint{0.0, 0.0};
    bool haveChild = false;

    const bool goLeft = assign.count(node.left) >= k;
    const bool goRight = assign.count(node.right) >= k;
    if (goLeft && goRight) {
        const SkegResult lr = di_algo(p, t, tree, assign, sites, node.left, k, seed);
        const SkegResult rr = di_algo(p, t, tree, assign, sites, node.right, k, seed);
        res.stats.iterations += lr.stats.iterations + rr.stats.iterations;
        res.stats.recursionDepth =
            std::max({res.stats.recursionDepth, lr.stats.recursionDepth, rr.stats.recursionDepth});
        if (lr.disc.radius < rr.disc.radius) {
            minRadius = lr.disc.radius;
            minPoint = lr.disc.center;
        } else {
            minRadius = rr.disc.radius;
            minPoint = rr.disc.center;
        }
        haveChild = true;
    } else if (goLeft || goRight) {
        const SkegResult cr =
            di_algo(p, t, tree, assign, sites, goLeft ? node.left : node.right, k, seed);
        res.stats.iterations += cr.stats.iterations;
        res.stats.recursionDepth = std::max(res.stats.recursionDepth, cr.stats.recursionDepth);
        minRadius = cr.disc.radius;
        minPoint = cr.disc.center;
        haveChild = true;
    }

    const Chord ell = diagonal_chord(p, t, node.diagIndex);
    const MergeResult mr =
        merge_algo(p, t, ell, nodeSites, k, derive_seed(seed, static_cast<std::uint64_t>(nodeId)));
    res.stats.iterations += mr.iterations;
    if (!haveChild || mr.rho < minRadius) {
        minRadius = mr.rho;
        minPoint = mr.center;
    }

    res.disc = {minPoint, minRadius};
    res.coveredCount = count_covered(p, t, res.disc, nodeSites);
    return res;
}

SkegResult main_algo(const Polygon& p, const Triangulation& t, const DecompTree& tree,
                     const SiteAssignment& assign, const std::vector<Point>& sites, int k,
                     std::uint64_t seed) {
    const std::size_t n = sites.size();
    require_k(k, n, "main_algo");

    if (is_convex(p)) {
        SkegResult res;
        res.disc = planar_2approx(sites, k);
        res.algorithm = Algo::planar;
        res.seed = seed;
        res.coveredCount = count_covered(p, t, res.disc, sites);
        return res;
    }
    const double threshold = static_cast<double>(k) * std::log2(std::max<double>(static_cast<double>(n), 2.0));
    if (threshold > static_cast<double>(n)) {
        return rs_algo(p, t, sites, k, seed);
    }
    return di_algo(p, t, tree, assign, sites, tree.root, k, seed);
}

} // namespace skeg
