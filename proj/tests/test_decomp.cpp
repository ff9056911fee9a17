#include <doctest.h>

#include <cmath>
#include <vector>

#include "skeg/decomp.hpp"
#include "skeg/errors.hpp"
#include "skeg/oracle.hpp"

using namespace skeg;

namespace {

// Child "share" of the parent vertex count: triangles + 1, crediting one
// endpoint of the splitting diagonal to each side. Shares sum to the parent
// count exactly, so the 1/3-2/3 bound is checkable without slack.
void check_balance(const DecompTree& tree) {
    for (const DecompNode& n : tree.nodes) {
        if (n.left < 0) continue;
        const int f = n.triCount + 2;
        const int lo = (f + 2) / 3;      // ceil(f/3)
        const int hi = (2 * f) / 3;      // floor(2f/3)
        for (int child : {n.left, n.right}) {
            const int share = tree.nodes[child].triCount + 1;
            CHECK(share >= lo);
            CHECK(share <= hi);
        }
        CHECK(tree.nodes[n.left].triCount + tree.nodes[n.right].triCount == n.triCount);
    }
}

void check_height(const Polygon& p, const DecompTree& tree) {
    const double bound = std::log(static_cast<double>(p.size())) / std::log(1.5) + 2.0;
    CHECK(tree.height <= static_cast<int>(std::ceil(bound)));
}

} // namespace

TEST_CASE("trivial trees: triangle and square") {
    Polygon tri = validate_polygon({{0, 0}, {4, 0}, {2, 3}});
    DecompTree tt = build_decomp_tree(tri, triangulate(tri));
    CHECK(tt.nodes.size() == 1);
    CHECK(tt.is_leaf(tt.root));
    CHECK(tt.height == 0);

    Polygon sq = validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    DecompTree st = build_decomp_tree(sq, triangulate(sq));
    CHECK(st.nodes.size() == 3);
    CHECK(st.height == 1);
    CHECK_FALSE(st.is_leaf(st.root));
    CHECK(st.nodes[st.root].diagIndex == 0);
}

TEST_CASE("balance and height on a convex 16-gon") {
    std::vector<Point> verts;
    for (int i = 0; i < 16; ++i) {
        const double a = 2.0 * M_PI * i / 16.0;
        verts.push_back({4 * std::cos(a), 4 * std::sin(a)});
    }
    Polygon p = validate_polygon(verts);
    DecompTree tree = build_decomp_tree(p, triangulate(p));
    check_balance(tree);
    CHECK(tree.height <= 7); // ceil(log_{3/2} 16)
}

TEST_CASE("balance and height on stars and random polygons") {
    for (int spikes : {3, 8, 20}) {
        Polygon p = generate_star_polygon(spikes);
        DecompTree tree = build_decomp_tree(p, triangulate(p));
        check_balance(tree);
        check_height(p, tree);
    }
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        for (int m : {6, 14, 30, 60}) {
            Polygon p = random_simple_polygon(seed, m);
            DecompTree tree = build_decomp_tree(p, triangulate(p));
            check_balance(tree);
            check_height(p, tree);
        }
    }
}

TEST_CASE("locate_sites splits square sites across the root diagonal") {
    Polygon sq = validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    Triangulation t = triangulate(sq);
    DecompTree tree = build_decomp_tree(sq, t);
    // off-diagonal sites, one per triangle whichever corner diagonal was cut
    std::vector<Point> sites{{2, 1}, {2, 3}};
    SiteAssignment assign = locate_sites(sq, t, tree, sites);
    CHECK(assign.count(tree.root) == 2);
    CHECK(assign.count(tree.nodes[tree.root].left) == 1);
    CHECK(assign.count(tree.nodes[tree.root].right) == 1);
}

TEST_CASE("locate_sites with no sites leaves every range empty") {
    Polygon l = validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    Triangulation t = triangulate(l);
    DecompTree tree = build_decomp_tree(l, t);
    SiteAssignment assign = locate_sites(l, t, tree, {});
    for (std::size_t node = 0; node < tree.nodes.size(); ++node)
        CHECK(assign.count(static_cast<int>(node)) == 0);
}

TEST_CASE("locate_sites partitions and matches brute-force location") {
    Polygon p = random_simple_polygon(31, 18);
    Triangulation t = triangulate(p);
    DecompTree tree = build_decomp_tree(p, t);
    std::vector<Point> sites = random_sites(p, 77, 25);
    SiteAssignment assign = locate_sites(p, t, tree, sites);

    REQUIRE(assign.order.size() == sites.size());
    std::vector<int> seen(sites.size(), 0);
    for (int idx : assign.order) ++seen[idx];
    for (int c : seen) CHECK(c == 1); // permutation

    // each node's range is the concatenation of its children's
    for (std::size_t node = 0; node < tree.nodes.size(); ++node) {
        const DecompNode& n = tree.nodes[node];
        if (n.left < 0) continue;
        const auto [pb, pe] = assign.nodeRange[node];
        const auto [lb, le] = assign.nodeRange[n.left];
        const auto [rb, re] = assign.nodeRange[n.right];
        CHECK(pb == lb);
        CHECK(le == rb);
        CHECK(re == pe);
    }

    // leaf assignment agrees with a direct lowest-triangle scan
    for (std::size_t node = 0; node < tree.nodes.size(); ++node) {
        const DecompNode& n = tree.nodes[node];
        if (n.left >= 0) continue;
        const auto [b, e] = assign.nodeRange[node];
        for (int i = b; i < e; ++i) {
            const int site = assign.order[i];
            CHECK(assign.siteTriangle[site] == n.triangle);
            CHECK(locate_point(p, t, sites[site]) == n.triangle);
        }
    }
}

TEST_CASE("locate_sites rejects sites outside the polygon") {
    Polygon sq = validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    Triangulation t = triangulate(sq);
    DecompTree tree = build_decomp_tree(sq, t);
    CHECK_THROWS_AS(locate_sites(sq, t, tree, {{5, 5}}), SiteOutsidePolygon);
}
