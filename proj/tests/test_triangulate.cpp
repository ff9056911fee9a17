#include <doctest.h>

#include <cmath>
#include <vector>

#include "skeg/oracle.hpp"
#include "skeg/polygon.hpp"
#include "skeg/triangulate.hpp"

using namespace skeg;

namespace {

double tri_area(const Polygon& p, const Triangle& t) {
    return 0.5 * orient(p.vertex(t.v[0]), p.vertex(t.v[1]), p.vertex(t.v[2]));
}

void check_triangulation(const Polygon& p, const Triangulation& t) {
    CHECK(t.size() == p.size() - 2);
    CHECK(static_cast<int>(t.diagonals.size()) == p.size() - 3);
    double area = 0.0;
    for (const Triangle& tr : t.triangles) {
        const double a = tri_area(p, tr);
        CHECK(a > 0); // every triangle CCW
        area += a;
    }
    CHECK(area == doctest::Approx(p.area).epsilon(1e-9));

    // dual adjacency is symmetric and labeled with the correct diagonal
    for (int x = 0; x < t.size(); ++x) {
        for (int e = 0; e < 3; ++e) {
            const int nb = t.neighbor[x][e];
            if (nb < 0) continue;
            bool back = false;
            for (int e2 = 0; e2 < 3; ++e2)
                if (t.neighbor[nb][e2] == x) back = true;
            CHECK(back);
            const int d = t.neighborDiag[x][e];
            REQUIRE(d >= 0);
            REQUIRE(d < static_cast<int>(t.diagonals.size()));
            const int u = t.triangles[x].v[e];
            const int v = t.triangles[x].v[(e + 1) % 3];
            const auto& diag = t.diagonals[d];
            CHECK(((diag[0] == u && diag[1] == v) || (diag[0] == v && diag[1] == u)));
        }
    }
}

} // namespace

TEST_CASE("triangle counts on the fixtures") {
    check_triangulation(validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}),
                        triangulate(validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}})));

    Polygon l = validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    Triangulation lt = triangulate(l);
    CHECK(lt.size() == 4);
    check_triangulation(l, lt);

    Polygon star = generate_star_polygon(12);
    Triangulation st = triangulate(star);
    CHECK(st.size() == 22);
    check_triangulation(star, st);
}

TEST_CASE("triangulation survives random polygons") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        for (int m : {5, 9, 17, 33}) {
            Polygon p = random_simple_polygon(seed, m);
            check_triangulation(p, triangulate(p));
        }
    }
}

TEST_CASE("locate_point: interior, boundary tie, outside") {
    Polygon sq = validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    Triangulation t = triangulate(sq);
    REQUIRE(t.size() == 2);

    // these two straddle either corner diagonal the ear clipper may have cut
    const int t0 = locate_point(sq, t, {3.5, 0.3});
    const int t1 = locate_point(sq, t, {0.5, 3.7});
    CHECK(t0 >= 0);
    CHECK(t1 >= 0);
    CHECK(t0 != t1);

    // a point on the diagonal belongs to both triangles; the lower index wins
    Chord d = diagonal_chord(sq, t, 0);
    Point mid = 0.5 * (d.a + d.b);
    CHECK(locate_point(sq, t, mid) == std::min(t0, t1));

    CHECK(locate_point(sq, t, {4.5, 0.5}) == -1);
    CHECK(locate_point(sq, t, {-0.1, -0.1}) == -1);
}

TEST_CASE("diagonal_chord endpoints are the diagonal's polygon vertices") {
    Polygon l = validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    Triangulation t = triangulate(l);
    for (std::size_t d = 0; d < t.diagonals.size(); ++d) {
        Chord c = diagonal_chord(l, t, static_cast<int>(d));
        CHECK(c.a == l.vertex(t.diagonals[d][0]));
        CHECK(c.b == l.vertex(t.diagonals[d][1]));
    }
}
