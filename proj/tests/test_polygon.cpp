#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "skeg/errors.hpp"
#include "skeg/polygon.hpp"

using namespace skeg;

namespace {
const std::vector<Point> kSquare{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
const std::vector<Point> kLShape{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
} // namespace

TEST_CASE("validate_polygon accepts the square and the L-shape") {
    Polygon sq = validate_polygon(kSquare);
    CHECK(sq.size() == 4);
    CHECK(sq.reflexIndices.empty());
    CHECK(sq.area == doctest::Approx(16.0));
    CHECK(is_convex(sq));

    Polygon l = validate_polygon(kLShape);
    CHECK(l.reflexIndices == std::vector<int>{3}); // the notch corner (1,1)
    CHECK(l.area == doctest::Approx(3.0));
    CHECK_FALSE(is_convex(l));
}

TEST_CASE("clockwise input is reversed keeping the first vertex first") {
    Polygon p = validate_polygon({{0, 0}, {0, 4}, {4, 4}, {4, 0}});
    REQUIRE(p.size() == 4);
    CHECK(p.vertex(0) == Point{0, 0});
    CHECK(p.vertex(1) == Point{4, 0});
    CHECK(p.vertex(2) == Point{4, 4});
    CHECK(p.vertex(3) == Point{0, 4});
    CHECK(p.area > 0);
}

TEST_CASE("validate_polygon rejections") {
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}}), TooFewVertices);
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {0, 0}, {1, 0}, {1, 1}}), DegenerateVertex);
    // collinear middle vertex
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}}), DegenerateVertex);
    // bowtie
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {4, 4}, {4, 0}, {0, 4}}), SelfIntersecting);
    // non-adjacent edges touching
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {4, 0}, {4, 2}, {2, 0}, {0, 2}}), SelfIntersecting);
}

TEST_CASE("star polygon construction") {
    Polygon star = generate_star_polygon(12);
    CHECK(star.size() == 24);
    CHECK(star.reflexIndices.size() == 12);
    // tips at radius 2, valleys at 0.5, alternating
    for (int i = 0; i < star.size(); ++i) {
        const double r = norm(star.vertex(i));
        if (i % 2 == 0)
            CHECK(r == doctest::Approx(2.0).epsilon(1e-12));
        else
            CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
    }
    for (int idx : star.reflexIndices) CHECK(idx % 2 == 1);

    Polygon small = generate_star_polygon(3);
    CHECK(small.size() == 6);
    CHECK(small.reflexIndices.size() == 3);
}

TEST_CASE("point_in_polygon on the L-shape") {
    Polygon l = validate_polygon(kLShape);
    CHECK(point_in_polygon(l, {0.5, 0.5}));
    CHECK(point_in_polygon(l, {1.5, 0.5}));
    CHECK(point_in_polygon(l, {0.5, 1.5}));
    CHECK_FALSE(point_in_polygon(l, {1.5, 1.5})); // the notch
    CHECK_FALSE(point_in_polygon(l, {-0.1, 0.5}));
    CHECK_FALSE(point_in_polygon(l, {2.1, 0.5}));
    // boundary is inclusive: edge point, polygon vertex, reflex vertex
    CHECK(point_in_polygon(l, {1, 0}));
    CHECK(point_in_polygon(l, {0, 0}));
    CHECK(point_in_polygon(l, {1, 1}));
    CHECK(point_in_polygon(l, {1, 1.5})); // on the notch's vertical edge
}

TEST_CASE("segment_in_polygon on the L-shape") {
    Polygon l = validate_polygon(kLShape);
    CHECK(segment_in_polygon(l, {0.2, 0.2}, {1.8, 0.8}));
    // cutting across the notch leaves the polygon
    CHECK_FALSE(segment_in_polygon(l, {0.5, 1.8}, {1.8, 0.5}));
    // grazing the reflex vertex exactly counts as inside
    CHECK(segment_in_polygon(l, {0.5, 1.5}, {1.5, 0.5}));
    // running along the boundary counts as inside
    CHECK(segment_in_polygon(l, {0, 0}, {2, 0}));
    CHECK(segment_in_polygon(l, {0.5, 0}, {1.5, 0}));
    // leaving through an edge
    CHECK_FALSE(segment_in_polygon(l, {0.5, 0.5}, {2.5, 0.5}));
}
