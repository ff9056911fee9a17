#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "skeg/geodesic.hpp"
#include "skeg/oracle.hpp"
#include "skeg/rng.hpp"

using namespace skeg;

namespace {

const Polygon kSquare = validate_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
const Polygon kLShape = validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});

std::vector<DistancePiece> pieces_for(const Polygon& p, const Triangulation& t,
                                      Point u, const Chord& ell) {
    return distance_function(build_funnel(p, t, u, ell), ell);
}

// Pieces must tile [0, |ell|] with exactly shared breakpoints.
void check_tiling(const std::vector<DistancePiece>& pieces, const Chord& ell) {
    REQUIRE(!pieces.empty());
    CHECK(pieces.front().xLo == 0.0);
    CHECK(pieces.back().xHi == doctest::Approx(chord_length(ell)).epsilon(1e-15));
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        CHECK(pieces[i].xHi == pieces[i + 1].xLo);
        CHECK(pieces[i].xLo < pieces[i].xHi);
    }
}

double eval_at(const std::vector<DistancePiece>& pieces, double x) {
    for (const DistancePiece& piece : pieces)
        if (x >= piece.xLo && x <= piece.xHi) return piece.eval(x);
    return pieces.back().eval(x);
}

} // namespace

TEST_CASE("visible chord produces a single direct piece") {
    Triangulation t = triangulate(kSquare);
    const Chord ell{{0, 0}, {4, 0}};
    auto pieces = pieces_for(kSquare, t, {2, 2}, ell);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].xLo == 0.0);
    CHECK(pieces[0].xHi == doctest::Approx(4.0));
    CHECK(pieces[0].offset == 0.0);
    CHECK(pieces[0].anchor.x == doctest::Approx(2.0));
    CHECK(pieces[0].anchor.y == doctest::Approx(2.0));
    CHECK(pieces[0].eval(0.0) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(pieces[0].eval(2.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("occluded chord splits at the reflex-corner shadow") {
    Triangulation t = triangulate(kLShape);
    const Point u{0.5, 1.5};
    const Chord ell{{0, 0}, {2, 1}};
    auto pieces = pieces_for(kLShape, t, u, ell);
    REQUIRE(pieces.size() == 2);
    check_tiling(pieces, ell);

    // near ell.a the site sees the chord directly
    CHECK(pieces[0].offset == 0.0);
    CHECK(pieces[0].anchor.x == doctest::Approx(0.5));
    CHECK(pieces[0].anchor.y == doctest::Approx(1.5));

    // beyond the shadow of (1,1) the path bends there
    CHECK(pieces[1].anchor.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pieces[1].anchor.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pieces[1].offset == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    // breakpoint: extending u->(1,1) meets the chord at (4/3, 2/3)
    const double marker = (2.0 / 3.0) * std::sqrt(5.0);
    CHECK(pieces[0].xHi == doctest::Approx(marker).epsilon(1e-12));
    const double atMarker = (5.0 / 6.0) * std::sqrt(2.0);
    CHECK(pieces[0].eval(pieces[0].xHi) == doctest::Approx(atMarker).epsilon(1e-12));
    CHECK(pieces[1].eval(pieces[1].xLo) == doctest::Approx(atMarker).epsilon(1e-12));
}

TEST_CASE("projection onto a visible chord is the Euclidean foot") {
    Triangulation t = triangulate(kSquare);
    ChordProjection pr = project_onto_chord(kSquare, t, {1, 3}, Chord{{0, 2}, {4, 2}});
    CHECK(pr.point.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.point.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pr.param == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.distance == doctest::Approx(1.0).epsilon(1e-12));

    ChordProjection pd = project_onto_chord(kSquare, t, {3, 1}, Chord{{0, 0}, {4, 4}});
    CHECK(pd.point.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pd.point.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pd.distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("projection clamps to a chord endpoint when the minimum is there") {
    Triangulation t = triangulate(kLShape);
    ChordProjection pr = project_onto_chord(kLShape, t, {0.5, 1.5}, Chord{{0, 0}, {1, 1}});
    CHECK(pr.point.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.point.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.param == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(pr.distance == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("disc-chord intersection on a visible chord") {
    Polygon rect = validate_polygon({{0, 0}, {4, 0}, {4, 3}, {0, 3}});
    Triangulation t = triangulate(rect);
    const Chord ell{{0, 0}, {4, 0}};
    auto hit = chord_disc_intersection(rect, t, {2, 2}, ell, 2.5, 7);
    REQUIRE(hit.has_value());
    CHECK(hit->lo == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(hit->hi == doctest::Approx(3.5).epsilon(1e-9));
    CHECK(hit->owner == 7);

    CHECK_FALSE(chord_disc_intersection(rect, t, {2, 2}, ell, 1.5).has_value());
}

TEST_CASE("disc-chord intersection around a reflex corner") {
    Triangulation t = triangulate(kLShape);
    auto hit = chord_disc_intersection(kLShape, t, {1.5, 0.5}, Chord{{0, 0}, {1, 1}}, 1.0);
    REQUIRE(hit.has_value());
    CHECK(hit->lo == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(hit->hi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("piece-level entry points match the wrapped ones") {
    Triangulation t = triangulate(kLShape);
    const Point u{1.5, 0.5};
    const Chord ell{{0, 0}, {1, 1}};
    auto pieces = pieces_for(kLShape, t, u, ell);

    ChordProjection a = project_onto_chord(kLShape, t, u, ell);
    ChordProjection b = project_from_pieces(pieces, ell);
    CHECK(a.param == doctest::Approx(b.param).epsilon(1e-15));
    CHECK(a.distance == doctest::Approx(b.distance).epsilon(1e-15));

    auto ha = chord_disc_intersection(kLShape, t, u, ell, 1.0, 3);
    auto hb = interval_from_pieces(pieces, 1.0, 3);
    REQUIRE(ha.has_value());
    REQUIRE(hb.has_value());
    CHECK(ha->lo == doctest::Approx(hb->lo).epsilon(1e-15));
    CHECK(ha->hi == doctest::Approx(hb->hi).epsilon(1e-15));
    CHECK(hb->owner == 3);
}

TEST_CASE("random chords: tiling, continuity, convexity, oracle agreement") {
    for (std::uint64_t seed : {61u, 62u, 63u, 64u}) {
        Polygon p = random_simple_polygon(seed, 24);
        Triangulation t = triangulate(p);
        REQUIRE(!t.diagonals.empty());
        GeodesicOracle oracle(p);
        std::vector<Point> sites = random_sites(p, derive_seed(seed, 1), 4);
        SplitRng rng(derive_seed(seed, 2));
        for (int rep = 0; rep < 3; ++rep) {
            const int d = static_cast<int>(rng.next_below(t.diagonals.size()));
            const Chord ell = diagonal_chord(p, t, d);
            const double L = chord_length(ell);
            for (const Point& u : sites) {
                auto pieces = pieces_for(p, t, u, ell);
                check_tiling(pieces, ell);
                // continuity at interior breakpoints
                for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
                    const double x = pieces[i].xHi;
                    CHECK(pieces[i].eval(x) == doctest::Approx(pieces[i + 1].eval(x)).epsilon(kDistTol));
                }
                // convexity via midpoints, and values against the slow engine
                const Point dir = {(ell.b.x - ell.a.x) / L, (ell.b.y - ell.a.y) / L};
                double prev = -1.0, prevPrev = -1.0;
                for (int s = 0; s <= 10; ++s) {
                    const double x = L * s / 10.0;
                    const double fx = eval_at(pieces, x);
                    const Point q{ell.a.x + x * dir.x, ell.a.y + x * dir.y};
                    const double ref = oracle.distance(u, q);
                    CHECK(fx == doctest::Approx(ref).epsilon(kDistTol));
                    if (prevPrev >= 0.0) {
                        // f at the middle sample is at most the chord of its
                        // neighbours (samples are evenly spaced)
                        CHECK(prev <= 0.5 * (prevPrev + fx) + kDistTol);
                    }
                    prevPrev = prev;
                    prev = fx;
                }
                // projection really is the minimum
                ChordProjection pr = project_from_pieces(pieces, ell);
                for (int s = 0; s <= 40; ++s) {
                    const double x = L * s / 40.0;
                    CHECK(pr.distance <= eval_at(pieces, x) + kDistTol);
                }
                CHECK(pr.distance == doctest::Approx(eval_at(pieces, pr.param)).epsilon(kDistTol));
            }
        }
    }
}

TEST_CASE("interval endpoints sit on the level set") {
    for (std::uint64_t seed : {71u, 72u}) {
        Polygon p = random_simple_polygon(seed, 20);
        Triangulation t = triangulate(p);
        REQUIRE(!t.diagonals.empty());
        std::vector<Point> sites = random_sites(p, derive_seed(seed, 3), 3);
        const Chord ell = diagonal_chord(p, t, 0);
        const double L = chord_length(ell);
        for (const Point& u : sites) {
            auto pieces = pieces_for(p, t, u, ell);
            ChordProjection pr = project_from_pieces(pieces, ell);
            for (double rho : {pr.distance * 1.1 + 0.1, pr.distance + 0.6 * L}) {
                auto hit = interval_from_pieces(pieces, rho);
                REQUIRE(hit.has_value());
                CHECK(hit->lo <= pr.param + kDistTol);
                CHECK(hit->hi >= pr.param - kDistTol);
                // endpoints are either at distance rho or clamped to the chord end
                for (double end : {hit->lo, hit->hi}) {
                    if (end > kDistTol && end < L - kDistTol)
                        CHECK(eval_at(pieces, end) == doctest::Approx(rho).epsilon(1e-9));
                    else
                        CHECK(eval_at(pieces, end) <= rho + kDistTol);
                }
            }
            CHECK_FALSE(interval_from_pieces(pieces, pr.distance * 0.5 - 0.01).has_value());
        }
    }
}
