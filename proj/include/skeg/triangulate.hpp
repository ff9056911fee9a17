#pragma once

#include <array>
#include <vector>

#include "skeg/polygon.hpp"

namespace skeg {

/// Triangle as CCW vertex indices into the polygon.
struct Triangle {
    std::array<int, 3> v;
};

struct Triangulation {
    std::vector<Triangle> triangles;             // size m-2
    std::vector<std::array<int, 2>> diagonals;   // size m-3, vertex index pairs
    // Dual adjacency, filled by triangulate(): across edge (v[e], v[(e+1)%3])
    // of triangle t sits triangle neighbor[t][e] (-1 on the boundary), through
    // diagonal neighborDiag[t][e].
    std::vector<std::array<int, 3>> neighbor;
    std::vector<std::array<int, 3>> neighborDiag;

    int size() const { return static_cast<int>(triangles.size()); }
};

/// Ear-clipping triangulation, O(m^2). The input polygon is CCW and free of
/// degenerate vertices, so an ear always exists.
Triangulation triangulate(const Polygon& p);

/// Index of the lowest-numbered triangle containing q (boundary-inclusive),
/// or -1 if q is outside every triangle.
int locate_point(const Polygon& p, const Triangulation& t, Point q);

/// The diagonal's endpoints as a chord.
Chord diagonal_chord(const Polygon& p, const Triangulation& t, int diagIndex);

} // namespace skeg
