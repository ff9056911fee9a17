#pragma once

#include <utility>
#include <vector>

#include "skeg/triangulate.hpp"

namespace skeg {

/// Node of the balanced hierarchical decomposition. Leaves carry one
/// triangle; internal nodes carry the splitting diagonal and exactly two
/// children whose triangle sets partition the parent's.
struct DecompNode {
    int parent = -1;
    int left = -1;
    int right = -1;
    int triangle = -1;  // leaf only
    int diagIndex = -1; // internal only, index into Triangulation::diagonals
    int triCount = 0;   // triangles under this node; subpolygon has triCount+2 vertices
    int depth = 0;      // root = 0
};

struct DecompTree {
    std::vector<DecompNode> nodes;
    int root = -1;
    int height = 0; // max leaf depth

    bool is_leaf(int id) const { return nodes[static_cast<std::size_t>(id)].left < 0; }
};

/// Build the balanced decomposition over a triangulation. Every split keeps
/// each child's share of the parent's vertex count within [ceil(f/3),
/// floor(2f/3)], crediting one diagonal endpoint to each side; such a
/// diagonal always exists (centroid edge of the dual tree), so
/// NoBalancedDiagonal signals a corrupted triangulation.
DecompTree build_decomp_tree(const Polygon& p, const Triangulation& t);

/// Sites arranged so every decomposition node owns one contiguous range.
struct SiteAssignment {
    std::vector<int> order;                    // permutation of site indices
    std::vector<std::pair<int, int>> nodeRange; // [begin,end) into order, per node
    std::vector<int> siteTriangle;             // containing triangle per site

    int count(int node) const {
        return nodeRange[static_cast<std::size_t>(node)].second -
               nodeRange[static_cast<std::size_t>(node)].first;
    }
};

/// Locate every site (lowest containing triangle index wins ties on shared
/// edges) and lay the site indices out so each node's sites are contiguous.
/// Throws SiteOutsidePolygon if any site is in no triangle.
SiteAssignment locate_sites(const Polygon& p, const Triangulation& t,
                            const DecompTree& tree, const std::vector<Point>& sites);

} // namespace skeg
