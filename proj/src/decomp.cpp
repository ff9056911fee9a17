#include "skeg/decomp.hpp"

#include <algorithm>
#include <string>

#include "skeg/errors.hpp"

namespace skeg {

namespace {

struct DualEdge {
    int to = -1;
    int diag = -1;
};

// Adjacency of the triangulation dual restricted to a triangle subset.
std::vector<std::vector<DualEdge>> subset_adjacency(const Triangulation& t,
                                                    const std::vector<int>& tris,
                                                    const std::vector<char>& inSet) {
    std::vector<std::vector<DualEdge>> adj(t.triangles.size());
    for (int ti : tris) {
        for (int e = 0; e < 3; ++e) {
            const int nb = t.neighbor[static_cast<std::size_t>(ti)][static_cast<std::size_t>(e)];
            if (nb >= 0 && inSet[static_cast<std::size_t>(nb)]) {
                adj[static_cast<std::size_t>(ti)].push_back(
                    {nb, t.neighborDiag[static_cast<std::size_t>(ti)][static_cast<std::size_t>(e)]});
            }
        }
    }
    return adj;
}

struct Builder {
    const Triangulation& t;
    DecompTree tree;

    int build(std::vector<int> tris, int depth) {
        const int T = static_cast<int>(tris.size());
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[static_cast<std::size_t>(id)].triCount = T;
        tree.nodes[static_cast<std::size_t>(id)].depth = depth;
        tree.height = std::max(tree.height, depth);
        if (T == 1) {
            tree.nodes[static_cast<std::size_t>(id)].triangle = tris[0];
            return id;
        }

        std::vector<char> inSet(t.triangles.size(), 0);
        for (int ti : tris) inSet[static_cast<std::size_t>(ti)] = 1;
        const auto adj = subset_adjacency(t, tris, inSet);

        // Walk the dual from a leaf, accumulating subtree sizes; take the
        // first diagonal whose split keeps both vertex shares (triangles
        // below + 1) within [ceil(f/3), floor(2f/3)] of f = T + 2.
        int start = tris[0];
        for (int ti : tris) {
            if (adj[static_cast<std::size_t>(ti)].size() <= 1) {
                start = ti;
                break;
            }
        }
        const int f = T + 2;
        const int shareLo = (f + 2) / 3;
        const int shareHi = (2 * f) / 3;

        std::vector<int> order, parent(t.triangles.size(), -1), size(t.triangles.size(), 1);
        std::vector<int> parentDiag(t.triangles.size(), -1);
        order.reserve(tris.size());
        {
            std::vector<int> stack{start};
            parent[static_cast<std::size_t>(start)] = start;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                order.push_back(x);
                for (const DualEdge& e : adj[static_cast<std::size_t>(x)]) {
                    if (parent[static_cast<std::size_t>(e.to)] < 0) {
                        parent[static_cast<std::size_t>(e.to)] = x;
                        parentDiag[static_cast<std::size_t>(e.to)] = e.diag;
                        stack.push_back(e.to);
                    }
                }
            }
        }
        int cutChild = -1;
        for (auto it = order.rbegin(); it != order.rend(); ++it) { // post-order accumulation
            const int x = *it;
            if (x != start) size[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])] +=
                size[static_cast<std::size_t>(x)];
        }
        for (auto it = order.rbegin(); it != order.rend() && cutChild < 0; ++it) {
            const int x = *it;
            if (x == start) continue;
            const int share = size[static_cast<std::size_t>(x)] + 1;
            if (share >= shareLo && share <= shareHi) cutChild = x;
        }
        if (cutChild < 0) {
            throw NoBalancedDiagonal("no diagonal splits " + std::to_string(f) +
                                     " vertices within [f/3, 2f/3]");
        }

        // Partition: triangles under cutChild (blocked at the cut edge) vs the rest.
        std::vector<int> below, above;
        {
            std::vector<char> mark(t.triangles.size(), 0);
            std::vector<int> stack{cutChild};
            mark[static_cast<std::size_t>(cutChild)] = 1;
            const int blocked = parent[static_cast<std::size_t>(cutChild)];
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                below.push_back(x);
                for (const DualEdge& e : adj[static_cast<std::size_t>(x)]) {
                    if (!mark[static_cast<std::size_t>(e.to)] &&
                        !(x == cutChild && e.to == blocked)) {
                        mark[static_cast<std::size_t>(e.to)] = 1;
                        stack.push_back(e.to);
                    }
                }
            }
            for (int ti : tris) {
                if (!mark[static_cast<std::size_t>(ti)]) above.push_back(ti);
            }
        }

        tree.nodes[static_cast<std::size_t>(id)].diagIndex =
            parentDiag[static_cast<std::size_t>(cutChild)];
        const int left = build(std::move(below), depth + 1);
        const int right = build(std::move(above), depth + 1);
        tree.nodes[static_cast<std::size_t>(id)].left = left;
        tree.nodes[static_cast<std::size_t>(id)].right = right;
        tree.nodes[static_cast<std::size_t>(left)].parent = id;
        tree.nodes[static_cast<std::size_t>(right)].parent = id;
        return id;
    }
};

} // namespace

DecompTree build_decomp_tree(const Polygon&, const Triangulation& t) {
    Builder b{t, {}};
    std::vector<int> all(t.triangles.size());
    for (int i = 0; i < t.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    b.tree.root = b.build(std::move(all), 0);
    return std::move(b.tree);
}

SiteAssignment locate_sites(const Polygon& p, const Triangulation& t,
                            const DecompTree& tree, const std::vector<Point>& sites) {
    const int n = static_cast<int>(sites.size());
    SiteAssignment sa;
    sa.siteTriangle.resize(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> byTriangle(t.triangles.size());
    for (int i = 0; i < n; ++i) {
        const int ti = locate_point(p, t, sites[static_cast<std::size_t>(i)]);
        if (ti < 0) {
            throw SiteOutsidePolygon("site " + std::to_string(i) + " lies outside the polygon");
        }
        sa.siteTriangle[static_cast<std::size_t>(i)] = ti;
        byTriangle[static_cast<std::size_t>(ti)].push_back(i);
    }

    // In-order walk: a node's sites end up contiguous because its leaves are
    // visited consecutively; ranges then roll up bottom-to-top.
    sa.order.reserve(static_cast<std::size_t>(n));
    sa.nodeRange.assign(tree.nodes.size(), {0, 0});
    struct Frame {
        int node;
        bool post;
    };
    std::vector<Frame> stack{{tree.root, false}};
    while (!stack.empty()) {
        auto [node, post] = stack.back();
        stack.pop_back();
        const DecompNode& nd = tree.nodes[static_cast<std::size_t>(node)];
        if (tree.is_leaf(node)) {
            const int begin = static_cast<int>(sa.order.size());
            for (int s : byTriangle[static_cast<std::size_t>(nd.triangle)]) sa.order.push_back(s);
            sa.nodeRange[static_cast<std::size_t>(node)] = {begin, static_cast<int>(sa.order.size())};
            continue;
        }
        if (!post) {
            stack.push_back({node, true});
            stack.push_back({nd.right, false});
            stack.push_back({nd.left, false});
            continue;
        }
        sa.nodeRange[static_cast<std::size_t>(node)] = {
            sa.nodeRange[static_cast<std::size_t>(nd.left)].first,
            sa.nodeRange[static_cast<std::size_t>(nd.right)].second};
    }
    return sa;
}

} // namespace skeg
