#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lcs/complex.hpp"

namespace lcs {

/// Dual graph of a pure complex: one node per facet, one arc per pair of
/// facets sharing a ridge, labeled by that ridge.
struct DualGraph {
    int num_nodes = 0;
    struct Arc {
        int a, b;  // facet indices, a < b
        Face ridge;
    };
    std::vector<Arc> arcs;
    bool connected() const;
};

DualGraph dual_graph(const SimplicialComplex& c);

/// Rooted spanning tree of a dual graph. parent[root] = -1.
struct DualSpanningTree {
    int root = 0;
    std::vector<int> parent;
    std::vector<Face> parent_ridge;  // ridge shared with the parent

    int size() const { return static_cast<int>(parent.size()); }
    bool crosses(const Face& ridge) const;
    /// Children lists derived from parent[].
    std::vector<std::vector<int>> children() const;
    /// Natural labeling: BFS order from the root (parents before children).
    std::vector<int> bfs_order() const;
};

/// Validates that the arcs of `t` are arcs of `g` and span it.
void check_spanning(const DualGraph& g, const DualSpanningTree& t);

/// Deterministic pseudo-random spanning tree (shuffled Kruskal), rooted at `root`.
DualSpanningTree random_spanning_tree(const DualGraph& g, int root, std::uint64_t seed);

/// BFS spanning tree rooted at `root` (arcs in input order).
DualSpanningTree bfs_spanning_tree(const DualGraph& g, int root);

/// Enumerate all spanning trees (as arc-index sets), invoking the callback for
/// each. Return false from the callback to stop. Trees are reported rooted at
/// `root`.
void enumerate_spanning_trees(const DualGraph& g, int root,
                              const std::function<bool(const DualSpanningTree&)>& cb);

}  // namespace lcs
