#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "lcs/canonical.hpp"
#include "lcs/complex.hpp"

namespace lcs {

using BigInt = boost::multiprecision::cpp_int;

/// C_d(N) = binom(dN, N) / ((d-1)N + 1), exactly.
BigInt fuss_catalan(int d, std::int64_t n);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Planted plane d-ary tree stored as its preorder word: 1 = internal node
/// (exactly d ordered children), 0 = leaf. A word with N ones has (d-1)N+1
/// zeros, and every proper prefix keeps the walk "unfinished"
/// (#remaining expected children > 0).
struct DaryTree {
    int d = 2;
    std::vector<std::uint8_t> preorder;

    int internal_count() const;
    bool valid() const;
    bool operator==(const DaryTree& o) const { return d == o.d && preorder == o.preorder; }
};

/// Enumerate all planted plane d-ary trees with N internal nodes in
/// depth-first ballot-sequence order: at each position, internal (1) is tried
/// before leaf (0), i.e. words are generated in lexicographically decreasing
/// order. Return false from the callback to stop early.
void enumerate_dary_trees(int d, int n, const std::function<bool(const DaryTree&)>& cb);
std::vector<DaryTree> collect_dary_trees(int d, int n);

/// N d-simplices glued along a dual tree, with the canonical vertex labeling
/// of the rooted-tree bijection: the root carries labels 1..d+1 with the
/// distinguished facet on labels 1..d; each (d-1)-face is labeled by the
/// unique absent label, children are ordered by that label and the attached
/// simplex's new vertex inherits it.
struct TreeOfSimplices {
    int d = 2;
    int n = 0;                                // number of simplices
    std::vector<Face> simplices;              // global vertex ids, sorted, size d+1
    std::vector<int> label;                   // label[v] for v = 1..num_vertices (index 0 unused)
    std::vector<int> parent;                  // parent simplex index, -1 for root
    std::vector<Face> parent_facet;           // shared facet with parent, global ids

    int num_vertices() const { return static_cast<int>(label.size()) - 1; }
    SimplicialComplex complex() const;
    int label_of(int vertex) const { return label[vertex]; }
};

TreeOfSimplices tree_of_simplices_from_dary(const DaryTree& t, int d);

/// Inverse of the bijection; round-trips to the original preorder word.
DaryTree dary_from_tree_of_simplices(const TreeOfSimplices& t);

/// Canonical keys of all combinatorially distinct trees of N d-simplices.
std::vector<CanonicalKey> enumerate_trees_unlabeled(int d, int n);

struct TreeBoundaryStats {
    std::int64_t boundary_facets = 0;
    std::int64_t interior_ridges = 0;
    std::int64_t codim2_faces = 0;
};

/// Structural counts, computed both by formula and by direct face enumeration
/// on the derived complex; a mismatch throws InternalInvariantViolation.
TreeBoundaryStats tree_boundary_stats(const TreeOfSimplices& t);

}  // namespace lcs
