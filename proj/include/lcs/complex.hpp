#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcs/errors.hpp"

namespace lcs {

// A face is a sorted list of distinct positive vertex ids.
using Face = std::vector<int>;

Face sorted_face(Face f);
bool is_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);

/// Finite simplicial complex stored by its facet list (inclusion-maximal faces).
/// Facets are sorted vertex lists; the facet list itself is lexicographically
/// sorted, so equal complexes compare equal componentwise. Non-pure complexes
/// are first-class. The empty complex (no facets, dim -1) is a valid value:
/// from_facets rejects empty input, but operations may produce it.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(std::vector<Face> facet_list);
    static SimplicialComplex empty() { return SimplicialComplex(); }

    const std::vector<Face>& facets() const { return facets_; }
    bool is_empty() const { return facets_.empty(); }
    int dim() const;
    bool is_pure() const;

    std::vector<int> vertices() const;
    int num_vertices() const { return static_cast<int>(vertices().size()); }

    bool contains_face(const Face& f) const;

    /// All k-dimensional faces (k+1 element subsets of facets), deduplicated, sorted.
    std::vector<Face> faces(int k) const;

    /// f_k for k = 0..dim.
    std::vector<std::int64_t> f_vector() const;

    std::int64_t euler_characteristic() const;

    /// All faces of every dimension, deduplicated, sorted.
    std::vector<Face> all_faces() const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

private:
    std::vector<Face> facets_;
    static SimplicialComplex from_maximal_unchecked(std::vector<Face> facet_list);
    friend SimplicialComplex remove_pair(const SimplicialComplex&, const Face&, const Face&);
    friend SimplicialComplex remove_facet(const SimplicialComplex&, const Face&);
    friend SimplicialComplex remove_maximal_face(const SimplicialComplex&, const Face&);
};

struct PseudomanifoldReport {
    bool pure = false;
    bool ridge_degrees_ok = false;
    bool strongly_connected = false;
    bool is_pseudomanifold() const { return pure && ridge_degrees_ok; }
};

/// Report on purity, ridge degrees (every (d-1)-face of the top-dimensional
/// part in at most two facets) and dual-graph connectivity.
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c);

/// Subcomplex generated by the ridges lying in exactly one facet.
/// Requires a pure complex with ridge degrees <= 2.
SimplicialComplex boundary_complex(const SimplicialComplex& c);

/// lk(F) = { G : G disjoint from F, G union F a face }.
SimplicialComplex link(const SimplicialComplex& c, const Face& f);

/// v * C. v must be a fresh vertex.
SimplicialComplex cone(int v, const SimplicialComplex& c);

/// Remove a facet, keeping every proper face of it that stays maximal.
SimplicialComplex remove_facet(const SimplicialComplex& c, const Face& facet);

/// Remove an inclusion-maximal face (any dimension), keeping its proper faces.
SimplicialComplex remove_maximal_face(const SimplicialComplex& c, const Face& f);

/// Combinatorial sphere test for d <= 3 (closed pseudomanifold + link
/// recursion + Euler characteristic). d >= 4 throws UnsupportedDimension.
bool verify_sphere(const SimplicialComplex& c, int d);

/// Union of face sets of two complexes.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Apply a vertex relabeling (must be injective on the complex's vertices).
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<std::pair<int, int>>& map);

struct ShellingSearchResult {
    enum class Status { found, not_shellable, budget_exhausted };
    Status status = Status::budget_exhausted;
    std::vector<Face> order;  // filled when found
};

/// Exhaustive backtracking search for a shelling order of a pure complex.
/// Each prefix intersection is checked pure (d-1)-dimensional and recursively
/// shellable. Absence within budget is reported distinctly from a proven
/// negative.
ShellingSearchResult find_shelling_order(const SimplicialComplex& c,
                                         std::uint64_t node_budget = 50'000'000);

std::string face_to_string(const Face& f);

}  // namespace lcs
