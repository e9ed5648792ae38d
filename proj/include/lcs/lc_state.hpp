#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "lcs/complex.hpp"
#include "lcs/union_find.hpp"

namespace lcs {

/// A (d-1)-cell on the boundary of one tree simplex: the simplex minus its
/// `local`-th vertex (positions refer to the simplex's sorted vertex list).
struct SideRef {
    int simplex = -1;
    int local = -1;
    bool operator==(const SideRef& o) const = default;
    auto operator<=>(const SideRef& o) const = default;
};

struct AttachMove {
    SideRef target;
};

/// Identify boundary cells `a` and `b`. `shared_cell` names the witnessing
/// common (d-2)-cell as a subset of a's tree-vertex ids. The identification
/// map is the unique simplicial bijection fixing every shared vertex class
/// and matching the remaining pair.
struct GlueMove {
    SideRef a, b;
    Face shared_cell;
};

using LCMove = std::variant<AttachMove, GlueMove>;

/// Intermediate state T_i of a local construction: a tree of d-simplices plus
/// the identifications made so far. Cells are tracked by their original
/// tree-vertex id sets, so two distinct cells may transiently share a vertex
/// set in the quotient; quotient() reports NotSimplicial while they do.
/// Value semantics: copy freely.
class LCState {
public:
    explicit LCState(int d);

    int dim() const { return d_; }
    int num_simplices() const { return static_cast<int>(simplices_.size()); }
    int num_vertices() const { return next_vertex_ - 1; }
    const std::vector<Face>& simplices() const { return simplices_; }

    int vertex_root(int id) const { return vuf_.find(id); }
    Face roots_of(const Face& ids) const;

    Face side_ids(const SideRef& s) const;
    Face side_roots(const SideRef& s) const { return roots_of(side_ids(s)); }
    bool is_boundary(const SideRef& s) const;
    std::vector<SideRef> boundary_sides() const;
    std::optional<SideRef> matched_partner(const SideRef& s) const;

    /// Class id of the cell instantiated on these tree-vertex ids (>= 2 ids).
    int cell_class(const Face& ids) const;

    /// Common (d-2)-cells of two boundary sides, as id-subsets of side a,
    /// lexicographically ordered.
    std::vector<Face> shared_codim2_cells(const SideRef& a, const SideRef& b) const;

    /// Attach a fresh d-simplex across a boundary cell; returns its index.
    int attach(const SideRef& target);

    void check_glue(const GlueMove& mv) const;
    void glue(const GlueMove& mv);

    /// All legal glue moves, one per unordered boundary-side pair (the witness
    /// cell is the least shared (d-2)-cell), deterministic order.
    std::vector<GlueMove> admissible_gluings() const;

    /// The current quotient as a simplicial complex; throws NotSimplicial if
    /// two distinct cells share a vertex set.
    SimplicialComplex quotient() const;

    int interior_vertex_count() const;
    int boundary_component_count() const;
    bool is_pinch_point(int vertex_root) const;

    /// Step types (ii)..(ix) for d = 3 gluings, by shared-cell count and pinch
    /// configuration; type (i) is an attach. Predicted effect deltas are
    /// checked against state measurements; a mismatch throws.
    struct StepClass {
        int type;  // 2..9
        int d_interior_vertices;
        int d_boundary_components;
    };
    StepClass classify_glue(const GlueMove& mv) const;

    /// Lexicographically least shared (d-2)-cell of two boundary sides, if any.
    std::optional<Face> least_shared_cell(const SideRef& a, const SideRef& b) const;

private:
    int d_;
    int next_vertex_ = 1;
    std::vector<Face> simplices_;                 // sorted tree-vertex ids
    std::vector<std::vector<SideRef>> matched_;   // per simplex/local; simplex -1 = boundary
    UnionFind vuf_;                                // tree vertices (1-based)
    mutable std::map<Face, int> cell_index_;       // id-set -> cell node
    mutable UnionFind cuf_;                        // cell nodes

    int new_vertex();
    void merge_cells(const Face& a_ids, const Face& b_ids);
    std::vector<std::pair<int, int>> glue_vertex_map(const GlueMove& mv) const;  // id -> id
};

}  // namespace lcs
