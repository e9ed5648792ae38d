#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lcs/canonical.hpp"
#include "lcs/complex.hpp"
#include "lcs/dual_graph.hpp"

namespace lcs {

/// One elementary collapse: remove a free face together with its unique
/// proper coface.
struct CollapseStep {
    Face free_face;
    Face cofacet;
    bool operator==(const CollapseStep& o) const = default;
};

struct CollapseSequence {
    CanonicalKey start;
    std::vector<CollapseStep> steps;
};

/// All current free pairs, in lexicographic (free_face, cofacet) order.
/// Pairs whose free face lies in `protected_faces` are excluded.
std::vector<CollapseStep> free_pairs(const SimplicialComplex& c,
                                     const SimplicialComplex& protected_faces);

/// Apply one elementary collapse; throws IllegalCollapse if the pair is not
/// currently free.
SimplicialComplex apply_collapse(const SimplicialComplex& c, const CollapseStep& step);

enum class SearchStatus { found, budget_exhausted, proven_impossible };

struct CollapseBudget {
    int greedy_retries = 64;
    /// exhaustive search is attempted only when the complex has at most this
    /// many faces
    std::size_t exhaustive_face_threshold = 60;
    std::uint64_t max_nodes = 2'000'000;
    std::uint64_t seed = 0;
    bool allow_greedy = true;
    bool allow_exhaustive = true;
};

struct CollapseSearchResult {
    SearchStatus status = SearchStatus::budget_exhausted;
    std::optional<CollapseSequence> sequence;
    SimplicialComplex final_complex;
};

/// Search for a phased collapse removing every face of dimension > target_dim
/// outside `protected_faces`. Steps are grouped by (weakly) decreasing cofacet
/// dimension, matching the rearrangement argument that makes phased search
/// complete. proven_impossible is only reported from a finished exhaustive
/// search.
CollapseSearchResult find_collapse_onto_dim(const SimplicialComplex& c, int target_dim,
                                            const SimplicialComplex& protected_faces,
                                            const CollapseBudget& budget = {});

/// Expected final state of a collapse: an exact complex or a dimension bound.
using CollapseTarget = std::variant<SimplicialComplex, int>;

/// Replay a collapse certificate; true iff every step is free when reached,
/// the Euler characteristic is preserved throughout, and the final complex
/// matches the target.
bool verify_collapse(const SimplicialComplex& c, const CollapseSequence& seq,
                     const CollapseTarget& expected);

struct MassacreEntry {
    CollapseStep killed;
    std::vector<Face> swept;  // lower-dimensional inclusion-maximal faces removed
};

struct MassacreSequence {
    std::vector<MassacreEntry> entries;
};

/// The pure facet-massacre of (P, Q) induced by a facet-killing sequence:
/// after each killed pair, lower-dimensional inclusion-maximal faces are swept
/// until the complex is pure again. Final state must equal Q.
MassacreSequence derive_massacre(const SimplicialComplex& p, const SimplicialComplex& q,
                                 const std::vector<CollapseStep>& killing);

/// The directed dual spanning tree along which the facet-level phase of a
/// collapse of S - delta acts: for each removed pair (sigma, Sigma) an arrow
/// is drawn from sigma's other cofacet in S to Sigma. Asserts the result is
/// spanning, connected and acyclic, rooted at delta.
DualSpanningTree spanning_tree_from_collapse(const SimplicialComplex& s, const Face& delta,
                                             const CollapseSequence& seq);

/// Lemma "S - Delta collapses onto K^T": the deterministic collapse of
/// C - delta along the tree (natural labeling = BFS order), facet-level phase
/// only. The remainder is exactly K^T.
CollapseSequence collapse_along_tree(const SimplicialComplex& c, const DualSpanningTree& tree);

}  // namespace lcs
