#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcs/complex.hpp"

namespace lcs {

/// Canonical form of a complex: the lexicographically least facet list over
/// all relabelings of the vertices by 1..n. Equal keys iff isomorphic
/// complexes; canonicalizing a canonical complex is the identity.
struct CanonicalKey {
    std::vector<Face> facets;

    bool operator==(const CanonicalKey& o) const { return facets == o.facets; }
    bool operator!=(const CanonicalKey& o) const { return !(*this == o); }
    bool operator<(const CanonicalKey& o) const { return facets < o.facets; }

    std::string to_text() const;   // one facet per line
    std::string digest() const;    // fnv1a-64 of to_text, hex
};

struct CanonicalResult {
    CanonicalKey key;
    /// original vertex -> canonical label (1..n)
    std::vector<std::pair<int, int>> relabeling;
};

/// Exact branch-and-bound canonical form (not a heuristic invariant).
CanonicalResult canonical_form(const SimplicialComplex& c);
CanonicalKey canonical_key(const SimplicialComplex& c);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace lcs
