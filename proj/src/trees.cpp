#include "lcs/trees.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcs {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

BigInt fuss_catalan(int d, std::int64_t n) {
    if (d < 2) throw DimensionError("fuss_catalan requires d >= 2");
    if (n < 0) throw InvalidInput("fuss_catalan requires N >= 0");
    BigInt b = binomial(static_cast<std::int64_t>(d) * n, n);
    BigInt q = static_cast<std::int64_t>(d - 1) * n + 1;
    if (b % q != 0) throw InternalInvariantViolation("fuss_catalan divisibility");
    return b / q;
}

int DaryTree::internal_count() const {
    int c = 0;
    for (auto x : preorder) c += (x == 1);
    return c;
}

bool DaryTree::valid() const {
    if (d < 2) return false;
    // walk: start expecting 1 node; internal adds d children, leaf adds none
    std::int64_t pending = 1;
    for (size_t i = 0; i < preorder.size(); ++i) {
        if (pending <= 0) return false;
        pending += (preorder[i] == 1 ? d : 0) - 1;
    }
    return pending == 0;
}

namespace {
void enum_rec(int d, std::int64_t ones_left, std::int64_t pending, std::vector<std::uint8_t>& word,
              const std::function<bool(const DaryTree&)>& cb, bool& stop, int total_d) {
    if (stop) return;
    if (pending == 0) {
        if (ones_left == 0) {
            DaryTree t;
            t.d = total_d;
            t.preorder = word;
            if (!cb(t)) stop = true;
        }
        return;
    }
    // internal first (depth-first ballot-sequence order)
    if (ones_left > 0) {
        word.push_back(1);
        enum_rec(d, ones_left - 1, pending + d - 1, word, cb, stop, total_d);
        word.pop_back();
        if (stop) return;
    }
    // leaf, unless the remaining slots could not absorb the internal nodes left
    std::int64_t zeros_needed = (static_cast<std::int64_t>(d) - 1) * ones_left + pending - 1;
    if (zeros_needed >= 0) {
        word.push_back(0);
        enum_rec(d, ones_left, pending - 1, word, cb, stop, total_d);
        word.pop_back();
    }
}
}  // namespace

void enumerate_dary_trees(int d, int n, const std::function<bool(const DaryTree&)>& cb) {
    if (d < 2) throw DimensionError("enumerate_dary_trees requires d >= 2");
    if (n < 0) throw InvalidInput("enumerate_dary_trees requires N >= 0");
    if (n == 0) {
        DaryTree t;
        t.d = d;
        t.preorder = {0};
        cb(t);
        return;
    }
    std::vector<std::uint8_t> word;
    bool stop = false;
    enum_rec(d, n, 1, word, cb, stop, d);
}

std::vector<DaryTree> collect_dary_trees(int d, int n) {
    std::vector<DaryTree> out;
    enumerate_dary_trees(d, n, [&](const DaryTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

namespace {
struct BijectionBuilder {
    int d;
    const std::vector<std::uint8_t>& word;
    size_t pos = 0;
    TreeOfSimplices out;

    BijectionBuilder(int d_, const DaryTree& t) : d(d_), word(t.preorder) {
        out.d = d_;
        out.label.assign(1, 0);  // index 0 unused
    }

    int new_vertex(int lab) {
        out.label.push_back(lab);
        return static_cast<int>(out.label.size()) - 1;
    }

    // Reads one node of the preorder word for the slot attached to `parent`
    // across the face carrying `face_label` (parent = -1 builds the root).
    void build(int parent, int face_label) {
        if (pos >= word.size()) throw InvalidInput("preorder word too short");
        std::uint8_t tok = word[pos++];
        if (tok == 0) return;  // leaf: unmatched boundary facet
        int idx;
        if (parent < 0) {
            Face root;
            for (int lab = 1; lab <= d + 1; ++lab) root.push_back(new_vertex(lab));
            out.simplices.push_back(sorted_face(root));
            out.parent.push_back(-1);
            out.parent_facet.push_back({});
            idx = 0;
        } else {
            // the shared facet is the parent's face missing the vertex labeled
            // face_label; the fresh apex inherits that label
            Face shared;
            for (int v : out.simplices[parent])
                if (out.label[v] != face_label) shared.push_back(v);
            int apex = new_vertex(face_label);
            Face s = shared;
            s.push_back(apex);
            out.simplices.push_back(sorted_face(s));
            out.parent.push_back(parent);
            out.parent_facet.push_back(sorted_face(shared));
            idx = static_cast<int>(out.simplices.size()) - 1;
        }
        // children ordered by their face label; the up-face label is skipped
        int up = (parent < 0) ? d + 1 : face_label;
        for (int lab = 1; lab <= d + 1; ++lab) {
            if (lab == up) continue;
            build(idx, lab);
        }
    }
};
}  // namespace

TreeOfSimplices tree_of_simplices_from_dary(const DaryTree& t, int d) {
    if (d < 2) throw DimensionError("tree_of_simplices_from_dary requires d >= 2");
    if (t.d != d) throw InvalidInput("tree arity mismatch");
    if (!t.valid()) throw InvalidInput("invalid preorder word");
    if (t.internal_count() < 1) throw InvalidInput("tree must have at least one internal node");
    BijectionBuilder b(d, t);
    b.build(-1, d + 1);
    if (b.pos != t.preorder.size()) throw InvalidInput("trailing tokens in preorder word");
    b.out.n = static_cast<int>(b.out.simplices.size());
    return b.out;
}

SimplicialComplex TreeOfSimplices::complex() const {
    return SimplicialComplex::from_facets(simplices);
}

namespace {
void emit_dary(const TreeOfSimplices& t, int simplex, int up_label,
               const std::vector<std::vector<int>>& children, std::vector<std::uint8_t>& word) {
    word.push_back(1);
    for (int lab = 1; lab <= t.d + 1; ++lab) {
        if (lab == up_label) continue;
        // child attached across the face of `simplex` missing label `lab`
        int child = -1;
        for (int c : children[simplex]) {
            int apex = -1;
            for (int v : t.simplices[c])
                if (std::find(t.parent_facet[c].begin(), t.parent_facet[c].end(), v) ==
                    t.parent_facet[c].end())
                    apex = v;
            if (t.label[apex] == lab) {
                child = c;
                break;
            }
        }
        if (child < 0)
            word.push_back(0);
        else
            emit_dary(t, child, lab, children, word);
    }
}
}  // namespace

DaryTree dary_from_tree_of_simplices(const TreeOfSimplices& t) {
    std::vector<std::vector<int>> children(t.n);
    int root = -1;
    for (int i = 0; i < t.n; ++i) {
        if (t.parent[i] < 0)
            root = i;
        else
            children[t.parent[i]].push_back(i);
    }
    if (root < 0) throw InvalidInput("tree of simplices has no root");
    DaryTree out;
    out.d = t.d;
    emit_dary(t, root, t.d + 1, children, out.preorder);
    return out;
}

std::vector<CanonicalKey> enumerate_trees_unlabeled(int d, int n) {
    if (d < 2) throw DimensionError("enumerate_trees_unlabeled requires d >= 2");
    if (n < 1) throw InvalidInput("enumerate_trees_unlabeled requires N >= 1");
    std::set<CanonicalKey> keys;
    enumerate_dary_trees(d, n, [&](const DaryTree& t) {
        keys.insert(canonical_key(tree_of_simplices_from_dary(t, d).complex()));
        return true;
    });
    return {keys.begin(), keys.end()};
}

TreeBoundaryStats tree_boundary_stats(const TreeOfSimplices& t) {
    const int d = t.d;
    const std::int64_t n = t.n;
    TreeBoundaryStats formula;
    formula.boundary_facets = (d - 1) * n + 2;
    formula.interior_ridges = n - 1;
    formula.codim2_faces = d * ((d - 1) * n + 2) / 2;

    SimplicialComplex c = t.complex();
    std::map<Face, int> ridge_deg;
    for (const auto& f : c.facets())
        for (size_t i = 0; i < f.size(); ++i) {
            Face ridge = f;
            ridge.erase(ridge.begin() + i);
            ridge_deg[ridge]++;
        }
    TreeBoundaryStats direct;
    std::vector<Face> boundary;
    for (const auto& [ridge, deg] : ridge_deg) {
        if (deg == 1) {
            direct.boundary_facets++;
            boundary.push_back(ridge);
        } else if (deg == 2) {
            direct.interior_ridges++;
        } else {
            throw InternalInvariantViolation("tree of simplices with ridge degree > 2");
        }
    }
    auto codim2 = (d >= 2) ? c.faces(d - 2) : std::vector<Face>{};
    direct.codim2_faces = static_cast<std::int64_t>(codim2.size());
    // every codim-2 face must lie in the boundary
    for (const auto& f : codim2) {
        bool on_boundary = false;
        for (const auto& b : boundary)
            if (is_subset(f, b)) {
                on_boundary = true;
                break;
            }
        if (!on_boundary)
            throw InternalInvariantViolation("codim-2 face of a tree not on the boundary");
    }
    if (direct.boundary_facets != formula.boundary_facets ||
        direct.interior_ridges != formula.interior_ridges ||
        direct.codim2_faces != formula.codim2_faces)
        throw InternalInvariantViolation("tree boundary stats: formula/enumeration mismatch");
    return direct;
}

}  // namespace lcs
