#include "lcs/collapse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace lcs {

namespace {

int facets_containing(const SimplicialComplex& c, const Face& f, const Face** the_one = nullptr) {
    int count = 0;
    for (const auto& g : c.facets())
        if (is_subset(f, g)) {
            count++;
            if (the_one) *the_one = &g;
        }
    return count;
}

void check_protected_subcomplex(const SimplicialComplex& c, const SimplicialComplex& protected_faces) {
    for (const auto& f : protected_faces.facets())
        if (!c.contains_face(f))
            throw InvalidSubcomplex("protected complex is not a subcomplex");
}

}  // namespace

std::vector<CollapseStep> free_pairs(const SimplicialComplex& c,
                                     const SimplicialComplex& protected_faces) {
    check_protected_subcomplex(c, protected_faces);
    std::vector<CollapseStep> out;
    for (const auto& sigma_big : c.facets()) {
        if (sigma_big.size() < 2) continue;
        for (size_t i = 0; i < sigma_big.size(); ++i) {
            Face sigma = sigma_big;
            sigma.erase(sigma.begin() + i);
            if (facets_containing(c, sigma) != 1) continue;
            if (protected_faces.contains_face(sigma)) continue;
            out.push_back({sigma, sigma_big});
        }
    }
    std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
        return std::tie(a.free_face, a.cofacet) < std::tie(b.free_face, b.cofacet);
    });
    return out;
}

SimplicialComplex apply_collapse(const SimplicialComplex& c, const CollapseStep& step) {
    const Face& sigma = step.free_face;
    const Face& big = step.cofacet;
    if (sigma.size() + 1 != big.size() || !is_subset(sigma, big))
        throw IllegalCollapse("cofacet must cover the free face");
    const Face* container = nullptr;
    if (facets_containing(c, sigma, &container) != 1 || *container != big)
        throw IllegalCollapse("face is not free: " + face_to_string(sigma));
    std::vector<Face> rest;
    for (const auto& f : c.facets())
        if (f != big) rest.push_back(f);
    for (size_t i = 0; i < big.size(); ++i) {
        Face ridge = big;
        ridge.erase(ridge.begin() + i);
        if (ridge == sigma || ridge.empty()) continue;
        bool covered = false;
        for (const auto& f : rest)
            if (is_subset(ridge, f)) {
                covered = true;
                break;
            }
        if (!covered) rest.push_back(ridge);
    }
    if (rest.empty()) return SimplicialComplex::empty();
    return SimplicialComplex::from_facets(std::move(rest));
}

namespace {

// The collapse is phased: while faces of dimension > target remain outside the
// protected part, only pairs whose cofacet has the currently highest such
// dimension may be removed.
int current_phase(const SimplicialComplex& c, int target_dim,
                  const SimplicialComplex& protected_faces) {
    int phase = -1;
    for (const auto& f : c.facets()) {
        int fd = static_cast<int>(f.size()) - 1;
        if (fd > target_dim && fd > phase && !protected_faces.contains_face(f)) phase = fd;
    }
    return phase;  // -1 means done
}

std::vector<CollapseStep> phase_moves(const SimplicialComplex& c, int phase,
                                      const SimplicialComplex& protected_faces) {
    std::vector<CollapseStep> moves;
    for (auto& step : free_pairs(c, protected_faces))
        if (static_cast<int>(step.cofacet.size()) == phase + 1) moves.push_back(std::move(step));
    return moves;
}

struct ExhaustiveCollapse {
    int target_dim;
    const SimplicialComplex& protected_faces;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    bool use_iso_memo;  // canonical-key memo is sound only without protected faces
    std::set<CanonicalKey> seen_iso;
    std::set<std::vector<Face>> seen_exact;
    std::vector<CollapseStep> steps;

    ExhaustiveCollapse(int td, const SimplicialComplex& pf, std::uint64_t b)
        : target_dim(td), protected_faces(pf), budget(b), use_iso_memo(pf.is_empty()) {}

    bool dfs(const SimplicialComplex& c) {
        int phase = current_phase(c, target_dim, protected_faces);
        if (phase < 0) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (use_iso_memo) {
            if (!seen_iso.insert(canonical_key(c)).second) return false;
        } else {
            if (!seen_exact.insert(c.facets()).second) return false;
        }
        for (const auto& mv : phase_moves(c, phase, protected_faces)) {
            steps.push_back(mv);
            if (dfs(apply_collapse(c, mv))) return true;
            if (out_of_budget) return false;
            steps.pop_back();
        }
        return false;
    }
};

}  // namespace

CollapseSearchResult find_collapse_onto_dim(const SimplicialComplex& c, int target_dim,
                                            const SimplicialComplex& protected_faces,
                                            const CollapseBudget& budget) {
    if (target_dim >= c.dim()) throw InvalidInput("find_collapse_onto_dim: target_dim must be below dim");
    check_protected_subcomplex(c, protected_faces);
    CollapseSearchResult res;
    CanonicalKey start = canonical_key(c);

    if (budget.allow_greedy) {
        std::mt19937_64 rng(budget.seed);
        for (int attempt = 0; attempt < budget.greedy_retries; ++attempt) {
            SimplicialComplex cur = c;
            std::vector<CollapseStep> steps;
            bool stuck = false;
            while (true) {
                int phase = current_phase(cur, target_dim, protected_faces);
                if (phase < 0) break;
                auto moves = phase_moves(cur, phase, protected_faces);
                if (moves.empty()) {
                    stuck = true;
                    break;
                }
                std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
                const auto& mv = moves[pick(rng)];
                cur = apply_collapse(cur, mv);
                steps.push_back(mv);
            }
            if (!stuck) {
                res.status = SearchStatus::found;
                res.sequence = CollapseSequence{start, std::move(steps)};
                res.final_complex = cur;
                return res;
            }
        }
    }

    if (budget.allow_exhaustive && c.all_faces().size() <= budget.exhaustive_face_threshold) {
        ExhaustiveCollapse ex(target_dim, protected_faces, budget.max_nodes);
        SimplicialComplex cur = c;
        if (ex.dfs(cur)) {
            // replay to recover the final complex
            SimplicialComplex fin = c;
            for (const auto& mv : ex.steps) fin = apply_collapse(fin, mv);
            res.status = SearchStatus::found;
            res.sequence = CollapseSequence{start, ex.steps};
            res.final_complex = fin;
            return res;
        }
        if (!ex.out_of_budget) {
            res.status = SearchStatus::proven_impossible;
            return res;
        }
    }
    res.status = SearchStatus::budget_exhausted;
    return res;
}

bool verify_collapse(const SimplicialComplex& c, const CollapseSequence& seq,
                     const CollapseTarget& expected) {
    SimplicialComplex cur = c;
    std::int64_t chi = cur.euler_characteristic();
    for (const auto& step : seq.steps) {
        try {
            cur = apply_collapse(cur, step);
        } catch (const IllegalCollapse&) {
            return false;
        }
        if (cur.euler_characteristic() != chi) return false;
    }
    if (std::holds_alternative<SimplicialComplex>(expected))
        return cur == std::get<SimplicialComplex>(expected);
    return cur.dim() <= std::get<int>(expected);
}

MassacreSequence derive_massacre(const SimplicialComplex& p, const SimplicialComplex& q,
                                 const std::vector<CollapseStep>& killing) {
    if (p.is_empty() || !p.is_pure()) throw InvalidInput("derive_massacre: P must be pure");
    const int d = p.dim();
    std::int64_t fd_q = 0;
    if (!q.is_empty()) {
        if (!q.is_pure() || q.dim() != d)
            throw InvalidInput("derive_massacre: Q must be empty or pure of the same dimension");
        for (const auto& f : q.facets()) {
            if (std::find(p.facets().begin(), p.facets().end(), f) == p.facets().end())
                throw InvalidSubcomplex("derive_massacre: Q is not a subcomplex of P");
        }
        fd_q = static_cast<std::int64_t>(q.facets().size());
    }
    std::int64_t expected_len = static_cast<std::int64_t>(p.facets().size()) - fd_q;
    if (static_cast<std::int64_t>(killing.size()) != expected_len)
        throw InvalidKillingSequence("derive_massacre: wrong number of killing steps");

    MassacreSequence out;
    SimplicialComplex w = p;
    for (const auto& step : killing) {
        if (static_cast<int>(step.cofacet.size()) != d + 1)
            throw InvalidKillingSequence("killing step is not facet-level");
        if (q.contains_face(step.free_face))
            throw InvalidKillingSequence("killing step touches Q");
        try {
            w = apply_collapse(w, step);
        } catch (const IllegalCollapse&) {
            throw InvalidKillingSequence("killing step not free at replay: " +
                                         face_to_string(step.free_face));
        }
        MassacreEntry entry;
        entry.killed = step;
        // sweep lower-dimensional inclusion-maximal faces until pure
        bool swept_one = true;
        while (swept_one) {
            swept_one = false;
            for (const auto& f : w.facets()) {
                if (static_cast<int>(f.size()) == d + 1) continue;
                if (q.contains_face(f))
                    throw InternalInvariantViolation("massacre sweep reached a face of Q");
                entry.swept.push_back(f);
                w = remove_maximal_face(w, f);
                swept_one = true;
                break;
            }
        }
        out.entries.push_back(std::move(entry));
    }
    if (q.is_empty()) {
        if (!w.is_empty()) throw InvalidKillingSequence("massacre did not empty the complex");
    } else if (!(w == q)) {
        throw InvalidKillingSequence("massacre did not end at Q");
    }
    return out;
}

DualSpanningTree spanning_tree_from_collapse(const SimplicialComplex& s, const Face& delta,
                                             const CollapseSequence& seq) {
    const int d = s.dim();
    const auto& fs = s.facets();
    auto it = std::find(fs.begin(), fs.end(), sorted_face(delta));
    if (it == fs.end()) throw FaceNotFound("spanning_tree_from_collapse: delta not a facet");
    int root = static_cast<int>(it - fs.begin());

    // facet-level phase must be a prefix of the sequence
    size_t facet_steps = 0;
    while (facet_steps < seq.steps.size() &&
           static_cast<int>(seq.steps[facet_steps].cofacet.size()) == d + 1)
        facet_steps++;
    for (size_t i = facet_steps; i < seq.steps.size(); ++i)
        if (static_cast<int>(seq.steps[i].cofacet.size()) == d + 1)
            throw InvalidKillingSequence("facet-level steps are not a prefix");
    if (facet_steps != fs.size() - 1)
        throw InvalidKillingSequence("facet-level phase does not kill every facet");

    DualSpanningTree t;
    t.root = root;
    t.parent.assign(fs.size(), -2);
    t.parent_ridge.assign(fs.size(), {});
    t.parent[root] = -1;

    SimplicialComplex cur = remove_facet(s, delta);
    for (size_t i = 0; i < facet_steps; ++i) {
        const auto& step = seq.steps[i];
        cur = apply_collapse(cur, step);  // throws if not free: invalid sequence
        // the two cofacets of the ridge in the original complex
        std::vector<int> cof;
        for (size_t j = 0; j < fs.size(); ++j)
            if (is_subset(step.free_face, fs[j])) cof.push_back(static_cast<int>(j));
        if (cof.size() != 2)
            throw InvalidKillingSequence("used ridge is not interior to the complex");
        int child = (fs[cof[0]] == step.cofacet) ? cof[0] : cof[1];
        int parent = cof[0] + cof[1] - child;
        if (t.parent[child] != -2)
            throw InvalidKillingSequence("facet removed twice");
        t.parent[child] = parent;
        t.parent_ridge[child] = step.free_face;
    }
    for (size_t i = 0; i < fs.size(); ++i)
        if (t.parent[i] == -2) throw InvalidKillingSequence("tree does not span");
    // acyclicity and connectivity to the root
    for (int i = 0; i < t.size(); ++i) {
        int x = i, hops = 0;
        while (t.parent[x] >= 0) {
            x = t.parent[x];
            if (++hops > t.size()) throw InternalInvariantViolation("cycle in collapse tree");
        }
        if (x != root) throw InternalInvariantViolation("collapse tree not rooted at delta");
    }
    return t;
}

CollapseSequence collapse_along_tree(const SimplicialComplex& c, const DualSpanningTree& tree) {
    const auto& fs = c.facets();
    if (tree.size() != static_cast<int>(fs.size()))
        throw InvalidTree("collapse_along_tree: tree size mismatch");
    SimplicialComplex start = remove_facet(c, fs[tree.root]);
    CollapseSequence seq;
    seq.start = canonical_key(start);
    for (int x : tree.bfs_order()) {
        if (x == tree.root) continue;
        seq.steps.push_back({tree.parent_ridge[x], fs[x]});
    }
    return seq;
}

}  // namespace lcs
