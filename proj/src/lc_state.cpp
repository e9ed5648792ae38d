#include "lcs/lc_state.hpp"

#include <algorithm>
#include <set>

namespace lcs {

LCState::LCState(int d) : d_(d) {
    if (d < 2) throw DimensionError("LCState requires d >= 2");
    Face root;
    for (int i = 0; i < d + 1; ++i) root.push_back(new_vertex());
    simplices_.push_back(root);
    matched_.push_back(std::vector<SideRef>(d + 1, SideRef{}));
}

int LCState::new_vertex() {
    vuf_.ensure(next_vertex_ + 1);
    return next_vertex_++;
}

Face LCState::roots_of(const Face& ids) const {
    Face out;
    for (int id : ids) out.push_back(vuf_.find(id));
    return sorted_face(std::move(out));
}

Face LCState::side_ids(const SideRef& s) const {
    if (s.simplex < 0 || s.simplex >= num_simplices() || s.local < 0 || s.local > d_)
        throw InvalidInput("side reference out of range");
    Face f = simplices_[s.simplex];
    f.erase(f.begin() + s.local);
    return f;
}

bool LCState::is_boundary(const SideRef& s) const {
    side_ids(s);  // range check
    return matched_[s.simplex][s.local].simplex < 0;
}

std::vector<SideRef> LCState::boundary_sides() const {
    std::vector<SideRef> out;
    for (int i = 0; i < num_simplices(); ++i)
        for (int a = 0; a <= d_; ++a)
            if (matched_[i][a].simplex < 0) out.push_back({i, a});
    return out;
}

std::optional<SideRef> LCState::matched_partner(const SideRef& s) const {
    side_ids(s);
    SideRef p = matched_[s.simplex][s.local];
    if (p.simplex < 0) return std::nullopt;
    return p;
}

int LCState::cell_class(const Face& ids) const {
    auto it = cell_index_.find(ids);
    if (it != cell_index_.end()) return cuf_.find(it->second);
    int node = static_cast<int>(cell_index_.size());
    cell_index_.emplace(ids, node);
    cuf_.ensure(node + 1);
    return node;
}

void LCState::merge_cells(const Face& a_ids, const Face& b_ids) {
    cuf_.unite(cell_class(a_ids), cell_class(b_ids));
}

std::vector<Face> LCState::shared_codim2_cells(const SideRef& a, const SideRef& b) const {
    Face aids = side_ids(a), bids = side_ids(b);
    std::set<int> b_classes;
    for (size_t i = 0; i < bids.size(); ++i) {
        Face sub = bids;
        sub.erase(sub.begin() + i);
        b_classes.insert(cell_class(sub));
    }
    std::vector<Face> out;
    for (size_t i = 0; i < aids.size(); ++i) {
        Face sub = aids;
        sub.erase(sub.begin() + i);
        if (b_classes.count(cell_class(sub))) out.push_back(sub);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Face> LCState::least_shared_cell(const SideRef& a, const SideRef& b) const {
    auto cells = shared_codim2_cells(a, b);
    if (cells.empty()) return std::nullopt;
    return cells.front();
}

int LCState::attach(const SideRef& target) {
    if (!is_boundary(target))
        throw IllegalMove(IllegalMove::Reason::not_boundary, "attach target is interior");
    Face shared = side_ids(target);
    int apex = new_vertex();
    Face s = shared;
    s.push_back(apex);  // fresh id is the largest, so the list stays sorted
    int idx = num_simplices();
    simplices_.push_back(s);
    matched_.push_back(std::vector<SideRef>(d_ + 1, SideRef{}));
    // the new simplex's side omitting the apex is the shared facet
    int apex_local = d_;
    matched_[idx][apex_local] = target;
    matched_[target.simplex][target.local] = SideRef{idx, apex_local};
    return idx;
}

std::vector<std::pair<int, int>> LCState::glue_vertex_map(const GlueMove& mv) const {
    Face aids = side_ids(mv.a), bids = side_ids(mv.b);
    Face aroots = roots_of(aids), broots = roots_of(bids);
    if (static_cast<int>(aroots.size()) != d_ || static_cast<int>(broots.size()) != d_)
        throw InternalInvariantViolation("degenerate side in glue map");
    std::vector<std::pair<int, int>> pairs;
    int a_left = -1, b_left = -1;
    for (int id : aids) {
        int r = vuf_.find(id);
        int partner = -1;
        for (int jd : bids)
            if (vuf_.find(jd) == r) {
                partner = jd;
                break;
            }
        if (partner >= 0)
            pairs.emplace_back(id, partner);
        else if (a_left < 0)
            a_left = id;
        else
            throw IllegalMove(IllegalMove::Reason::missing_shared_cell,
                              "sides share fewer than d-1 vertex classes");
    }
    for (int jd : bids) {
        int r = vuf_.find(jd);
        bool shared = false;
        for (int id : aids)
            if (vuf_.find(id) == r) shared = true;
        if (!shared) {
            if (b_left >= 0)
                throw IllegalMove(IllegalMove::Reason::missing_shared_cell,
                                  "sides share fewer than d-1 vertex classes");
            b_left = jd;
        }
    }
    if ((a_left < 0) != (b_left < 0))
        throw InternalInvariantViolation("unbalanced glue correspondence");
    if (a_left >= 0) pairs.emplace_back(a_left, b_left);
    return pairs;
}

void LCState::check_glue(const GlueMove& mv) const {
    if (!is_boundary(mv.a) || !is_boundary(mv.b))
        throw IllegalMove(IllegalMove::Reason::not_boundary, "glue cell is not on the boundary");
    if (mv.a.simplex == mv.b.simplex)
        throw IllegalMove(IllegalMove::Reason::same_simplex,
                          "glued cells lie on the same d-simplex");
    if (mv.a == mv.b)
        throw IllegalMove(IllegalMove::Reason::same_simplex, "gluing a cell to itself");
    for (int a = 0; a <= d_; ++a) {
        SideRef p = matched_[mv.a.simplex][a];
        if (p.simplex == mv.b.simplex)
            throw IllegalMove(IllegalMove::Reason::adjacent_simplices,
                              "simplices already share a (d-1)-cell");
    }
    // the named witness cell must be a common (d-2)-cell
    Face aids = side_ids(mv.a);
    if (mv.shared_cell.size() != static_cast<size_t>(d_ - 1) || !is_subset(mv.shared_cell, aids))
        throw IllegalMove(IllegalMove::Reason::missing_shared_cell,
                          "witness cell is not a (d-2)-subcell of the first side");
    auto shared = shared_codim2_cells(mv.a, mv.b);
    if (std::find(shared.begin(), shared.end(), mv.shared_cell) == shared.end())
        throw IllegalMove(IllegalMove::Reason::missing_shared_cell,
                          "named cell is not shared by the two sides");
    // vertex identification must not degenerate any simplex
    auto pairs = glue_vertex_map(mv);
    int ru = -1, rw = -1;
    for (auto [x, y] : pairs) {
        int rx = vuf_.find(x), ry = vuf_.find(y);
        if (rx != ry) {
            ru = std::min(rx, ry);
            rw = std::max(rx, ry);
        }
    }
    if (ru >= 0) {
        for (const auto& s : simplices_) {
            Face roots;
            for (int id : s) {
                int r = vuf_.find(id);
                if (r == rw) r = ru;
                roots.push_back(r);
            }
            std::sort(roots.begin(), roots.end());
            if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
                throw IllegalMove(IllegalMove::Reason::degenerates_simplex,
                                  "identification would collapse a d-simplex");
        }
    }
}

void LCState::glue(const GlueMove& mv) {
    check_glue(mv);
    auto pairs = glue_vertex_map(mv);
    Face aids = side_ids(mv.a);
    std::map<int, int> phi(pairs.begin(), pairs.end());
    // identify the cells: every subface of side a of dimension >= 1 with its image
    int m = static_cast<int>(aids.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
        Face sub, img;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) {
                sub.push_back(aids[i]);
                img.push_back(phi.at(aids[i]));
            }
        merge_cells(sub, sorted_face(std::move(img)));
    }
    // identify the vertices
    for (auto [x, y] : pairs) vuf_.unite(x, y);
    matched_[mv.a.simplex][mv.a.local] = mv.b;
    matched_[mv.b.simplex][mv.b.local] = mv.a;
    // defensive invariant: no two d-simplices share two (d-1)-cells
    for (int a = 0; a <= d_; ++a) {
        SideRef p = matched_[mv.a.simplex][a];
        if (a != mv.a.local && p.simplex == mv.b.simplex)
            throw InternalInvariantViolation("double ridge created by glue");
    }
}

std::vector<GlueMove> LCState::admissible_gluings() const {
    auto sides = boundary_sides();
    std::vector<GlueMove> out;
    for (size_t i = 0; i < sides.size(); ++i)
        for (size_t j = i + 1; j < sides.size(); ++j) {
            auto cell = least_shared_cell(sides[i], sides[j]);
            if (!cell) continue;
            GlueMove mv{sides[i], sides[j], *cell};
            try {
                check_glue(mv);
            } catch (const IllegalMove&) {
                continue;
            }
            out.push_back(std::move(mv));
        }
    return out;
}

SimplicialComplex LCState::quotient() const {
    // top cells
    std::map<Face, int> facet_seen;
    std::vector<Face> facets;
    for (const auto& s : simplices_) {
        Face roots = roots_of(s);
        if (static_cast<int>(roots.size()) != d_ + 1)
            throw InternalInvariantViolation("degenerate d-simplex in quotient");
        if (facet_seen.count(roots))
            throw NotSimplicial("two d-cells share the vertex set " + face_to_string(roots));
        facet_seen[roots] = 1;
        facets.push_back(roots);
    }
    // lower cells: distinct classes must have distinct vertex sets
    for (int size = 2; size <= d_; ++size) {
        std::map<int, Face> class_roots;
        std::map<Face, int> roots_class;
        for (const auto& s : simplices_) {
            // all subsets of this simplex of the given size
            int n = d_ + 1;
            std::vector<int> idx(size);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == size) {
                    Face sub;
                    for (int k = 0; k < size; ++k) sub.push_back(s[idx[k]]);
                    int cls = cell_class(sub);
                    Face roots = roots_of(sub);
                    if (static_cast<int>(roots.size()) != size)
                        throw InternalInvariantViolation("degenerate cell in quotient");
                    auto it = class_roots.find(cls);
                    if (it == class_roots.end())
                        class_roots[cls] = roots;
                    else if (it->second != roots)
                        throw InternalInvariantViolation("identified cells with different vertices");
                    auto jt = roots_class.find(roots);
                    if (jt == roots_class.end())
                        roots_class[roots] = cls;
                    else if (jt->second != cls)
                        throw NotSimplicial("two distinct cells share the vertex set " +
                                            face_to_string(roots));
                    return;
                }
                for (int i = start; i < n; ++i) {
                    idx[depth] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
        }
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

int LCState::interior_vertex_count() const {
    std::set<int> all, on_boundary;
    for (const auto& s : simplices_)
        for (int id : s) all.insert(vuf_.find(id));
    for (const auto& side : boundary_sides())
        for (int r : side_roots(side)) on_boundary.insert(r);
    int count = 0;
    for (int r : all)
        if (!on_boundary.count(r)) count++;
    return count;
}

int LCState::boundary_component_count() const {
    auto sides = boundary_sides();
    if (sides.empty()) return 0;
    UnionFind uf(static_cast<int>(sides.size()));
    std::map<int, int> first_side_with_root;
    for (size_t i = 0; i < sides.size(); ++i)
        for (int r : side_roots(sides[i])) {
            auto [it, fresh] = first_side_with_root.emplace(r, static_cast<int>(i));
            if (!fresh) uf.unite(it->second, static_cast<int>(i));
        }
    std::set<int> comps;
    for (size_t i = 0; i < sides.size(); ++i) comps.insert(uf.find(static_cast<int>(i)));
    return static_cast<int>(comps.size());
}

bool LCState::is_pinch_point(int vertex_root) const {
    // link of the vertex inside the boundary quotient: boundary sides through
    // the vertex, joined when they share a (d-2)-cell containing it
    std::vector<SideRef> star;
    for (const auto& side : boundary_sides()) {
        Face roots = side_roots(side);
        if (std::binary_search(roots.begin(), roots.end(), vertex_root)) star.push_back(side);
    }
    if (star.size() <= 1) return false;
    UnionFind uf(static_cast<int>(star.size()));
    std::map<int, std::vector<int>> cell_sides;
    for (size_t i = 0; i < star.size(); ++i) {
        Face ids = side_ids(star[i]);
        for (size_t k = 0; k < ids.size(); ++k) {
            Face sub = ids;
            sub.erase(sub.begin() + k);
            Face roots = roots_of(sub);
            if (!std::binary_search(roots.begin(), roots.end(), vertex_root)) continue;
            cell_sides[cell_class(sub)].push_back(static_cast<int>(i));
        }
    }
    for (auto& [cls, lst] : cell_sides)
        for (size_t k = 1; k < lst.size(); ++k) uf.unite(lst[0], lst[k]);
    std::set<int> comps;
    for (size_t i = 0; i < star.size(); ++i) comps.insert(uf.find(static_cast<int>(i)));
    return comps.size() >= 2;
}

LCState::StepClass LCState::classify_glue(const GlueMove& mv) const {
    if (d_ != 3) throw UnsupportedDimension("step classifier is defined for d = 3");
    check_glue(mv);
    auto shared = shared_codim2_cells(mv.a, mv.b);
    Face aroots = side_roots(mv.a), broots = side_roots(mv.b);
    Face common = face_intersection(aroots, broots);
    int type = 0;
    if (shared.size() == 1) {
        type = (common.size() == 3) ? 3 : 2;
    } else if (shared.size() == 2) {
        Face meet = face_intersection(roots_of(shared[0]), roots_of(shared[1]));
        if (meet.size() != 1)
            throw InternalInvariantViolation("two shared edges must meet in one vertex");
        type = is_pinch_point(meet[0]) ? 4 : 5;
    } else if (shared.size() == 3) {
        int pinches = 0;
        for (int r : aroots) pinches += is_pinch_point(r) ? 1 : 0;
        switch (pinches) {
            case 3: type = 6; break;
            case 2: type = 7; break;
            case 1: type = 8; break;
            case 0: type = 9; break;
        }
    } else {
        throw InternalInvariantViolation("glue with unclassifiable shared-cell count");
    }
    static const std::map<int, std::pair<int, int>> effects = {
        {2, {0, 0}}, {3, {0, 0}}, {4, {0, 1}}, {5, {1, 0}},
        {6, {0, 2}}, {7, {1, 1}}, {8, {2, 0}}, {9, {3, -1}},
    };
    auto [div, dbc] = effects.at(type);
    LCState after = *this;
    after.glue(mv);
    int meas_iv = after.interior_vertex_count() - interior_vertex_count();
    int meas_bc = after.boundary_component_count() - boundary_component_count();
    if (meas_iv != div || meas_bc != dbc)
        throw InternalInvariantViolation(
            "step classifier mismatch: type " + std::to_string(type) + " predicted (" +
            std::to_string(div) + "," + std::to_string(dbc) + ") measured (" +
            std::to_string(meas_iv) + "," + std::to_string(meas_bc) + ")");
    return {type, div, dbc};
}

}  // namespace lcs
