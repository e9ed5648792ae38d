#include "lcs/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lcs/union_find.hpp"

namespace lcs {

Face sorted_face(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool is_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_minus(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string face_to_string(const Face& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) os << ' ';
        os << f[i];
    }
    return os.str();
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facet_list) {
    if (facet_list.empty()) throw InvalidComplex("empty facet list");
    for (auto& f : facet_list) {
        if (f.empty()) throw InvalidComplex("empty facet");
        f = sorted_face(std::move(f));
        for (int v : f)
            if (v <= 0) throw InvalidComplex("vertices must be positive integers");
    }
    std::sort(facet_list.begin(), facet_list.end());
    facet_list.erase(std::unique(facet_list.begin(), facet_list.end()), facet_list.end());
    // absorb dominated sets
    std::vector<Face> maximal;
    for (size_t i = 0; i < facet_list.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < facet_list.size() && !dominated; ++j)
            if (i != j && facet_list[i].size() < facet_list[j].size() &&
                is_subset(facet_list[i], facet_list[j]))
                dominated = true;
        if (!dominated) maximal.push_back(facet_list[i]);
    }
    return from_maximal_unchecked(std::move(maximal));
}

SimplicialComplex SimplicialComplex::from_maximal_unchecked(std::vector<Face> facet_list) {
    std::sort(facet_list.begin(), facet_list.end());
    SimplicialComplex c;
    c.facets_ = std::move(facet_list);
    return c;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    size_t s = facets_.front().size();
    for (const auto& f : facets_)
        if (f.size() != s) return false;
    return true;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

bool SimplicialComplex::contains_face(const Face& f) const {
    if (f.empty()) return false;
    for (const auto& g : facets_)
        if (is_subset(f, g)) return true;
    return false;
}

namespace {
void subsets_of_size(const Face& f, size_t k, size_t start, Face& cur, std::set<Face>& out) {
    if (cur.size() == k) {
        out.insert(cur);
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= f.size(); ++i) {
        cur.push_back(f[i]);
        subsets_of_size(f, k, i + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Face> SimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim()) throw DimensionError("faces: k out of range");
    std::set<Face> out;
    Face cur;
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) >= k + 1) subsets_of_size(f, k + 1, 0, cur, out);
    return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> out;
    Face cur;
    for (const auto& f : facets_) {
        for (size_t k = 1; k <= f.size(); ++k) subsets_of_size(f, k, 0, cur, out);
    }
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> fv(dim() + 1, 0);
    for (const auto& f : all_faces()) fv[f.size() - 1]++;
    return fv;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    auto fv = f_vector();
    for (size_t k = 0; k < fv.size(); ++k) chi += (k % 2 == 0) ? fv[k] : -fv[k];
    return chi;
}

namespace {
// Dual-graph connectivity of the top-dimensional part: facets of maximal
// dimension joined when they share a ridge.
bool top_dual_connected(const std::vector<Face>& facets, int d) {
    std::vector<const Face*> top;
    for (const auto& f : facets)
        if (static_cast<int>(f.size()) == d + 1) top.push_back(&f);
    if (top.size() <= 1) return true;
    UnionFind uf(static_cast<int>(top.size()));
    for (size_t i = 0; i < top.size(); ++i)
        for (size_t j = i + 1; j < top.size(); ++j)
            if (static_cast<int>(face_intersection(*top[i], *top[j]).size()) == d) uf.unite(i, j);
    for (size_t i = 1; i < top.size(); ++i)
        if (!uf.same(0, static_cast<int>(i))) return false;
    return true;
}
}  // namespace

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c) {
    PseudomanifoldReport r;
    r.pure = c.is_pure();
    int d = c.dim();
    if (d < 0) {
        r.ridge_degrees_ok = true;
        r.strongly_connected = true;
        return r;
    }
    std::map<Face, int> ridge_deg;
    Face cur;
    for (const auto& f : c.facets()) {
        if (static_cast<int>(f.size()) != d + 1) continue;
        for (size_t i = 0; i < f.size(); ++i) {
            Face ridge = f;
            ridge.erase(ridge.begin() + i);
            ridge_deg[ridge]++;
        }
    }
    r.ridge_degrees_ok = true;
    for (const auto& [ridge, deg] : ridge_deg)
        if (deg > 2) r.ridge_degrees_ok = false;
    r.strongly_connected = top_dual_connected(c.facets(), d);
    return r;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
    if (c.is_empty()) throw NotPseudomanifold("boundary of empty complex");
    if (!c.is_pure()) throw NotPseudomanifold("boundary_complex requires a pure complex");
    int d = c.dim();
    std::map<Face, int> ridge_deg;
    for (const auto& f : c.facets()) {
        for (size_t i = 0; i < f.size(); ++i) {
            Face ridge = f;
            ridge.erase(ridge.begin() + i);
            ridge_deg[ridge]++;
        }
    }
    std::vector<Face> bnd;
    for (const auto& [ridge, deg] : ridge_deg) {
        if (deg > 2) throw NotPseudomanifold("ridge in more than two facets");
        if (deg == 1) bnd.push_back(ridge);
    }
    (void)d;
    if (bnd.empty()) return SimplicialComplex::empty();
    return SimplicialComplex::from_facets(std::move(bnd));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& f0) {
    Face f = sorted_face(f0);
    if (!c.contains_face(f)) throw FaceNotFound("link: not a face: " + face_to_string(f));
    std::vector<Face> gen;
    for (const auto& g : c.facets())
        if (is_subset(f, g)) {
            Face rest = face_minus(g, f);
            if (!rest.empty()) gen.push_back(rest);
        }
    if (gen.empty()) return SimplicialComplex::empty();
    return SimplicialComplex::from_facets(std::move(gen));
}

SimplicialComplex cone(int v, const SimplicialComplex& c) {
    if (v <= 0) throw InvalidComplex("cone: apex must be a positive integer");
    if (c.is_empty()) return SimplicialComplex::from_facets({{v}});
    auto vs = c.vertices();
    if (std::binary_search(vs.begin(), vs.end(), v))
        throw VertexClash("cone: vertex " + std::to_string(v) + " already present");
    std::vector<Face> out;
    for (const auto& f : c.facets()) {
        Face g = f;
        g.push_back(v);
        out.push_back(sorted_face(std::move(g)));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex remove_facet(const SimplicialComplex& c, const Face& facet0) {
    Face facet = sorted_face(facet0);
    auto it = std::find(c.facets().begin(), c.facets().end(), facet);
    if (it == c.facets().end()) throw FaceNotFound("remove_facet: not a facet");
    std::vector<Face> rest;
    for (const auto& f : c.facets())
        if (f != facet) rest.push_back(f);
    // proper faces of the removed facet that are now maximal
    for (size_t i = 0; i < facet.size(); ++i) {
        Face ridge = facet;
        ridge.erase(ridge.begin() + i);
        if (ridge.empty()) continue;
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

SimplicialComplex remove_maximal_face(const SimplicialComplex& c, const Face& f) {
    return remove_facet(c, f);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Face> all = a.facets();
    all.insert(all.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_facets(std::move(all));
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<std::pair<int, int>>& map) {
    std::map<int, int> m(map.begin(), map.end());
    std::vector<Face> out;
    for (const auto& f : c.facets()) {
        Face g;
        for (int v : f) {
            auto it = m.find(v);
            if (it == m.end()) throw InvalidInput("relabel: vertex missing from map");
            g.push_back(it->second);
        }
        g = sorted_face(std::move(g));
        if (g.size() != f.size()) throw InvalidInput("relabel: map not injective on a facet");
        out.push_back(std::move(g));
    }
    if (out.empty()) return SimplicialComplex::empty();
    return SimplicialComplex::from_facets(std::move(out));
}

namespace {

bool vertex_connected(const SimplicialComplex& c) {
    auto vs = c.vertices();
    if (vs.size() <= 1) return true;
    std::map<int, int> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(vs.size()));
    for (const auto& f : c.facets())
        for (size_t i = 1; i < f.size(); ++i) uf.unite(idx[f[0]], idx[f[i]]);
    for (size_t i = 1; i < vs.size(); ++i)
        if (!uf.same(0, static_cast<int>(i))) return false;
    return true;
}

bool closed_pseudomanifold(const SimplicialComplex& c, int d) {
    if (!c.is_pure() || c.dim() != d) return false;
    std::map<Face, int> ridge_deg;
    for (const auto& f : c.facets())
        for (size_t i = 0; i < f.size(); ++i) {
            Face ridge = f;
            ridge.erase(ridge.begin() + i);
            ridge_deg[ridge]++;
        }
    for (const auto& [ridge, deg] : ridge_deg)
        if (deg != 2) return false;
    return true;
}

}  // namespace

bool verify_sphere(const SimplicialComplex& c, int d) {
    if (d >= 4 || d < 1) throw UnsupportedDimension("verify_sphere supports d in {1,2,3}");
    if (c.is_empty() || c.dim() != d || !c.is_pure()) return false;
    if (d == 1) {
        // connected 2-regular graph, i.e. a single cycle
        std::map<int, int> deg;
        for (const auto& e : c.facets()) {
            deg[e[0]]++;
            deg[e[1]]++;
        }
        for (const auto& [v, k] : deg)
            if (k != 2) return false;
        return vertex_connected(c);
    }
    if (!closed_pseudomanifold(c, d)) return false;
    if (!top_dual_connected(c.facets(), d)) return false;
    for (int v : c.vertices()) {
        SimplicialComplex lk = link(c, {v});
        if (!verify_sphere(lk, d - 1)) return false;
    }
    return c.euler_characteristic() == (d % 2 == 0 ? 2 : 0);
}

namespace {

// Backtracking shelling search with memoization on the used-facet set.
struct ShellingSearch {
    const std::vector<Face>& facets;
    int d;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::set<std::vector<char>> seen;
    std::vector<int> order;

    ShellingSearch(const std::vector<Face>& fs, int dim, std::uint64_t b)
        : facets(fs), d(dim), budget(b) {}

    // Intersection of facet j with the union of the used prefix, as a complex.
    SimplicialComplex prefix_intersection(const std::vector<char>& used, int j) const {
        std::vector<Face> gen;
        for (size_t i = 0; i < facets.size(); ++i) {
            if (!used[i]) continue;
            Face g = face_intersection(facets[j], facets[i]);
            if (!g.empty()) gen.push_back(g);
        }
        if (gen.empty()) return SimplicialComplex::empty();
        return SimplicialComplex::from_facets(std::move(gen));
    }

    bool admissible(const std::vector<char>& used, int j) {
        SimplicialComplex inter = prefix_intersection(used, j);
        if (inter.is_empty()) return false;
        if (inter.dim() != d - 1 || !inter.is_pure()) return false;
        // the intersection is a union of boundary facets of a simplex; check it
        // is itself shellable, constructively
        if (inter.facets().size() > 1) {
            auto sub = find_shelling_order(inter, 100000);
            if (sub.status != ShellingSearchResult::Status::found) return false;
        }
        return true;
    }

    bool dfs(std::vector<char>& used, size_t count) {
        if (count == facets.size()) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (!seen.insert(used).second) return false;
        for (size_t j = 0; j < facets.size(); ++j) {
            if (used[j]) continue;
            if (!admissible(used, static_cast<int>(j))) continue;
            used[j] = 1;
            order.push_back(static_cast<int>(j));
            if (dfs(used, count + 1)) return true;
            if (out_of_budget) return false;
            order.pop_back();
            used[j] = 0;
        }
        return false;
    }
};

}  // namespace

ShellingSearchResult find_shelling_order(const SimplicialComplex& c, std::uint64_t node_budget) {
    ShellingSearchResult res;
    if (c.is_empty() || !c.is_pure()) throw InvalidComplex("find_shelling_order requires a pure complex");
    const auto& fs = c.facets();
    if (fs.size() == 1) {
        res.status = ShellingSearchResult::Status::found;
        res.order = {fs[0]};
        return res;
    }
    ShellingSearch search(fs, c.dim(), node_budget);
    std::vector<char> used(fs.size(), 0);
    for (size_t first = 0; first < fs.size(); ++first) {
        used[first] = 1;
        search.order.push_back(static_cast<int>(first));
        if (search.dfs(used, 1)) {
            for (int idx : search.order) res.order.push_back(fs[idx]);
            res.status = ShellingSearchResult::Status::found;
            return res;
        }
        search.order.pop_back();
        used[first] = 0;
        if (search.out_of_budget) {
            res.status = ShellingSearchResult::Status::budget_exhausted;
            return res;
        }
    }
    res.status = ShellingSearchResult::Status::not_shellable;
    return res;
}

}  // namespace lcs
