#include "lcs/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lcs {

std::string CanonicalKey::to_text() const {
    std::ostringstream os;
    for (const auto& f : facets) os << face_to_string(f) << '\n';
    return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string CanonicalKey::digest() const {
    std::ostringstream os;
    os << std::hex;
    std::uint64_t h = fnv1a64(to_text());
    for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
    return os.str();
}

namespace {

// Branch and bound over label assignments. Labels are assigned in order
// 1,2,...,n. For a partial assignment every facet's final sorted form is its
// labeled part followed by labels > k, so sorting optimistic completions gives
// a valid lower bound on any completion's key.
struct Canonicalizer {
    int n;
    std::vector<std::vector<int>> fac;  // facets as vertex indices 0..n-1
    std::vector<int> label;             // vertex index -> assigned label, 0 if none
    std::vector<int> cand_order;        // heuristic vertex order
    std::vector<Face> best;
    std::vector<int> best_assign;
    bool have_best = false;

    explicit Canonicalizer(const SimplicialComplex& c) {
        auto vs = c.vertices();
        n = static_cast<int>(vs.size());
        std::map<int, int> idx;
        for (int i = 0; i < n; ++i) idx[vs[i]] = i;
        for (const auto& f : c.facets()) {
            std::vector<int> g;
            for (int v : f) g.push_back(idx[v]);
            fac.push_back(std::move(g));
        }
        label.assign(n, 0);
        // order candidates by (facet degree, facet size profile); ties by index
        std::vector<std::pair<std::vector<int>, int>> profile(n);
        for (int i = 0; i < n; ++i) profile[i] = {{}, i};
        for (const auto& f : fac)
            for (int v : f) profile[v].first.push_back(static_cast<int>(f.size()));
        for (auto& p : profile) std::sort(p.first.begin(), p.first.end());
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (profile[a].first.size() != profile[b].first.size())
                return profile[a].first.size() > profile[b].first.size();
            if (profile[a].first != profile[b].first) return profile[a].first < profile[b].first;
            return a < b;
        });
        cand_order = order;
    }

    std::vector<Face> optimistic_key(int k) const {
        std::vector<Face> key;
        key.reserve(fac.size());
        for (const auto& f : fac) {
            Face g;
            for (int v : f)
                if (label[v]) g.push_back(label[v]);
            std::sort(g.begin(), g.end());
            int next = k + 1;
            while (g.size() < f.size()) g.push_back(next++);
            key.push_back(std::move(g));
        }
        std::sort(key.begin(), key.end());
        return key;
    }

    std::vector<Face> exact_key() const {
        std::vector<Face> key;
        key.reserve(fac.size());
        for (const auto& f : fac) {
            Face g;
            for (int v : f) g.push_back(label[v]);
            std::sort(g.begin(), g.end());
            key.push_back(std::move(g));
        }
        std::sort(key.begin(), key.end());
        return key;
    }

    void dfs(int k) {
        if (k == n) {
            auto key = exact_key();
            if (!have_best || key < best) {
                best = key;
                best_assign = label;
                have_best = true;
            }
            return;
        }
        for (int v : cand_order) {
            if (label[v]) continue;
            label[v] = k + 1;
            if (!have_best || optimistic_key(k + 1) <= best) dfs(k + 1);
            label[v] = 0;
        }
    }
};

}  // namespace

CanonicalResult canonical_form(const SimplicialComplex& c) {
    CanonicalResult res;
    if (c.is_empty()) return res;
    Canonicalizer cz(c);
    cz.dfs(0);
    res.key.facets = cz.best;
    auto vs = c.vertices();
    for (int i = 0; i < cz.n; ++i) res.relabeling.emplace_back(vs[i], cz.best_assign[i]);
    return res;
}

CanonicalKey canonical_key(const SimplicialComplex& c) { return canonical_form(c).key; }

}  // namespace lcs
