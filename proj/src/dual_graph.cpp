#include "lcs/dual_graph.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "lcs/union_find.hpp"

namespace lcs {

bool DualGraph::connected() const {
    if (num_nodes <= 1) return true;
    UnionFind uf(num_nodes);
    for (const auto& arc : arcs) uf.unite(arc.a, arc.b);
    for (int i = 1; i < num_nodes; ++i)
        if (!uf.same(0, i)) return false;
    return true;
}

DualGraph dual_graph(const SimplicialComplex& c) {
    if (!c.is_pure()) throw InvalidComplex("dual_graph requires a pure complex");
    DualGraph g;
    const auto& fs = c.facets();
    g.num_nodes = static_cast<int>(fs.size());
    int d = c.dim();
    for (int i = 0; i < g.num_nodes; ++i)
        for (int j = i + 1; j < g.num_nodes; ++j) {
            Face shared = face_intersection(fs[i], fs[j]);
            if (static_cast<int>(shared.size()) == d) g.arcs.push_back({i, j, shared});
        }
    return g;
}

bool DualSpanningTree::crosses(const Face& ridge) const {
    for (size_t i = 0; i < parent_ridge.size(); ++i)
        if (parent[i] >= 0 && parent_ridge[i] == ridge) return true;
    return false;
}

std::vector<std::vector<int>> DualSpanningTree::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (size_t i = 0; i < parent.size(); ++i)
        if (parent[i] >= 0) ch[parent[i]].push_back(static_cast<int>(i));
    return ch;
}

std::vector<int> DualSpanningTree::bfs_order() const {
    auto ch = children();
    std::vector<int> order;
    std::deque<int> q{root};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        order.push_back(x);
        for (int c : ch[x]) q.push_back(c);
    }
    return order;
}

void check_spanning(const DualGraph& g, const DualSpanningTree& t) {
    if (t.size() != g.num_nodes) throw InvalidTree("node count mismatch");
    int root_count = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (t.parent[i] < 0) {
            root_count++;
            continue;
        }
        bool found = false;
        for (const auto& arc : g.arcs) {
            int a = std::min(i, t.parent[i]), b = std::max(i, t.parent[i]);
            if (arc.a == a && arc.b == b && arc.ridge == t.parent_ridge[i]) {
                found = true;
                break;
            }
        }
        if (!found) throw InvalidTree("tree arc not in dual graph");
    }
    if (root_count != 1) throw InvalidTree("tree must have exactly one root");
    // acyclicity + reachability
    for (int i = 0; i < t.size(); ++i) {
        int x = i, steps = 0;
        while (t.parent[x] >= 0) {
            x = t.parent[x];
            if (++steps > t.size()) throw InvalidTree("cycle in parent pointers");
        }
        if (x != t.root) throw InvalidTree("node not connected to root");
    }
}

namespace {
DualSpanningTree tree_from_arc_set(const DualGraph& g, int root, const std::vector<int>& arc_ids) {
    // orient the chosen arcs away from the root
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_nodes);  // (neighbor, arc id)
    for (int id : arc_ids) {
        adj[g.arcs[id].a].push_back({g.arcs[id].b, id});
        adj[g.arcs[id].b].push_back({g.arcs[id].a, id});
    }
    DualSpanningTree t;
    t.root = root;
    t.parent.assign(g.num_nodes, -2);
    t.parent_ridge.assign(g.num_nodes, {});
    t.parent[root] = -1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (auto [y, id] : adj[x])
            if (t.parent[y] == -2) {
                t.parent[y] = x;
                t.parent_ridge[y] = g.arcs[id].ridge;
                q.push_back(y);
            }
    }
    for (int i = 0; i < g.num_nodes; ++i)
        if (t.parent[i] == -2) throw InvalidTree("arc set does not span");
    return t;
}
}  // namespace

DualSpanningTree random_spanning_tree(const DualGraph& g, int root, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(g.arcs.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    UnionFind uf(g.num_nodes);
    std::vector<int> chosen;
    for (int id : perm) {
        if (!uf.same(g.arcs[id].a, g.arcs[id].b)) {
            uf.unite(g.arcs[id].a, g.arcs[id].b);
            chosen.push_back(id);
        }
    }
    if (static_cast<int>(chosen.size()) != g.num_nodes - 1)
        throw InvalidTree("dual graph not connected");
    return tree_from_arc_set(g, root, chosen);
}

DualSpanningTree bfs_spanning_tree(const DualGraph& g, int root) {
    UnionFind uf(g.num_nodes);
    std::vector<int> chosen;
    for (size_t id = 0; id < g.arcs.size(); ++id)
        if (!uf.same(g.arcs[id].a, g.arcs[id].b)) {
            uf.unite(g.arcs[id].a, g.arcs[id].b);
            chosen.push_back(static_cast<int>(id));
        }
    if (static_cast<int>(chosen.size()) != g.num_nodes - 1)
        throw InvalidTree("dual graph not connected");
    return tree_from_arc_set(g, root, chosen);
}

namespace {
// Recursive delete/contract enumeration of spanning trees.
struct TreeEnum {
    const DualGraph& g;
    int root;
    const std::function<bool(const DualSpanningTree&)>& cb;
    std::vector<int> chosen;
    bool stopped = false;

    TreeEnum(const DualGraph& g_, int root_, const std::function<bool(const DualSpanningTree&)>& cb_)
        : g(g_), root(root_), cb(cb_) {}

    bool connected_with(const std::vector<char>& alive) {
        UnionFind uf(g.num_nodes);
        for (size_t id = 0; id < g.arcs.size(); ++id)
            if (alive[id]) uf.unite(g.arcs[id].a, g.arcs[id].b);
        for (int id : chosen) uf.unite(g.arcs[id].a, g.arcs[id].b);
        for (int i = 1; i < g.num_nodes; ++i)
            if (!uf.same(0, i)) return false;
        return true;
    }

    void rec(std::vector<char>& alive, int next_id, UnionFind uf) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == g.num_nodes - 1) {
            if (!cb(tree_from_arc_set(g, root, chosen))) stopped = true;
            return;
        }
        int id = next_id;
        while (id < static_cast<int>(g.arcs.size()) &&
               (!alive[id] || uf.same(g.arcs[id].a, g.arcs[id].b)))
            ++id;
        if (id >= static_cast<int>(g.arcs.size())) return;
        // include arc id
        chosen.push_back(id);
        UnionFind uf2 = uf;
        uf2.unite(g.arcs[id].a, g.arcs[id].b);
        rec(alive, id + 1, uf2);
        chosen.pop_back();
        if (stopped) return;
        // exclude arc id, if the rest can still span
        alive[id] = 0;
        if (connected_with(alive)) rec(alive, id + 1, uf);
        alive[id] = 1;
    }
};
}  // namespace

void enumerate_spanning_trees(const DualGraph& g, int root,
                              const std::function<bool(const DualSpanningTree&)>& cb) {
    if (g.num_nodes == 0) return;
    if (g.num_nodes == 1) {
        DualSpanningTree t;
        t.root = root;
        t.parent = {-1};
        t.parent_ridge = {{}};
        cb(t);
        return;
    }
    std::vector<char> alive(g.arcs.size(), 1);
    TreeEnum te(g, root, cb);
    UnionFind uf(g.num_nodes);
    te.rec(alive, 0, uf);
}

}  // namespace lcs
