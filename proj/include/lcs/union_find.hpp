#pragma once

#include <numeric>
#include <vector>

namespace lcs {

// Union-find whose class representative is always the smallest element id.
// The min-representative rule keeps replays byte-reproducible.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    void ensure(int n) {
        int old = static_cast<int>(parent_.size());
        if (n <= old) return;
        parent_.resize(n);
        std::iota(parent_.begin() + old, parent_.end(), old);
    }

    int find(int x) const {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Merges the classes; the smaller representative wins.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

    bool same(int a, int b) const { return find(a) == find(b); }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    mutable std::vector<int> parent_;
};

}  // namespace lcs
