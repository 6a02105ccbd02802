#pragma once

#include <numeric>
#include <vector>

namespace spherecheck::detail {

class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(parent_.size()) - 1;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if already joined. The smaller root survives.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

// Union-find that also tracks a Z/2 offset between each element and its root.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        int p = 0;
        int r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // path compression
        int cur = x, acc = p;
        while (parent_[cur] != cur) {
            int next = parent_[cur];
            int old = parity_[cur];
            parent_[cur] = r;
            parity_[cur] = acc;
            acc ^= old;
            cur = next;
        }
        return r;
    }
    int parity(int x) {
        find(x);
        return parent_[x] == x ? 0 : parity_[x];
    }
    // Records parity(a) ^ parity(b) == rel. Returns false on contradiction.
    bool unite(int a, int b, int rel) {
        int ra = find(a), rb = find(b);
        int pa = parity(a), pb = parity(b);
        if (ra == rb) return (pa ^ pb) == rel;
        if (rb < ra) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ rel;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace spherecheck::detail
