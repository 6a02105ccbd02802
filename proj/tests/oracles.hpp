#pragma once
// Independent reference computations used only by the tests.

#include "spherecheck/skeleton.hpp"
#include "spherecheck/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using spherecheck::Triangulation;

// Partition of n items given by labels; returned as sorted list of sorted blocks.
inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& label) {
    std::map<int, std::vector<int>> m;
    for (int i = 0; i < static_cast<int>(label.size()); ++i) m[label[i]].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : m) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// Naive label propagation: repeat "take the minimum label across each identification" until stable.
inline std::vector<int> propagate(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : pairs) {
            int m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
                label[a] = label[b] = m;
                changed = true;
            }
        }
    }
    return label;
}

inline std::vector<std::pair<int, int>> vertex_pairs(const Triangulation& t) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < t.size(); ++a)
        for (int f = 0; f < 4; ++f)
            if (const auto& g = t.adjacent(a, f))
                for (int v = 0; v < 4; ++v)
                    if (v != f) pairs.push_back({4 * a + v, 4 * g->tet + g->perm[v]});
    return pairs;
}

// Unoriented edge identifications.
inline std::vector<std::pair<int, int>> edge_pairs(const Triangulation& t) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < t.size(); ++a)
        for (int f = 0; f < 4; ++f)
            if (const auto& g = t.adjacent(a, f))
                for (int e = 0; e < 6; ++e) {
                    int i = spherecheck::kEdgeVertices[e][0], j = spherecheck::kEdgeVertices[e][1];
                    if (i == f || j == f) continue;
                    pairs.push_back({6 * a + e, 6 * g->tet + spherecheck::edge_index(g->perm[i], g->perm[j])});
                }
    return pairs;
}

// Euler characteristic of each vertex link, assembled corner by corner:
// link vertices are (tet, corner, other end) triples glued across faces.
inline std::map<int, long> link_euler(const Triangulation& t) {
    auto vlabel = propagate(4 * t.size(), vertex_pairs(t));
    std::vector<std::pair<int, int>> lp;
    for (int a = 0; a < t.size(); ++a)
        for (int f = 0; f < 4; ++f)
            if (const auto& g = t.adjacent(a, f))
                for (int v = 0; v < 4; ++v)
                    for (int w = 0; w < 4; ++w)
                        if (v != f && w != f && v != w)
                            lp.push_back({16 * a + 4 * v + w, 16 * g->tet + 4 * g->perm[v] + g->perm[w]});
    auto llabel = propagate(16 * t.size(), lp);
    std::map<int, std::set<int>> verts;
    std::map<int, long> tris, half_edges;
    for (int a = 0; a < t.size(); ++a)
        for (int v = 0; v < 4; ++v) {
            int cls = vlabel[4 * a + v];
            tris[cls] += 1;
            for (int w = 0; w < 4; ++w)
                if (w != v) verts[cls].insert(llabel[16 * a + 4 * v + w]);
            for (int f = 0; f < 4; ++f)
                if (f != v) half_edges[cls] += t.adjacent(a, f) ? 1 : 2;
        }
    std::map<int, long> out;
    for (auto& [cls, n] : tris) out[cls] = static_cast<long>(verts[cls].size()) - half_edges[cls] / 2 + n;
    return out;
}

}  // namespace oracle
