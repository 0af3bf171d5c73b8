#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "widthdual/core.hpp"
#include "widthdual/universe.hpp"

// Independent reference computations used only by the tests.
namespace ref {

using wdk::Graph;
using wdk::Mask;
using wdk::Sep;

inline Graph graph(int n, std::vector<std::pair<int, int>> e) { return Graph::make(n, std::move(e)); }

// Every vertex goes to A only, B only, or both; keep assignments with no edge between A\B and B\A.
inline std::set<Sep> vertex_separations(const Graph& g, int k) {
    std::set<Sep> out;
    int total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        Mask a = 0, b = 0;
        int c = code;
        for (int v = 0; v < g.n; ++v, c /= 3) {
            if (c % 3 != 1) a |= Mask{1} << v;
            if (c % 3 != 0) b |= Mask{1} << v;
        }
        bool crossing = false;
        for (auto [u, v] : g.edges) {
            Mask e = (Mask{1} << u) | (Mask{1} << v);
            if ((e & a & ~b) && (e & b & ~a)) crossing = true;
        }
        if (!crossing && std::popcount(a & b) < k) out.insert({a, b});
    }
    return out;
}

// Rank of an edge set in the cycle matroid: vertices touched minus components, by union-find.
inline int graphic_rank(const Graph& g, Mask edges) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int rank = 0;
    for (int e = 0; e < g.m(); ++e)
        if ((edges >> e) & 1U) {
            int a = find(g.edges[e].first), b = find(g.edges[e].second);
            if (a != b) {
                parent[a] = b;
                ++rank;
            }
        }
    return rank;
}

// Tree-width via all elimination orderings.
inline int treewidth_by_orderings(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    int best = g.n;
    do {
        auto adj = g.adjacency();
        int width = 0;
        for (int v : order) {
            width = std::max(width, std::popcount(adj[v]));
            for (int u : wdk::members_of(adj[v])) adj[u] = (adj[u] | adj[v]) & ~(Mask{1} << u) & ~(Mask{1} << v);
            for (int u = 0; u < g.n; ++u) adj[u] &= ~(Mask{1} << v);
            adj[v] = 0;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return g.n == 0 ? -1 : best;
}

// Path-width as the vertex separation number over all orderings.
inline int pathwidth_by_orderings(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    auto adj = g.adjacency();
    int best = g.n;
    do {
        int width = 0;
        Mask prefix = 0;
        for (int v : order) {
            prefix |= Mask{1} << v;
            int open = 0;
            for (int u : wdk::members_of(prefix)) open += (adj[u] & ~prefix) ? 1 : 0;
            width = std::max(width, open);
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Branch-width over all unrooted ternary trees, built by inserting leaves into edges.
inline int branchwidth_by_trees(const Graph& g) {
    const int m = g.m();
    if (m <= 1) return 0;
    int best = g.n;
    std::vector<std::pair<int, int>> edges{{0, 1}};  // nodes: leaves are 0..m-1, internal from m
    std::function<void(int, int)> grow = [&](int next_leaf, int next_internal) {
        if (next_leaf == m) {
            int nodes = next_internal;
            std::vector<std::vector<int>> adj(nodes);
            for (auto [a, b] : edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            int width = 0;
            for (auto [a, b] : edges) {
                Mask side = 0;
                std::vector<int> stack{a};
                std::vector<char> seen(nodes, 0);
                seen[a] = seen[b] = 1;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    if (x < m) side |= Mask{1} << x;
                    for (int y : adj[x])
                        if (!seen[y]) {
                            seen[y] = 1;
                            stack.push_back(y);
                        }
                }
                Mask va = 0, vb = 0;
                for (int e = 0; e < m; ++e) ((side >> e) & 1U ? va : vb) |= g.edge_mask(e);
                width = std::max(width, std::popcount(va & vb));
            }
            best = std::min(best, width);
            return;
        }
        std::size_t count = edges.size();
        for (std::size_t i = 0; i < count; ++i) {
            auto [a, b] = edges[i];
            edges[i] = {a, next_internal};
            edges.push_back({next_internal, b});
            edges.push_back({next_internal, next_leaf});
            grow(next_leaf + 1, next_internal + 1);
            edges.pop_back();
            edges.pop_back();
            edges[i] = {a, b};
        }
    };
    grow(2, m);
    return best;
}

}  // namespace ref
