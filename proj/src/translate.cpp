#include "widthdual/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wdk {

namespace {

using Adj = std::vector<std::vector<int>>;

Adj plain_adjacency(int nodes, const std::vector<std::pair<int, int>>& edges) {
    Adj adj(nodes);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Nodes reachable from `to` without crossing the edge to `from`.
std::vector<char> side_of(const Adj& adj, int from, int to) {
    std::vector<char> in(adj.size(), 0);
    std::vector<int> stack{to};
    in[to] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!in[v] && !(u == to && v == from)) {
                in[v] = 1;
                stack.push_back(v);
            }
    }
    return in;
}

bool connected_within(const Graph& g, Mask set) {
    if (!set) return false;
    auto comps = g.components(full_mask(g.n) & ~set);
    return comps.size() == 1;
}

}  // namespace

bool is_plain_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes < 1 || static_cast<int>(edges.size()) != nodes - 1) return false;
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return false;
    auto adj = plain_adjacency(nodes, edges);
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == nodes;
}

Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    Report r;
    if (!is_plain_tree(td.nodes, td.edges) || static_cast<int>(td.bags.size()) != td.nodes) {
        r.problems.push_back("decomposition tree is malformed");
        return r;
    }
    Mask all = 0;
    for (Mask b : td.bags) all |= b;
    if (all != full_mask(g.n)) r.problems.push_back("some vertex lies in no bag");
    for (int e = 0; e < g.m(); ++e)
        if (std::none_of(td.bags.begin(), td.bags.end(), [&](Mask b) { return is_subset(g.edge_mask(e), b); }))
            r.problems.push_back("edge " + std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second) +
                                 " lies in no bag");
    for (int v = 0; v < g.n; ++v) {
        int nodes_with = 0, links = 0;
        for (Mask b : td.bags) nodes_with += (b >> v) & 1U;
        for (auto [a, b] : td.edges) links += ((td.bags[a] >> v) & 1U) && ((td.bags[b] >> v) & 1U);
        if (nodes_with > 0 && links != nodes_with - 1)
            r.problems.push_back("bags containing vertex " + std::to_string(v) + " are not connected");
    }
    return r;
}

int td_width(const TreeDecomposition& td) {
    int w = -1;
    for (Mask b : td.bags) w = std::max(w, popcount(b) - 1);
    return w;
}

int td_adhesion(const TreeDecomposition& td) {
    if (td.nodes == 1) return popcount(td.bags[0]);
    int a = 0;
    for (auto [x, y] : td.edges) a = std::max(a, popcount(td.bags[x] & td.bags[y]));
    return a;
}

TreeDecomposition stree_to_tree_decomposition(const STree& t, int ground) {
    TreeDecomposition td;
    td.nodes = t.nodes;
    for (const auto& e : t.edges) td.edges.emplace_back(e.x, e.y);
    for (int v = 0; v < t.nodes; ++v) {
        Mask bag = full_mask(ground);
        for (Sep s : t.incoming(v)) bag &= s.b;
        td.bags.push_back(bag);
    }
    return td;
}

STree tree_decomposition_to_stree(const Graph& g, const TreeDecomposition& td) {
    if (auto rep = validate_tree_decomposition(g, td); !rep.ok()) throw UsageError("invalid tree decomposition: " + rep.summary());
    TreeDecomposition d = td;
    if (d.nodes == 1) {
        d.nodes = 2;
        d.bags.push_back(full_mask(g.n));
        d.edges.emplace_back(0, 1);
    }
    auto adj = plain_adjacency(d.nodes, d.edges);
    STree t;
    t.nodes = d.nodes;
    for (auto [a, b] : d.edges) {
        auto sa = side_of(adj, b, a);
        Mask ua = 0, ub = 0;
        for (int v = 0; v < d.nodes; ++v) (sa[v] ? ua : ub) |= d.bags[v];
        t.add_edge(a, b, {ua, ub});
    }
    return t;
}

Report validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
    Report r;
    if (g.m() == 0) {
        if (bd.nodes != 0 || !bd.leaf_of.empty()) r.problems.push_back("edgeless graph needs the empty decomposition");
        return r;
    }
    if (!is_plain_tree(bd.nodes, bd.edges)) {
        r.problems.push_back("decomposition tree is malformed");
        return r;
    }
    if (static_cast<int>(bd.leaf_of.size()) != g.m()) {
        r.problems.push_back("leaf map does not cover every edge");
        return r;
    }
    auto adj = plain_adjacency(bd.nodes, bd.edges);
    std::vector<int> hits(bd.nodes, 0);
    for (int l : bd.leaf_of) {
        if (l < 0 || l >= bd.nodes) {
            r.problems.push_back("leaf index out of range");
            return r;
        }
        ++hits[l];
    }
    for (int v = 0; v < bd.nodes; ++v) {
        int d = static_cast<int>(adj[v].size());
        bool leaf = d <= 1;
        if (leaf && hits[v] != 1) r.problems.push_back("leaf " + std::to_string(v) + " carries " + std::to_string(hits[v]) + " edges");
        if (!leaf && hits[v]) r.problems.push_back("internal node " + std::to_string(v) + " carries an edge");
        if (!leaf && d != 3) r.problems.push_back("internal node " + std::to_string(v) + " has degree " + std::to_string(d));
    }
    return r;
}

int bd_width(const Graph& g, const BranchDecomposition& bd) {
    auto adj = plain_adjacency(bd.nodes, bd.edges);
    int w = 0;
    for (auto [a, b] : bd.edges) {
        auto sa = side_of(adj, b, a);
        Mask va = 0, vb = 0;
        for (int e = 0; e < g.m(); ++e) (sa[bd.leaf_of[e]] ? va : vb) |= g.edge_mask(e);
        w = std::max(w, popcount(va & vb));
    }
    return w;
}

namespace {

// Mutable labelled tree used while reshaping an S-tree into a branch decomposition.
struct Shape {
    std::vector<std::set<int>> adj;
    std::map<std::pair<int, int>, Sep> lab;
    std::vector<int> owner;  // graph edge carried by a node, or -1
    std::vector<char> alive;

    int add() {
        adj.emplace_back();
        owner.push_back(-1);
        alive.push_back(1);
        return static_cast<int>(adj.size()) - 1;
    }
    void link(int x, int y, Sep xy) {
        adj[x].insert(y);
        adj[y].insert(x);
        lab[{x, y}] = xy;
        lab[{y, x}] = xy.inverse();
    }
    void unlink(int x, int y) {
        adj[x].erase(y);
        adj[y].erase(x);
        lab.erase({x, y});
        lab.erase({y, x});
    }
};

}  // namespace

BranchDecomposition stree_to_branch_decomposition(const Graph& g, const STree& t) {
    if (g.m() < 2) throw UsageError("branch decompositions from S-trees need at least two edges");
    STree p = prune(t, 0);
    Shape sh;
    for (int v = 0; v < p.nodes; ++v) sh.add();
    for (const auto& e : p.edges) sh.link(e.x, e.y, e.xy);
    const Mask all = full_mask(g.n);

    for (int e = 0; e < g.m(); ++e) {
        Mask ends = g.edge_mask(e);
        int sink = -1;
        for (int v = 0; v < static_cast<int>(sh.adj.size()) && sink < 0; ++v) {
            if (!sh.alive[v] || sh.owner[v] >= 0) continue;
            bool ok = std::all_of(sh.adj[v].begin(), sh.adj[v].end(), [&](int u) { return is_subset(ends, sh.lab[{u, v}].b); });
            if (ok) sink = v;
        }
        if (sink < 0) throw EngineError("no sink for a graph edge in the S-tree");
        Sep leaf_label{ends, all};
        if (sh.adj[sink].size() <= 2) {
            int leaf = sh.add();
            sh.owner[leaf] = e;
            sh.link(leaf, sink, leaf_label);
            continue;
        }
        int via = -1;
        for (int u : sh.adj[sink])
            if (via < 0 && is_subset(ends, sh.lab[{u, sink}].a)) via = u;
        if (via < 0 || sh.adj[sink].size() > 3) throw EngineError("sink node cannot host a new leaf");
        Sep s = sh.lab[{via, sink}];
        int mid = sh.add();
        sh.unlink(via, sink);
        sh.link(via, mid, s);
        sh.link(mid, sink, s);
        int leaf = sh.add();
        sh.owner[leaf] = e;
        sh.link(leaf, mid, leaf_label);
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < static_cast<int>(sh.adj.size()); ++v) {
            if (!sh.alive[v] || sh.owner[v] >= 0) continue;
            if (sh.adj[v].size() <= 1) {
                for (int u : std::vector<int>(sh.adj[v].begin(), sh.adj[v].end())) sh.unlink(u, v);
                sh.alive[v] = 0;
                changed = true;
            } else if (sh.adj[v].size() == 2) {
                int a = *sh.adj[v].begin(), b = *sh.adj[v].rbegin();
                Sep s = sh.lab[{a, v}];
                sh.unlink(a, v);
                sh.unlink(v, b);
                sh.link(a, b, s);
                sh.alive[v] = 0;
                changed = true;
            }
        }
    }

    BranchDecomposition bd;
    std::vector<int> id(sh.adj.size(), -1);
    for (int v = 0; v < static_cast<int>(sh.adj.size()); ++v)
        if (sh.alive[v]) id[v] = bd.nodes++;
    for (int v = 0; v < static_cast<int>(sh.adj.size()); ++v)
        if (sh.alive[v])
            for (int u : sh.adj[v])
                if (v < u) bd.edges.emplace_back(id[v], id[u]);
    bd.leaf_of.assign(g.m(), -1);
    for (int v = 0; v < static_cast<int>(sh.adj.size()); ++v)
        if (sh.alive[v] && sh.owner[v] >= 0) bd.leaf_of[sh.owner[v]] = id[v];
    return bd;
}

STree branch_decomposition_to_stree(const Graph& g, const BranchDecomposition& bd) {
    if (auto rep = validate_branch_decomposition(g, bd); !rep.ok()) throw UsageError("invalid branch decomposition: " + rep.summary());
    const Mask all = full_mask(g.n);
    // Items are graph edges plus one pseudo-item per isolated vertex.
    std::vector<Mask> item;
    std::vector<int> leaf;
    int nodes = bd.nodes;
    auto edges = bd.edges;
    for (int e = 0; e < g.m(); ++e) {
        item.push_back(g.edge_mask(e));
        leaf.push_back(bd.leaf_of[e]);
    }
    Mask touched = 0;
    for (Mask m : item) touched |= m;
    for (int v : members_of(all & ~touched)) {
        item.push_back(Mask{1} << v);
        if (nodes == 0) {
            leaf.push_back(nodes++);
            continue;
        }
        // Split an existing leaf into an internal node with two leaves.
        int host = leaf.front();
        int old_item_leaf = nodes++;
        int new_leaf = nodes++;
        edges.emplace_back(host, old_item_leaf);
        edges.emplace_back(host, new_leaf);
        leaf.front() = old_item_leaf;
        leaf.push_back(new_leaf);
    }
    if (item.size() <= 1) return STree::single_edge({all, all});

    auto adj = plain_adjacency(nodes, edges);
    STree t;
    t.nodes = nodes;
    for (auto [a, b] : edges) {
        auto sa = side_of(adj, b, a);
        Mask va = 0, vb = 0;
        for (std::size_t i = 0; i < item.size(); ++i) (sa[leaf[i]] ? va : vb) |= item[i];
        bool small_a = popcount(va) <= 2, small_b = popcount(vb) <= 2;
        if (small_a && small_b) {
            int mid = t.add_node();
            t.add_edge(a, mid, {va, all});
            t.add_edge(b, mid, {vb, all});
            continue;
        }
        Sep s{va | (small_b ? vb : 0), vb | (small_a ? va : 0)};
        t.add_edge(a, b, s);
    }
    return t;
}

Report validate_bramble(const Graph& g, const std::vector<Mask>& sets) {
    Report r;
    auto adj = g.adjacency();
    auto nbhd = [&](Mask x) {
        Mask n = x;
        for (int v : members_of(x)) n |= adj[v];
        return n;
    };
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!connected_within(g, sets[i])) r.problems.push_back("bramble set " + std::to_string(i) + " is not connected");
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!(nbhd(sets[i]) & sets[j]))
                r.problems.push_back("bramble sets " + std::to_string(i) + " and " + std::to_string(j) + " do not touch");
    return r;
}

int bramble_order(const Graph& g, const std::vector<Mask>& sets) {
    if (g.n > 20) throw ResourceError("hitting set search capped at 20 vertices");
    int best = g.n + 1;
    for (Mask h = 0; h <= full_mask(g.n); ++h) {
        if (popcount(h) < best && std::all_of(sets.begin(), sets.end(), [&](Mask x) { return (x & h) != 0; })) best = popcount(h);
        if (h == full_mask(g.n)) break;
    }
    return best;
}

std::vector<int> tangle_from_bramble(const Graph& g, const std::vector<Mask>& sets, const SeparationSystem& s) {
    (void)g;
    std::vector<int> out;
    for (int r : s.separations()) {
        if (s.degenerate(r)) {
            out.push_back(r);
            continue;
        }
        Sep p = s.payload(r);
        bool toward_b = std::any_of(sets.begin(), sets.end(), [&](Mask x) { return is_subset(x, p.b & ~p.a); });
        bool toward_a = std::any_of(sets.begin(), sets.end(), [&](Mask x) { return is_subset(x, p.a & ~p.b); });
        if (toward_a == toward_b) throw UsageError("bramble cannot orient separation " + to_string(p));
        out.push_back(toward_b ? r : s.inverse(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> bramble_from_tangle(const Graph& g, const std::vector<int>& tangle, const SeparationSystem& s, int k) {
    std::vector<char> in(s.size(), 0);
    for (int x : tangle) in.at(x) = 1;
    auto adj = g.adjacency();
    const Mask all = full_mask(g.n);
    std::vector<Mask> out;
    for (Mask x = 0;; ++x) {
        if (popcount(x) < k) {
            int chosen = 0;
            Mask pick = 0;
            for (Mask c : g.components(x)) {
                Mask nb = 0;
                for (int v : members_of(c)) nb |= adj[v];
                nb &= ~c;
                int id = s.find({all & ~c, c | nb});
                if (id >= 0 && in[id]) {
                    ++chosen;
                    pick = c;
                }
            }
            if (chosen != 1) throw UsageError("tangle does not single out one component for a small separator");
            out.push_back(pick);
        }
        if (x == all) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Mask boundary(const Graph& g, Mask x) {
    auto adj = g.adjacency();
    Mask out = 0;
    for (int v : members_of(x))
        if (adj[v] & ~x) out |= Mask{1} << v;
    return out;
}

Report validate_blockage(const Graph& g, const std::vector<Mask>& sets, const SeparationSystem& s, int k) {
    Report r;
    std::set<Mask> in(sets.begin(), sets.end());
    for (Mask x : in)
        if (popcount(boundary(g, x)) >= k) r.problems.push_back("(B1) fails for " + to_string(Sep{x, 0}));
    for (Mask x : in) {
        for (Mask sub = x;; sub = (sub - 1) & x) {
            if (popcount(boundary(g, sub)) < k && !in.count(sub)) {
                r.problems.push_back("(B2) fails: subset " + to_string(Sep{sub, 0}) + " missing");
                break;
            }
            if (sub == 0) break;
        }
    }
    for (int rep : s.separations()) {
        Sep p = s.payload(rep);
        int count = static_cast<int>(in.count(p.a)) + static_cast<int>(in.count(p.b));
        if (count != 1) r.problems.push_back("(B3) fails for " + to_string(p));
    }
    return r;
}

std::vector<int> tangle_from_blockage(const std::vector<Mask>& sets, const SeparationSystem& s) {
    std::set<Mask> in(sets.begin(), sets.end());
    std::vector<int> out;
    for (int i = 0; i < s.size(); ++i)
        if (in.count(s.payload(i).a)) out.push_back(i);
    return out;
}

std::vector<Mask> blockage_from_tangle(const std::vector<int>& tangle, const SeparationSystem& s) {
    std::vector<Mask> out;
    for (int x : tangle) out.push_back(s.payload(x).a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int mtd_node_width(const Matroid& m, const MatroidTreeDecomposition& td, int node) {
    auto adj = plain_adjacency(td.nodes, td.edges);
    if (adj[node].empty()) return m.rank();
    int total = 0;
    for (int u : adj[node]) {
        auto side = side_of(adj, node, u);
        Mask f = 0;
        for (int e = 0; e < m.size(); ++e)
            if (side[td.node_of[e]]) f |= Mask{1} << e;
        total += m.rank(m.ground() & ~f);
    }
    return total - (static_cast<int>(adj[node].size()) - 1) * m.rank();
}

int mtd_width(const Matroid& m, const MatroidTreeDecomposition& td) {
    int w = 0;
    for (int v = 0; v < td.nodes; ++v) w = std::max(w, mtd_node_width(m, td, v));
    return w;
}

MatroidTreeDecomposition stree_to_matroid_decomposition(const Matroid& m, const STree& t) {
    MatroidTreeDecomposition td;
    td.nodes = t.nodes;
    for (const auto& e : t.edges) td.edges.emplace_back(e.x, e.y);
    auto adj = t.adjacency();
    td.node_of.assign(m.size(), -1);
    for (int e = 0; e < m.size(); ++e) {
        for (int v = 0; v < t.nodes && td.node_of[e] < 0; ++v) {
            bool sink = std::all_of(adj[v].begin(), adj[v].end(), [&](auto nb) { return (t.label(nb.first, v).b >> e) & 1U; });
            if (sink) td.node_of[e] = v;
        }
        if (td.node_of[e] < 0) throw EngineError("ground element has no sink in the S-tree");
    }
    return td;
}

STree matroid_decomposition_to_stree(const Matroid& m, const MatroidTreeDecomposition& td, int k) {
    const Mask all = m.ground();
    if (m.rank() < k) return STree::single_edge({0, all});
    if (!is_plain_tree(td.nodes, td.edges)) throw UsageError("matroid decomposition tree is malformed");
    if (td.nodes == 1) return STree::single_edge({all, 0});
    auto adj = plain_adjacency(td.nodes, td.edges);
    STree t;
    t.nodes = td.nodes;
    for (auto [a, b] : td.edges) {
        auto sa = side_of(adj, b, a);
        Mask xa = 0;
        for (int e = 0; e < m.size(); ++e)
            if (sa[td.node_of[e]]) xa |= Mask{1} << e;
        t.add_edge(a, b, {xa, all & ~xa});
    }
    return t;
}

nlohmann::json td_to_json(const TreeDecomposition& td) {
    nlohmann::json bags = nlohmann::json::object();
    for (int v = 0; v < td.nodes; ++v) bags[std::to_string(v)] = members_of(td.bags[v]);
    return {{"bags", bags}, {"edges", td.edges}};
}

nlohmann::json bd_to_json(const BranchDecomposition& bd) {
    nlohmann::json leaf_map = nlohmann::json::object();
    for (std::size_t e = 0; e < bd.leaf_of.size(); ++e) leaf_map[std::to_string(e)] = bd.leaf_of[e];
    return {{"tree", {{"nodes", bd.nodes}, {"edges", bd.edges}}}, {"leaf_map", leaf_map}};
}

nlohmann::json mtd_to_json(const MatroidTreeDecomposition& td) {
    return {{"tree", {{"nodes", td.nodes}, {"edges", td.edges}}}, {"tau", td.node_of}};
}

nlohmann::json sets_to_json(const std::vector<Mask>& sets) {
    nlohmann::json out = nlohmann::json::array();
    for (Mask x : sets) out.push_back(members_of(x));
    return out;
}

}  // namespace wdk
