#include "widthdual/stree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "widthdual/family.hpp"

namespace wdk {

STree STree::single_edge(Sep s) {
    STree t;
    t.nodes = 2;
    t.add_edge(0, 1, s);
    return t;
}

std::vector<std::vector<std::pair<int, int>>> STree::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].x].emplace_back(edges[e].y, e);
        adj[edges[e].y].emplace_back(edges[e].x, e);
    }
    return adj;
}

int STree::edge_between(int x, int y) const {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if ((edges[e].x == x && edges[e].y == y) || (edges[e].x == y && edges[e].y == x)) return e;
    return -1;
}

Sep STree::label(int x, int y) const {
    int e = edge_between(x, y);
    if (e < 0) throw UsageError("no edge between nodes " + std::to_string(x) + " and " + std::to_string(y));
    return edges[e].x == x ? edges[e].xy : edges[e].yx;
}

std::vector<Sep> STree::incoming(int t) const {
    std::vector<Sep> out;
    for (const auto& e : edges) {
        if (e.y == t) out.push_back(e.xy);
        if (e.x == t) out.push_back(e.yx);
    }
    return out;
}

std::vector<Sep> STree::oriented_star_at(int t) const {
    auto in = incoming(t);
    std::sort(in.begin(), in.end());
    in.erase(std::unique(in.begin(), in.end()), in.end());
    return in;
}

int STree::degree(int t) const {
    int d = 0;
    for (const auto& e : edges) d += (e.x == t) + (e.y == t);
    return d;
}

std::vector<int> STree::leaves() const {
    std::vector<int> out;
    for (int t = 0; t < nodes; ++t)
        if (degree(t) == 1) out.push_back(t);
    return out;
}

std::vector<int> STree::distances_from(int s) const {
    auto adj = adjacency();
    std::vector<int> dist(nodes, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [v, e] : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

bool STree::is_tree() const {
    if (nodes < 2 || static_cast<int>(edges.size()) != nodes - 1) return false;
    for (const auto& e : edges)
        if (e.x < 0 || e.y < 0 || e.x >= nodes || e.y >= nodes || e.x == e.y) return false;
    auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [](int v) { return v < 0; });
}

std::string Report::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < problems.size(); ++i) os << (i ? "; " : "") << problems[i];
    return os.str();
}

Report validate_over(const STree& t, const SeparationSystem& s, const StarFamily& f) {
    Report r;
    if (!t.is_tree()) {
        r.problems.push_back("not a tree with at least one edge");
        return r;
    }
    bool labels_ok = true;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const auto& ed = t.edges[e];
        if (ed.yx != ed.xy.inverse()) {
            r.problems.push_back("edge " + std::to_string(ed.x) + "-" + std::to_string(ed.y) + " violates the inverse condition");
            labels_ok = false;
        }
        for (Sep lab : {ed.xy, ed.yx})
            if (s.find(lab) < 0) {
                r.problems.push_back("edge " + std::to_string(ed.x) + "-" + std::to_string(ed.y) + " label " + to_string(lab) +
                                     " is not in the system");
                labels_ok = false;
            }
    }
    if (!labels_ok) return r;
    for (int node = 0; node < t.nodes; ++node) {
        Star sigma;
        for (Sep lab : t.oriented_star_at(node)) sigma.push_back(s.find(lab));
        sigma = sorted_unique(std::move(sigma));
        if (!f.contains(sigma)) {
            std::string desc;
            for (int x : sigma) desc += to_string(s.payload(x));
            r.problems.push_back("node " + std::to_string(node) + " star " + desc + " not in family");
            r.bad_nodes.push_back(node);
        }
    }
    return r;
}

bool is_irredundant(const STree& t) {
    for (int node = 0; node < t.nodes; ++node) {
        auto in = t.incoming(node);
        std::sort(in.begin(), in.end());
        if (std::adjacent_find(in.begin(), in.end()) != in.end()) return false;
    }
    return true;
}

namespace {

// Keeps the nodes flagged in `keep`, renumbering in increasing order.
STree induced(const STree& t, const std::vector<char>& keep, std::vector<int>* remap) {
    std::vector<int> id(t.nodes, -1);
    STree out;
    for (int v = 0; v < t.nodes; ++v)
        if (keep[v]) id[v] = out.nodes++;
    for (const auto& e : t.edges)
        if (keep[e.x] && keep[e.y]) out.edges.push_back({id[e.x], id[e.y], e.xy, e.yx});
    if (remap) *remap = id;
    return out;
}

// Nodes on the far side of edge (from, to), i.e. the component of T - {from,to} containing `to`.
std::vector<char> branch(const STree& t, const std::vector<std::vector<std::pair<int, int>>>& adj, int from, int to) {
    std::vector<char> in(t.nodes, 0);
    std::vector<int> stack{to};
    in[to] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, e] : adj[u])
            if (!in[v] && !(u == to && v == from)) {
                in[v] = 1;
                stack.push_back(v);
            }
    }
    return in;
}

void compose(std::vector<int>& total, const std::vector<int>& step) {
    for (int& v : total)
        if (v >= 0) v = step[v];
}

}  // namespace

STree prune(const STree& t, int x, std::vector<int>* remap) {
    STree cur = t;
    std::vector<int> total(t.nodes);
    std::iota(total.begin(), total.end(), 0);
    int xc = x;
    for (;;) {
        auto adj = cur.adjacency();
        bool changed = false;
        for (int node = 0; node < cur.nodes && !changed; ++node) {
            const auto& nb = adj[node];
            for (std::size_t i = 0; i < nb.size() && !changed; ++i)
                for (std::size_t j = i + 1; j < nb.size() && !changed; ++j) {
                    int a = nb[i].first, b = nb[j].first;
                    if (cur.label(a, node) != cur.label(b, node)) continue;
                    auto far_b = branch(cur, adj, node, b);
                    int drop = far_b[xc] ? a : b;
                    auto gone = branch(cur, adj, node, drop);
                    std::vector<char> keep(cur.nodes);
                    for (int v = 0; v < cur.nodes; ++v) keep[v] = !gone[v];
                    std::vector<int> step;
                    cur = induced(cur, keep, &step);
                    compose(total, step);
                    xc = step[xc];
                    changed = true;
                }
        }
        if (!changed) break;
    }
    if (remap) *remap = total;
    return cur;
}

bool natural_leq(const STree& t, OrientedEdge e, OrientedEdge f) {
    if (t.edge_between(e.x, e.y) < 0 || t.edge_between(f.x, f.y) < 0) throw UsageError("not an edge of the tree");
    bool same = (e.x == f.x && e.y == f.y) || (e.x == f.y && e.y == f.x);
    if (same) return e.x == f.x && e.y == f.y;
    auto from_u = t.distances_from(f.x);
    return from_u[e.x] == from_u[e.y] + 1 && from_u[f.y] == 1 && t.distances_from(e.y)[f.y] == from_u[e.y] + 1;
}

namespace {

// Deletes the component of T - t't - tt'' containing t and joins t' to t'' with label s.
STree contract_at(const STree& t, int tp, int node, int tpp, Sep s, std::vector<int>* remap) {
    auto adj = t.adjacency();
    auto side_p = branch(t, adj, node, tp);
    auto side_pp = branch(t, adj, node, tpp);
    std::vector<char> keep(t.nodes);
    for (int v = 0; v < t.nodes; ++v) keep[v] = side_p[v] || side_pp[v];
    std::vector<int> step;
    STree out = induced(t, keep, &step);
    out.add_edge(step[tp], step[tpp], s);
    if (remap) *remap = step;
    return out;
}

}  // namespace

STree contract_nonantisymmetric(const STree& t) {
    STree cur = t;
    for (;;) {
        auto adj = cur.adjacency();
        bool changed = false;
        for (int node = 0; node < cur.nodes && !changed; ++node)
            for (auto [a, ea] : adj[node]) {
                for (auto [b, eb] : adj[node]) {
                    if (a == b) continue;
                    Sep s = cur.label(a, node);
                    if (s != cur.label(node, b)) continue;
                    cur = contract_at(cur, a, node, b, s, nullptr);
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        if (!changed) return cur;
    }
}

STree reduce_to_unique_leaf_occurrence(const STree& t, int x, const SeparationSystem& s, std::vector<int>* remap) {
    if (x < 0 || x >= t.nodes || t.degree(x) != 1) throw UsageError("node is not a leaf");
    int y = t.adjacency()[x][0].first;
    Sep r = t.label(x, y);
    int rid = s.find(r);
    if (rid < 0) throw UsageError("leaf label not in system");
    if (s.degenerate(rid) || s.trivial(rid)) throw UsageError("leaf label must be nontrivial and nondegenerate");

    std::vector<int> total;
    STree cur = prune(t, x, &total);
    int xc = total[x];
    for (;;) {
        int yc = cur.adjacency()[xc][0].first;
        auto dist = cur.distances_from(xc);
        int tail = -1, head = -1;
        for (const auto& e : cur.edges) {
            for (auto [u, v, lab] : {std::tuple{e.x, e.y, e.xy}, std::tuple{e.y, e.x, e.yx}}) {
                if (lab != r || (u == xc && v == yc)) continue;
                if (tail < 0 || dist[u] < dist[tail]) {
                    tail = u;
                    head = v;
                }
            }
        }
        if (tail < 0) break;
        if (dist[head] != dist[tail] + 1) throw EngineError("repeated leaf label points back toward the leaf");
        int prev = -1;
        const auto adj = cur.adjacency();
        for (auto [v, e] : adj[tail])
            if (dist[v] + 1 == dist[tail]) prev = v;
        if (prev < 0 || cur.label(prev, tail) != r) throw EngineError("path to repeated leaf label is not uniformly labelled");
        std::vector<int> step;
        cur = contract_at(cur, prev, tail, head, r, &step);
        compose(total, step);
        xc = step[xc];
        cur = prune(cur, xc, &step);
        compose(total, step);
        xc = step[xc];
    }
    if (remap) *remap = total;
    return cur;
}

STree canonical(const STree& t) {
    STree out = t;
    for (auto& e : out.edges)
        if (e.x > e.y) {
            std::swap(e.x, e.y);
            std::swap(e.xy, e.yx);
        }
    std::sort(out.edges.begin(), out.edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
        return std::tie(a.x, a.y, a.xy, a.yx) < std::tie(b.x, b.y, b.xy, b.yx);
    });
    return out;
}

nlohmann::json sep_to_json(Sep s) { return {{"A", members_of(s.a)}, {"B", members_of(s.b)}}; }

Sep sep_from_json(const nlohmann::json& j) {
    try {
        return {mask_from(j.at("A").get<std::vector<int>>()), mask_from(j.at("B").get<std::vector<int>>())};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad separation: ") + e.what());
    } catch (const UsageError& e) {
        throw InputError(e.what());
    }
}

nlohmann::json stree_to_json(const STree& t) {
    STree c = canonical(t);
    nlohmann::json nodes = nlohmann::json::array();
    for (int v = 0; v < c.nodes; ++v) nodes.push_back(v);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : c.edges) edges.push_back({{"x", e.x}, {"y", e.y}, {"alpha_xy", sep_to_json(e.xy)}});
    return {{"kind", "stree"}, {"nodes", nodes}, {"edges", edges}};
}

STree stree_from_json(const nlohmann::json& j) {
    try {
        if (j.at("kind") != "stree") throw InputError("witness is not an S-tree");
        STree t;
        t.nodes = static_cast<int>(j.at("nodes").size());
        for (const auto& e : j.at("edges")) t.add_edge(e.at("x").get<int>(), e.at("y").get<int>(), sep_from_json(e.at("alpha_xy")));
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad S-tree JSON: ") + e.what());
    }
}

}  // namespace wdk
