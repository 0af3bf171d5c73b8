#include "widthdual/engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace wdk {

const char* side_name(Side s) {
    switch (s) {
        case Side::Tree: return "tree";
        case Side::Tangle: return "tangle";
        case Side::Orientation: return "orientation";
    }
    return "?";
}

std::vector<char> compute_forced(const StarFamily& f) {
    const auto& s = f.system();
    std::vector<char> out(s.size(), 0);
    for (int i = 0; i < s.size(); ++i) out[i] = f.contains_singleton(s.inverse(i)) ? 1 : 0;
    return out;
}

bool is_avoided(const std::vector<int>& set, const StarFamily& f) {
    std::vector<char> in(f.system().size(), 0);
    for (int x : set) in.at(x) = 1;
    return !f.find_within(in);
}

bool is_standard(const StarFamily& f) {
    const auto& s = f.system();
    auto forced = compute_forced(f);
    for (int i = 0; i < s.size(); ++i)
        if (s.trivial(i) && !forced[i] && !s.degenerate(i)) return false;
    return true;
}

Sep shift_map(Sep r, Sep s0, Sep s) {
    if (!sep_leq(r, s0)) throw UsageError("shift target must lie above the shifted element");
    if (s == r.inverse() && s != r) throw UsageError("shift is undefined at the inverse of its base");
    if (sep_leq(r, s)) return sep_join(s, s0);
    if (sep_leq(r, s.inverse())) return sep_join(s.inverse(), s0).inverse();
    throw UsageError("element outside the shift domain: " + to_string(s));
}

bool is_linked(const SeparationSystem& s, int s0, int r) {
    Sep target = s.payload(s0);
    for (int i = 0; i < s.size(); ++i)
        if (i != s.inverse(r) && s.leq(r, i) && s.find(sep_join(s.payload(i), target)) < 0) return false;
    return true;
}

int find_link(const SeparationSystem& s, const Universe& u, int r, int r2) {
    if (!s.leq(r, r2)) throw UsageError("find_link needs r <= r2");
    int best = -1, best_order = 0;
    for (int i = 0; i < s.size(); ++i) {
        if (!s.leq(r, i) || !s.leq(i, r2)) continue;
        int o = u.order(s.payload(i));
        if (best < 0 || o < best_order) {
            best = i;
            best_order = o;
        }
    }
    if (best < 0) throw EngineError("no element between r and r2");
    return best;
}

STree shift_stree(const STree& t, int x, Sep r, Sep s0, const SeparationSystem& s) {
    auto adj = t.adjacency();
    if (x < 0 || x >= t.nodes || adj[x].size() != 1) throw UsageError("shift base must be a leaf");
    if (t.label(x, adj[x][0].first) != r) throw UsageError("leaf label does not match shift base");
    auto dist = t.distances_from(x);
    STree out = t;
    for (auto& e : out.edges) {
        bool forward = dist[e.x] < dist[e.y];
        Sep away = forward ? e.xy : e.yx;
        Sep img = shift_map(r, s0, away);
        if (s.find(img) < 0) throw EngineError("shifted label leaves the system: " + to_string(img));
        e.xy = forward ? img : img.inverse();
        e.yx = e.xy.inverse();
    }
    return out;
}

STree merge_at_leaves(const STree& t1, int x1, const STree& t2, int x2, Sep s0) {
    auto a1 = t1.adjacency();
    auto a2 = t2.adjacency();
    if (a1.at(x1).size() != 1 || a2.at(x2).size() != 1) throw UsageError("merge needs leaves");
    int y1 = a1[x1][0].first, y2 = a2[x2][0].first;
    if (t1.label(y1, x1) != s0.inverse()) throw UsageError("first leaf is not associated with the inverse of s0");
    if (t2.label(y2, x2) != s0) throw UsageError("second leaf is not associated with s0");
    STree out;
    std::vector<int> id1(t1.nodes, -1), id2(t2.nodes, -1);
    for (int v = 0; v < t1.nodes; ++v)
        if (v != x1) id1[v] = out.add_node();
    for (int v = 0; v < t2.nodes; ++v)
        if (v != x2) id2[v] = out.add_node();
    for (const auto& e : t1.edges)
        if (e.x != x1 && e.y != x1) out.edges.push_back({id1[e.x], id1[e.y], e.xy, e.yx});
    for (const auto& e : t2.edges)
        if (e.x != x2 && e.y != x2) out.edges.push_back({id2[e.x], id2[e.y], e.xy, e.yx});
    out.add_edge(id2[y2], id1[y1], s0);
    return out;
}

std::vector<int> ids_of(const SeparationSystem& s, const std::vector<Sep>& seps) {
    std::vector<int> out;
    out.reserve(seps.size());
    for (Sep x : seps) out.push_back(s.find(x));
    return out;
}

Report verify_witness(const Witness& w, const StarFamily& f) {
    const auto& s = f.system();
    if (w.side == Side::Tree) return validate_over(w.tree, s, f);
    Report r;
    auto ids = ids_of(s, w.oriented);
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] < 0) r.problems.push_back("element " + to_string(w.oriented[i]) + " is not in the system");
    if (!r.ok()) return r;
    if (!is_orientation(s, ids)) r.problems.push_back("not an orientation: some separation is missing or doubly oriented");
    if (auto v = consistency_violation(s, ids))
        r.problems.push_back("inconsistent: " + to_string(s.payload(v->first)) + " < " + to_string(s.payload(v->second)) +
                             " with both " + to_string(s.payload(s.inverse(v->first))) + " and " +
                             to_string(s.payload(v->second)) + " present");
    std::vector<char> in(s.size(), 0);
    for (int x : ids) in[x] = 1;
    if (auto sigma = f.find_within(in)) {
        std::string desc;
        for (int x : *sigma) desc += to_string(s.payload(x));
        r.problems.push_back("contains family member " + desc);
    }
    return r;
}

namespace {

class Engine {
public:
    Engine(const StarFamily& f, const Universe* u, bool strong, EngineStats* stats)
        : f_(f), s_(f.system()), u_(u), strong_(strong), stats_(stats), base_forced_(compute_forced(f)) {
        if (!is_standard(f)) throw UsageError("family is not standard: some trivial separation is not forced");
    }

    Witness run() { return solve(std::vector<char>(s_.size(), 0)); }

private:
    struct Half {
        Witness w;
        int leaf = -1;  // -1: w is final (a tangle, or a tree over the current family)
    };

    std::vector<char> forced_with(const std::vector<char>& extra) const {
        std::vector<char> forced = base_forced_;
        for (int i = 0; i < s_.size(); ++i) forced[i] |= extra[i];
        return forced;
    }

    static std::string key_of(const std::vector<char>& extra) { return std::string(extra.begin(), extra.end()); }

    Witness solve(const std::vector<char>& extra) {
        if (stats_) ++stats_->calls;
        auto key = key_of(forced_with(extra));
        if (auto it = memo_.find(key); it != memo_.end()) {
            if (stats_) ++stats_->memo_hits;
            return it->second;
        }
        Witness w = compute(extra);
        memo_.emplace(std::move(key), w);
        return w;
    }

    Witness compute(const std::vector<char>& extra) {
        auto forced = forced_with(extra);
        for (int i = 0; i < s_.size(); ++i)
            if (forced[i] && forced[s_.inverse(i)]) return {Side::Tree, STree::single_edge(s_.payload(i)), {}};

        std::vector<int> open;
        for (int r : s_.separations())
            if (!s_.degenerate(r) && !forced[r] && !forced[s_.inverse(r)]) open.push_back(r);

        if (open.empty()) return base_case(extra, forced);
        return strong_ ? strong_step(extra, forced, open) : weak_step(extra, open);
    }

    Witness base_case(const std::vector<char>& extra, const std::vector<char>& forced) {
        std::vector<char> in(s_.size(), 0);
        for (int i = 0; i < s_.size(); ++i) in[i] = forced[i] || s_.degenerate(i);
        ExtendedFamily current(f_, extra);
        auto sigma = current.find_within(in);
        if (!sigma) {
            Witness w;
            std::vector<int> ids;
            for (int i = 0; i < s_.size(); ++i)
                if (in[i]) ids.push_back(i);
            bool consistent = is_consistent(s_, ids);
            if (strong_ && !consistent) throw EngineError("forced orientation is not consistent");
            w.side = consistent ? Side::Tangle : Side::Orientation;
            for (int i : ids) w.oriented.push_back(s_.payload(i));
            return w;
        }
        if (sigma->size() < 2) throw EngineError("singleton member inside an antisymmetric forced set");
        Witness w;
        w.side = Side::Tree;
        int centre = w.tree.add_node();
        for (int x : *sigma) {
            if (s_.degenerate(x) && !current.contains_singleton(x))
                throw EngineError("degenerate star element at a leaf outside the family");
            int leaf = w.tree.add_node();
            w.tree.add_edge(leaf, centre, s_.payload(x));
        }
        return w;
    }

    // Node whose star is exactly {payload(id)}, or -1.
    int node_with_star(const STree& t, int id) const {
        for (int v = 0; v < t.nodes; ++v) {
            auto st = t.oriented_star_at(v);
            if (st.size() == 1 && st[0] == s_.payload(id)) return v;
        }
        return -1;
    }

    bool over(const STree& t, const std::vector<char>& extra, int skip = -1) const {
        ExtendedFamily current(f_, extra);
        for (int v = 0; v < t.nodes; ++v) {
            if (v == skip) continue;
            Star sigma;
            for (Sep lab : t.oriented_star_at(v)) sigma.push_back(s_.find(lab));
            if (!current.contains(sorted_unique(std::move(sigma)))) return false;
        }
        return true;
    }

    Half half(const std::vector<char>& extra, int r, int target) {
        auto next = extra;
        next[r] = 1;
        Witness w = solve(next);
        if (w.side != Side::Tree || over(w.tree, extra)) return {std::move(w), -1};
        int x = node_with_star(w.tree, s_.inverse(r));
        if (x < 0) throw EngineError("recursive tree lacks the new singleton star");
        std::vector<int> remap;
        STree t = prune(w.tree, x, &remap);
        x = remap[x];
        t = reduce_to_unique_leaf_occurrence(t, x, s_, &remap);
        x = remap[x];
        t = shift_stree(t, x, s_.payload(r), s_.payload(target), s_);
        if (!over(t, extra, x)) throw EngineError("F-separability violation: a shifted star left the family");
        w.tree = std::move(t);
        return {std::move(w), x};
    }

    int descend(int x, const std::vector<char>& forced) const {
        for (;;) {
            int next = -1;
            for (int y = 0; y < s_.size() && next < 0; ++y)
                if (y != x && s_.leq(y, x) && !forced[y] && !s_.degenerate(y)) next = y;
            if (next < 0) return x;
            x = next;
        }
    }

    Witness strong_step(const std::vector<char>& extra, const std::vector<char>& forced, const std::vector<int>& open) {
        int r0 = s_.size();
        for (int r : open) r0 = std::min({r0, r, s_.inverse(r)});
        int r1 = descend(r0, forced);
        int r2 = s_.inverse(descend(s_.inverse(r0), forced));
        int s0 = find_link(s_, *u_, r1, r2);
        if (!is_linked(s_, s0, r1) || !is_linked(s_, s_.inverse(s0), s_.inverse(r2)))
            throw EngineError("F-separability violation: minimum-order link is not linked");

        if (!forced[s_.inverse(s0)]) {
            Half h1 = half(extra, r1, s0);
            if (h1.leaf < 0) return h1.w;
            if (forced[s0]) return h1.w;
            Half h2 = half(extra, s_.inverse(r2), s_.inverse(s0));
            if (h2.leaf < 0) return h2.w;
            Witness w;
            w.tree = merge_at_leaves(h1.w.tree, h1.leaf, h2.w.tree, h2.leaf, s_.payload(s0));
            return w;
        }
        Half h2 = half(extra, s_.inverse(r2), s_.inverse(s0));
        if (h2.leaf >= 0 && !over(h2.w.tree, extra)) throw EngineError("second half is not over the family");
        return h2.w;
    }

    Witness weak_step(const std::vector<char>& extra, const std::vector<int>& open) {
        int s0 = open.front();
        auto with = [&](int forced_id) {
            auto next = extra;
            next[forced_id] = 1;
            return solve(next);
        };
        Witness w1 = with(s_.inverse(s0));  // family gains {s0}
        if (w1.side != Side::Tree || over(w1.tree, extra)) return w1;
        Witness w2 = with(s0);  // family gains {inverse(s0)}
        if (w2.side != Side::Tree || over(w2.tree, extra)) return w2;
        int x1 = node_with_star(w1.tree, s0);
        int x2 = node_with_star(w2.tree, s_.inverse(s0));
        if (x1 < 0 || x2 < 0) throw EngineError("recursive tree lacks the new singleton star");
        std::vector<int> remap;
        STree t1 = prune(w1.tree, x1, &remap);
        x1 = remap[x1];
        STree t2 = prune(w2.tree, x2, &remap);
        x2 = remap[x2];
        Witness w;
        w.tree = merge_at_leaves(t2, x2, t1, x1, s_.payload(s0));
        return w;
    }

    const StarFamily& f_;
    const SeparationSystem& s_;
    const Universe* u_;
    bool strong_;
    EngineStats* stats_;
    std::vector<char> base_forced_;
    std::unordered_map<std::string, Witness> memo_;
};

}  // namespace

Witness weak_duality(const StarFamily& f, EngineStats* stats) { return Engine(f, nullptr, false, stats).run(); }

Witness strong_duality(const StarFamily& f, const Universe& u, EngineStats* stats) {
    return Engine(f, &u, true, stats).run();
}

}  // namespace wdk
