#include "widthdual/solve.hpp"

#include <algorithm>

#include "widthdual/oracle.hpp"
#include "widthdual/translate.hpp"

namespace wdk {

namespace {

struct ModeName {
    Mode mode;
    const char* name;
};

constexpr ModeName kModes[] = {
    {Mode::Branch, "branch"},   {Mode::Tree, "tree"}, {Mode::Path, "path"},
    {Mode::Adhesion, "adhesion"}, {Mode::Carving, "carving"}, {Mode::Rank, "rank"},
    {Mode::MatroidTree, "matroid-tree"}, {Mode::Custom, "custom"},
};

std::string bound(const char* name, const char* rel, int v) { return std::string(name) + rel + std::to_string(v); }

}  // namespace

const char* mode_name(Mode m) {
    for (auto [mode, name] : kModes)
        if (mode == m) return name;
    return "?";
}

Mode parse_mode(const std::string& name) {
    for (auto [mode, n] : kModes)
        if (name == n) return mode;
    throw UsageError("unknown mode: " + name);
}

bool uses_matroid(Mode m) { return m == Mode::MatroidTree; }

Problem build_problem(const Instance& in, Mode mode, int k, int w) {
    if (k <= 0) throw UsageError("k must be positive");
    Problem p;
    p.mode = mode;
    p.k = k;
    if (uses_matroid(mode)) {
        if (in.matroid) p.matroid = std::make_unique<Matroid>(*in.matroid);
        else if (in.graph) p.matroid = std::make_unique<Matroid>(Matroid::graphic(*in.graph));
        else throw UsageError("matroid mode needs a matroid or a graph");
        p.universe = std::make_unique<Universe>(Universe::bipartitions(*p.matroid));
    } else {
        if (!in.graph) throw UsageError(std::string(mode_name(mode)) + " mode needs a graph");
        p.graph = std::make_unique<Graph>(*in.graph);
        if (mode == Mode::Carving) p.universe = std::make_unique<Universe>(Universe::bipartitions(*p.graph, OrderKind::Carving));
        else if (mode == Mode::Rank) p.universe = std::make_unique<Universe>(Universe::bipartitions(*p.graph, OrderKind::CutRank));
        else p.universe = std::make_unique<Universe>(Universe::vertex_separations(*p.graph));
    }
    p.system = std::make_unique<SeparationSystem>(p.universe->ground(), p.universe->enumerate(k));
    const auto& s = *p.system;
    switch (mode) {
    case Mode::Branch: p.family = std::make_unique<TangleFamily>(s, *p.graph); break;
    case Mode::Tree: p.family = std::make_unique<IntersectionFamily>(s, k); break;
    case Mode::Path: p.family = std::make_unique<IntersectionFamily>(s, k, 2); break;
    case Mode::Adhesion:
        p.w = w == 0 ? k : w;
        if (p.w < k) throw UsageError("adhesion mode needs w >= k");
        p.family = std::make_unique<IntersectionFamily>(s, p.w);
        break;
    case Mode::Carving:
    case Mode::Rank: p.family = std::make_unique<TangleFamily>(s); break;
    case Mode::MatroidTree: p.family = std::make_unique<MatroidFamily>(s, *p.matroid, k); break;
    case Mode::Custom: {
        std::vector<Star> members;
        for (const auto& star : in.custom_stars) {
            auto ids = ids_of(s, star);
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (ids[i] < 0) throw InputError("family separation " + to_string(star[i]) + " is not in S_k");
            members.push_back(sorted_unique(ids));
        }
        p.family = std::make_unique<ExplicitFamily>(s, std::move(members));
        break;
    }
    }
    return p;
}

Solution solve(const Problem& p) {
    Solution out;
    if (p.mode != Mode::Custom) {
        out.witness = strong_duality(*p.family, *p.universe, &out.stats);
        return out;
    }
    try {
        out.witness = strong_duality(*p.family, *p.universe, &out.stats);
    } catch (const EngineError&) {
        out.stats = {};
        out.witness = weak_duality(*p.family, &out.stats);
        out.weak_fallback = true;
    }
    return out;
}

std::string width_param(const Problem& p, Side side) {
    const bool tree = side == Side::Tree;
    const int k = p.k;
    switch (p.mode) {
    case Mode::Tree: return tree ? bound("tw", "<=", k - 2) : bound("tw", ">=", k - 1);
    case Mode::Path: return tree ? bound("pw", "<=", k - 2) : bound("pw", ">=", k - 1);
    case Mode::Branch:
        if (k <= 2) return tree ? bound("tangle_number", "<=", k - 1) : bound("tangle_number", ">=", k);
        return tree ? bound("bw", "<=", k - 1) : bound("bw", ">=", k);
    case Mode::Carving: return tree ? bound("cw", "<=", k - 1) : bound("cw", ">=", k);
    case Mode::Rank: return tree ? bound("rw", "<=", k - 1) : bound("rw", ">=", k);
    case Mode::MatroidTree: return tree ? bound("mtw", "<=", k - 1) : bound("mtw", ">=", k);
    case Mode::Adhesion: {
        std::string args = "(width<=" + std::to_string(p.w - 2) + ",adhesion<=" + std::to_string(k - 1) + ")";
        return (tree ? "adhesion_td" : "no_adhesion_td") + args;
    }
    case Mode::Custom: return tree ? "custom_tree" : side == Side::Tangle ? "custom_tangle" : "custom_orientation";
    }
    return "?";
}

nlohmann::json classical_object(const Problem& p, const Witness& w) {
    const auto& s = *p.system;
    if (w.side == Side::Tree) {
        switch (p.mode) {
        case Mode::Tree:
        case Mode::Path:
        case Mode::Adhesion: return td_to_json(stree_to_tree_decomposition(w.tree, p.graph->n));
        case Mode::Branch:
            if (p.k >= 3 && p.graph->m() >= 2) return bd_to_json(stree_to_branch_decomposition(*p.graph, w.tree));
            return nullptr;
        case Mode::MatroidTree: return mtd_to_json(stree_to_matroid_decomposition(*p.matroid, w.tree));
        default: return nullptr;
        }
    }
    if (w.side != Side::Tangle) return nullptr;
    auto ids = ids_of(s, w.oriented);
    if (p.mode == Mode::Tree) return {{"sets", sets_to_json(bramble_from_tangle(*p.graph, ids, s, p.k))}};
    if (p.mode == Mode::Path) return {{"sets", sets_to_json(blockage_from_tangle(ids, s))}, {"k", p.k}};
    return nullptr;
}

int small_branchwidth(const Graph& g) {
    if (g.m() <= 1) return 0;
    auto adj = g.adjacency();
    int widest = 0;
    for (Mask c : g.components()) {
        int edges = 0, centres = 0;
        for (int v : members_of(c)) {
            int d = popcount(adj[v]);
            edges += d;
            if (d >= 2) ++centres;
        }
        edges /= 2;
        if (edges >= 2) widest = std::max(widest, centres <= 1 ? 1 : 2);
    }
    return widest;
}

BranchSummary branch_summary(const Graph& g) {
    Instance in{g, std::nullopt, {}};
    auto side_at = [&](int k) { return solve(build_problem(in, Mode::Branch, k)).witness.side; };
    BranchSummary out;
    int first_tree = -1;
    for (int k = 1; k <= g.n + 1; ++k) {
        Side s = side_at(k);
        if (s == Side::Tangle) out.tangle_number = k;
        else if (k >= 3 && first_tree < 0) first_tree = k;
    }
    if (first_tree < 0) throw EngineError("no tree side up to |V|+1");
    out.branch_width = first_tree == 3 ? small_branchwidth(g) : first_tree - 1;
    return out;
}

DichotomyReport verify_dichotomy(const Problem& p) {
    DichotomyReport r;
    Solution sol;
    try {
        sol = solve(p);
    } catch (const std::exception& e) {
        r.problems.push_back(std::string("engine failed: ") + e.what());
        return r;
    }
    r.side = sol.witness.side;
    r.engine_calls = sol.stats.calls;
    const auto& w = sol.witness;
    const auto& s = *p.system;
    auto rep = verify_witness(w, *p.family);
    r.problems.insert(r.problems.end(), rep.problems.begin(), rep.problems.end());

    try {
        bool tangle_exists = brute_force_tangle(*p.family).has_value();
        if (w.side == Side::Tree && tangle_exists) r.problems.push_back("oracle found a tangle next to a tree witness");
        if (w.side == Side::Tangle && !tangle_exists) r.problems.push_back("oracle found no tangle");
    } catch (const ResourceError& e) {
        r.problems.push_back(std::string("oracle cap: ") + e.what());
    }

    const bool tangle = w.side == Side::Tangle;
    const int k = p.k;
    if (p.graph && rep.ok()) {
        const Graph& g = *p.graph;
        auto expect = [&](bool classical_tangle, const char* what) {
            if (classical_tangle != tangle) r.problems.push_back(std::string("side disagrees with exact ") + what);
        };
        try {
            if (p.mode == Mode::Tree) expect(treewidth_exact(g) >= k - 1, "tree-width");
            if (p.mode == Mode::Path) expect(pathwidth_exact(g) >= k - 1, "path-width");
            if (p.mode == Mode::Branch && k >= 3 && g.m() <= 12) expect(branchwidth_exact(g) >= k, "branch-width");
        } catch (const ResourceError&) {
        }
        try {
            if (!tangle && (p.mode == Mode::Tree || p.mode == Mode::Path || p.mode == Mode::Adhesion)) {
                auto td = stree_to_tree_decomposition(w.tree, g.n);
                auto tr = validate_tree_decomposition(g, td);
                if (!tr.ok()) r.problems.push_back("tree decomposition invalid: " + tr.summary());
                int width_cap = (p.mode == Mode::Adhesion ? p.w : k) - 1;
                if (td_width(td) >= width_cap) r.problems.push_back("tree decomposition too wide");
                if (td.nodes > 1 && td_adhesion(td) >= k) r.problems.push_back("tree decomposition adhesion too large");
                if (p.mode == Mode::Path)
                    for (int v = 0; v < td.nodes; ++v)
                        if (w.tree.degree(v) > 2) r.problems.push_back("path mode tree is not a path");
                auto back = tree_decomposition_to_stree(g, td);
                if (auto br = validate_over(back, s, *p.family); td.nodes > 1 && !br.ok())
                    r.problems.push_back("tree decomposition round trip failed: " + br.summary());
            }
            if (!tangle && p.mode == Mode::Branch && k >= 3 && g.m() >= 2) {
                auto bd = stree_to_branch_decomposition(g, w.tree);
                auto br = validate_branch_decomposition(g, bd);
                if (!br.ok()) r.problems.push_back("branch decomposition invalid: " + br.summary());
                else if (bd_width(g, bd) >= k) r.problems.push_back("branch decomposition too wide");
                else if (auto back = validate_over(branch_decomposition_to_stree(g, bd), s, *p.family); !back.ok())
                    r.problems.push_back("branch decomposition round trip failed: " + back.summary());
            }
            if (tangle && p.mode == Mode::Tree) {
                auto ids = ids_of(s, w.oriented);
                auto bramble = bramble_from_tangle(g, ids, s, k);
                auto vr = validate_bramble(g, bramble);
                if (!vr.ok()) r.problems.push_back("bramble invalid: " + vr.summary());
                if (bramble_order(g, bramble) < k) r.problems.push_back("bramble order below k");
                if (tangle_from_bramble(g, bramble, s) != ids) r.problems.push_back("bramble round trip changed the tangle");
            }
            if (tangle && p.mode == Mode::Path) {
                auto ids = ids_of(s, w.oriented);
                auto blockage = blockage_from_tangle(ids, s);
                auto vr = validate_blockage(g, blockage, s, k);
                if (!vr.ok()) r.problems.push_back("blockage invalid: " + vr.summary());
                if (tangle_from_blockage(blockage, s) != ids) r.problems.push_back("blockage round trip changed the tangle");
            }
        } catch (const std::exception& e) {
            r.problems.push_back(std::string("translation failed: ") + e.what());
        }
    }
    if (p.matroid && rep.ok() && !tangle) {
        try {
            auto td = stree_to_matroid_decomposition(*p.matroid, w.tree);
            if (mtd_width(*p.matroid, td) >= k) r.problems.push_back("matroid decomposition too wide");
            auto back = matroid_decomposition_to_stree(*p.matroid, td, k);
            if (auto br = validate_over(back, s, *p.family); !br.ok())
                r.problems.push_back("matroid decomposition round trip failed: " + br.summary());
        } catch (const std::exception& e) {
            r.problems.push_back(std::string("translation failed: ") + e.what());
        }
    }
    r.verified = r.problems.empty();
    return r;
}

}  // namespace wdk
