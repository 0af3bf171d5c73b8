#include "widthdual/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace wdk {

std::vector<std::vector<int>> enumerate_consistent_orientations(const SeparationSystem& s) {
    std::vector<int> free, fixed;
    for (int r : s.separations()) (s.degenerate(r) ? fixed : free).push_back(r);
    if (static_cast<int>(free.size()) > kOrientationCap) throw ResourceError("orientation enumeration capped at 24 separations");
    std::vector<std::vector<int>> out;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
        std::vector<int> o = fixed;
        for (std::size_t i = 0; i < free.size(); ++i) o.push_back((pick >> i) & 1U ? s.inverse(free[i]) : free[i]);
        std::sort(o.begin(), o.end());
        if (is_consistent(s, o)) out.push_back(std::move(o));
    }
    return out;
}

void for_each_tangle(const StarFamily& f, const std::function<bool(const std::vector<int>&)>& visit) {
    const auto& s = f.system();
    const int n = s.size();
    std::vector<std::vector<int>> below(n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            if (s.underlying(z) != s.underlying(y) && s.lt(z, y)) below[y].push_back(z);

    std::vector<char> in(n, 0);
    // Choosing x forces everything below it (consistency); returns false on a clash.
    auto choose = [&](int x, std::vector<int>& added) {
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            if (in[y]) continue;
            if (in[s.inverse(y)]) return false;
            in[y] = 1;
            added.push_back(y);
            for (int z : below[y]) stack.push_back(z);
        }
        return true;
    };
    auto avoids = [&](const std::vector<int>& added) {
        return std::none_of(added.begin(), added.end(), [&](int a) { return f.find_within(in, a).has_value(); });
    };
    auto undo = [&](const std::vector<int>& added) {
        for (int a : added) in[a] = 0;
    };

    std::vector<int> base;
    for (int r : s.separations())
        if (s.degenerate(r) && !choose(r, base)) return;
    if (!avoids(base)) return;

    std::vector<int> order;
    for (int r : s.separations())
        if (!s.degenerate(r)) order.push_back(r);

    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        while (idx < order.size() && (in[order[idx]] || in[s.inverse(order[idx])])) ++idx;
        if (idx == order.size()) {
            std::vector<int> o;
            for (int i = 0; i < n; ++i)
                if (in[i]) o.push_back(i);
            stop = !visit(o);
            return;
        }
        for (int x : {order[idx], s.inverse(order[idx])}) {
            std::vector<int> added;
            if (choose(x, added) && avoids(added)) rec(idx + 1);
            undo(added);
            if (stop) return;
        }
    };
    rec(0);
}

std::optional<std::vector<int>> brute_force_tangle(const StarFamily& f) {
    std::optional<std::vector<int>> found;
    for_each_tangle(f, [&](const std::vector<int>& o) {
        found = o;
        return false;
    });
    return found;
}

int treewidth_exact(const Graph& g) {
    if (g.n > 20) throw ResourceError("tree-width oracle capped at 20 vertices");
    if (g.n == 0) return -1;
    auto adj = g.adjacency();
    const Mask all = full_mask(g.n);
    // Vertices outside s ∪ {v} reachable from v through s.
    auto q = [&](Mask s, int v) {
        Mask seen = Mask{1} << v, frontier = seen, out = 0;
        while (frontier) {
            Mask next = 0;
            for (int u : members_of(frontier)) next |= adj[u];
            next &= ~seen;
            seen |= next;
            out |= next & ~s;
            frontier = next & s;
        }
        return popcount(out);
    };
    std::vector<int> tw(std::size_t{1} << g.n, 0);
    tw[0] = -1;
    for (Mask s = 1; s <= all; ++s) {
        int best = g.n;
        for (int v : members_of(s)) best = std::min(best, std::max(tw[s & ~(Mask{1} << v)], q(s & ~(Mask{1} << v), v)));
        tw[s] = best;
        if (s == all) break;
    }
    return tw[all];
}

int pathwidth_exact(const Graph& g) {
    if (g.n > 20) throw ResourceError("path-width oracle capped at 20 vertices");
    if (g.n == 0) return -1;
    auto adj = g.adjacency();
    const Mask all = full_mask(g.n);
    std::vector<int> pw(std::size_t{1} << g.n, 0);
    for (Mask s = 1; s <= all; ++s) {
        int frontier = 0;
        for (int u : members_of(s)) frontier += (adj[u] & ~s) ? 1 : 0;
        int best = g.n;
        for (int v : members_of(s)) best = std::min(best, pw[s & ~(Mask{1} << v)]);
        pw[s] = std::max(best, frontier);
        if (s == all) break;
    }
    return pw[all];
}

int branchwidth_exact(const Graph& g) {
    const int m = g.m();
    if (m > 12) throw ResourceError("branch-width oracle capped at 12 edges");
    if (m <= 1) return 0;
    const Mask all = full_mask(m);
    std::vector<Mask> verts(std::size_t{1} << m, 0);
    for (Mask x = 1; x <= all; ++x) {
        int e = std::countr_zero(x);
        verts[x] = verts[x & (x - 1)] | g.edge_mask(e);
    }
    auto mid = [&](Mask x) { return popcount(verts[x] & verts[all & ~x]); };
    std::vector<int> best(std::size_t{1} << m, 0);
    for (Mask x = 1; x < all; ++x) {
        int here = mid(x);
        if (popcount(x) == 1) {
            best[x] = here;
            continue;
        }
        int split = m + g.n;
        Mask low = x & (~x + 1);
        // Each unordered split once: the part holding the lowest edge.
        for (Mask y = (x - 1) & x; y; y = (y - 1) & x)
            if ((y & low) && y != x) split = std::min(split, std::max(best[y], best[x & ~y]));
        best[x] = std::max(here, split);
    }
    int answer = m + g.n;
    for (Mask y = (all - 1) & all; y; y = (y - 1) & all)
        if (y & 1U) answer = std::min(answer, std::max(best[y], best[all & ~y]));
    return answer;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::make(n, e);
}

Graph cycle_graph(int n) {
    auto g = path_graph(n);
    auto e = g.edges;
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph::make(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::make(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::make(leaves + 1, e);
}

Graph matching_graph(int edges) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < edges; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return Graph::make(2 * edges, e);
}

Graph binary_tree(int depth) {
    int n = (1 << (depth + 1)) - 1;
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
    return Graph::make(n, e);
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return p;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 0 || n > 6) throw ResourceError("isomorphism-free generation capped at 6 vertices");
    auto pairs = all_pairs(n);
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pair_index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
        pair_index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t canon = mask;
        for (const auto& perm : perms) {
            std::uint32_t img = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U) img |= std::uint32_t{1} << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
            canon = std::min(canon, img);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((canon >> i) & 1U) e.push_back(pairs[i]);
        out.push_back(Graph::make(n, e));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return std::pair(a.m(), a.edges) < std::pair(b.m(), b.edges); });
    return out;
}

std::vector<NamedGraph> small_corpus(int max_n) {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        int i = 0;
        for (auto& g : nonisomorphic_graphs(n)) out.push_back({"g" + std::to_string(n) + "_" + std::to_string(i++), std::move(g)});
    }
    return out;
}

std::vector<NamedGraph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
    std::mt19937_64 rng(seed);
    std::vector<NamedGraph> out;
    for (int i = 0; i < count; ++i) {
        int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        std::vector<std::pair<int, int>> e;
        for (auto pr : all_pairs(n))
            if (rng() & 1U) e.push_back(pr);
        out.push_back({"rand" + std::to_string(seed) + "_" + std::to_string(i), Graph::make(n, e)});
    }
    return out;
}

std::vector<NamedGraph> named_corpus() {
    std::vector<NamedGraph> out;
    for (int n = 2; n <= 6; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
    for (int n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    for (int n = 2; n <= 5; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
    for (int l = 1; l <= 4; ++l) out.push_back({"K1_" + std::to_string(l), star_graph(l)});
    for (int m = 1; m <= 3; ++m) out.push_back({"M" + std::to_string(m), matching_graph(m)});
    out.push_back({"BT1", binary_tree(1)});
    out.push_back({"BT2", binary_tree(2)});
    return out;
}

}  // namespace wdk
