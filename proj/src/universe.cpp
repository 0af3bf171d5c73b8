#include "widthdual/universe.hpp"

#include <algorithm>
#include <numeric>

namespace wdk {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0 || n > 31) throw InputError("vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loops are not supported");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw InputError("parallel edges are not supported");
    return g;
}

std::vector<Mask> Graph::adjacency() const {
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

std::vector<Mask> Graph::components(Mask removed) const {
    auto adj = adjacency();
    Mask left = full_mask(n) & ~removed;
    std::vector<Mask> out;
    while (left) {
        Mask comp = left & (~left + 1);
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (int v : members_of(frontier)) next |= adj[v];
            next &= left & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

namespace {

int graphic_rank(const Graph& g, Mask x) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int r = 0;
    for (int e : members_of(x)) {
        int a = root(g.edges[e].first), b = root(g.edges[e].second);
        if (a != b) {
            parent[a] = b;
            ++r;
        }
    }
    return r;
}

}  // namespace

int gf2_rank(std::vector<std::uint64_t> rows) {
    int r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t pivot = rows[i];
        if (!pivot) continue;
        ++r;
        std::uint64_t low = pivot & (~pivot + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= pivot;
    }
    return r;
}

Matroid Matroid::graphic(const Graph& g) {
    if (g.m() > kBipartitionCap) throw ResourceError("matroid ground set exceeds cap of 16 elements");
    Matroid m;
    m.m_ = g.m();
    m.graphic_ = true;
    m.graph_ = g;
    m.rank_.resize(std::size_t{1} << m.m_);
    for (Mask x = 0; x < m.rank_.size(); ++x) m.rank_[x] = graphic_rank(g, x);
    return m;
}

Matroid Matroid::linear_gf2(const std::vector<std::string>& rows) {
    if (rows.empty()) throw InputError("linear matroid needs at least one row");
    std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw InputError("matrix rows have different lengths");
        if (r.find_first_not_of("01") != std::string::npos) throw InputError("matrix rows must be bit strings");
    }
    if (cols > static_cast<std::size_t>(kBipartitionCap)) throw ResourceError("matroid ground set exceeds cap of 16 elements");
    if (rows.size() > 64) throw InputError("at most 64 rows supported");
    Matroid m;
    m.m_ = static_cast<int>(cols);
    m.rows_ = rows;
    std::vector<std::uint64_t> column(cols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[i][c] == '1') column[c] |= std::uint64_t{1} << i;
    m.rank_.resize(std::size_t{1} << m.m_);
    for (Mask x = 0; x < m.rank_.size(); ++x) {
        std::vector<std::uint64_t> pick;
        for (int c : members_of(x)) pick.push_back(column[c]);
        m.rank_[x] = gf2_rank(pick);
    }
    return m;
}

int vertex_order(Sep s) { return popcount(s.a & s.b); }

int matroid_rank(const Matroid& m, Mask x) {
    if (!is_subset(x, m.ground())) throw UsageError("subset outside matroid ground set");
    return m.rank(x);
}

int matroid_lambda(const Matroid& m, Mask x) {
    if (!is_subset(x, m.ground())) throw UsageError("subset outside matroid ground set");
    return m.rank(x) + m.rank(m.ground() & ~x) - m.rank();
}

int carving_order(const Graph& g, Mask x) {
    int c = 0;
    for (int e = 0; e < g.m(); ++e) {
        bool a = (x >> g.edges[e].first) & 1U, b = (x >> g.edges[e].second) & 1U;
        c += a != b ? 1 : 0;
    }
    return c;
}

int cut_rank(const Graph& g, Mask x) {
    auto adj = g.adjacency();
    Mask rest = full_mask(g.n) & ~x;
    std::vector<std::uint64_t> rows;
    for (int v : members_of(x & full_mask(g.n))) rows.push_back(adj[v] & rest);
    return gf2_rank(rows);
}

Universe Universe::vertex_separations(const Graph& g) {
    if (g.n > vertex_cap())
        throw ResourceError("graph has " + std::to_string(g.n) + " vertices, cap is " + std::to_string(vertex_cap()));
    Universe u;
    u.ground_ = g.n;
    u.kind_ = OrderKind::Vertex;
    u.adj_ = g.adjacency();
    u.graph_ = g;
    return u;
}

Universe Universe::bipartitions(const Graph& g, OrderKind kind) {
    if (kind != OrderKind::Carving && kind != OrderKind::CutRank) throw UsageError("vertex bipartitions need carving or cut-rank order");
    if (g.n > kBipartitionCap) throw ResourceError("bipartition universe capped at 16 ground elements");
    Universe u;
    u.ground_ = g.n;
    u.kind_ = kind;
    u.graph_ = g;
    u.side_order_.resize(std::size_t{1} << g.n);
    for (Mask x = 0; x < u.side_order_.size(); ++x)
        u.side_order_[x] = kind == OrderKind::Carving ? carving_order(g, x) : cut_rank(g, x);
    return u;
}

Universe Universe::bipartitions(const Matroid& m) {
    if (m.size() > kBipartitionCap) throw ResourceError("bipartition universe capped at 16 ground elements");
    Universe u;
    u.ground_ = m.size();
    u.kind_ = OrderKind::Matroid;
    u.side_order_.resize(std::size_t{1} << m.size());
    for (Mask x = 0; x < u.side_order_.size(); ++x) u.side_order_[x] = matroid_lambda(m, x);
    return u;
}

bool Universe::contains(Sep s) const {
    Mask f = full();
    if (!is_subset(s.a, f) || !is_subset(s.b, f) || (s.a | s.b) != f) return false;
    if (is_bipartition()) return (s.a & s.b) == 0;
    Mask only_a = s.a & ~s.b, only_b = s.b & ~s.a;
    for (int v : members_of(only_a))
        if (adj_[v] & only_b) return false;
    return true;
}

int Universe::order(Sep s) const {
    if (is_bipartition()) return side_order_[s.a];
    return vertex_order(s);
}

std::vector<Sep> Universe::enumerate(int k_cap) const {
    std::vector<Sep> out;
    if (is_bipartition()) {
        Mask f = full();
        for (Mask x = 0; x <= f; ++x) {
            if (side_order_[x] < k_cap) out.push_back({x, f & ~x});
            if (x == f) break;
        }
        return out;
    }
    return build_graph_universe(graph_, k_cap);
}

std::vector<Sep> build_graph_universe(const Graph& g, int k_cap) {
    if (g.n > vertex_cap())
        throw ResourceError("graph has " + std::to_string(g.n) + " vertices, cap is " + std::to_string(vertex_cap()));
    std::vector<Sep> out;
    Mask f = full_mask(g.n);
    for (Mask x = 0;; ++x) {
        if (popcount(x) < k_cap) {
            auto comps = g.components(x);
            std::size_t c = comps.size();
            for (std::size_t pick = 0; pick < (std::size_t{1} << c); ++pick) {
                Mask a = x, b = x;
                for (std::size_t i = 0; i < c; ++i) ((pick >> i) & 1U ? a : b) |= comps[i];
                out.push_back({a, b});
            }
        }
        if (x == f) break;
    }
    return out;
}

SeparationSystem restrict_Sk(const Universe& u, int k) {
    if (k <= 0) throw UsageError("k must be positive");
    return SeparationSystem(u.ground(), u.enumerate(k));
}

}  // namespace wdk
