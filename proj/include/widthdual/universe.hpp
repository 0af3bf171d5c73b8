#pragma once

#include <string>
#include <utility>
#include <vector>

#include "widthdual/core.hpp"
#include "widthdual/separation_system.hpp"

namespace wdk {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

    static Graph make(int n, std::vector<std::pair<int, int>> edges);
    std::vector<Mask> adjacency() const;
    Mask edge_mask(int e) const { return (Mask{1} << edges[e].first) | (Mask{1} << edges[e].second); }
    int m() const { return static_cast<int>(edges.size()); }
    // Vertex sets of the components of G - removed.
    std::vector<Mask> components(Mask removed = 0) const;
    bool connected() const;
};

class Matroid {
public:
    static Matroid graphic(const Graph& g);
    static Matroid linear_gf2(const std::vector<std::string>& rows);

    int size() const { return m_; }
    Mask ground() const { return full_mask(m_); }
    int rank(Mask x) const { return rank_[x]; }
    int rank() const { return rank_[ground()]; }
    bool is_graphic() const { return graphic_; }
    const Graph& graph() const { return graph_; }
    const std::vector<std::string>& rows() const { return rows_; }

private:
    int m_ = 0;
    bool graphic_ = false;
    Graph graph_;
    std::vector<std::string> rows_;
    std::vector<int> rank_;
};

enum class OrderKind { Vertex, Matroid, Carving, CutRank };

int vertex_order(Sep s);
int matroid_rank(const Matroid& m, Mask x);
int matroid_lambda(const Matroid& m, Mask x);
int carving_order(const Graph& g, Mask x);
int cut_rank(const Graph& g, Mask x);
int gf2_rank(std::vector<std::uint64_t> rows);

// A universe of separations of a ground set, given implicitly by a membership test.
// Joins and meets use the set formulas; the universe is closed under both.
class Universe {
public:
    static Universe vertex_separations(const Graph& g);
    static Universe bipartitions(const Graph& g, OrderKind kind);  // ground set V; carving or cut-rank
    static Universe bipartitions(const Matroid& m);                // ground set E; connectivity

    int ground() const { return ground_; }
    Mask full() const { return full_mask(ground_); }
    OrderKind kind() const { return kind_; }
    bool is_bipartition() const { return kind_ != OrderKind::Vertex; }

    bool contains(Sep s) const;
    int order(Sep s) const;
    Sep join(Sep r, Sep s) const { return sep_join(r, s); }
    Sep meet(Sep r, Sep s) const { return sep_meet(r, s); }

    // All elements of order < k_cap.
    std::vector<Sep> enumerate(int k_cap) const;

private:
    int ground_ = 0;
    OrderKind kind_ = OrderKind::Vertex;
    std::vector<Mask> adj_;
    std::vector<int> side_order_;  // bipartitions: order indexed by the A side
    Graph graph_;
};

std::vector<Sep> build_graph_universe(const Graph& g, int k_cap);
SeparationSystem restrict_Sk(const Universe& u, int k);

}  // namespace wdk
