#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "widthdual/core.hpp"
#include "widthdual/separation_system.hpp"

namespace wdk {

class StarFamily;

struct TreeEdge {
    int x = 0;
    int y = 0;
    Sep xy;  // label of (x,y)
    Sep yx;  // label of (y,x); the inverse of xy in any well-formed tree

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// A tree with labelled oriented edges. Nodes are 0..nodes-1.
class STree {
public:
    int nodes = 0;
    std::vector<TreeEdge> edges;

    static STree single_edge(Sep s);  // nodes 0,1 with label(0,1) = s
    int add_node() { return nodes++; }
    void add_edge(int x, int y, Sep xy) { edges.push_back({x, y, xy, xy.inverse()}); }

    // For each node, (neighbour, edge index).
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
    int edge_between(int x, int y) const;  // -1 if none
    Sep label(int x, int y) const;
    std::vector<Sep> incoming(int t) const;          // with repetitions, in adjacency order
    std::vector<Sep> oriented_star_at(int t) const;  // duplicates collapsed, sorted
    int degree(int t) const;
    std::vector<int> leaves() const;
    bool is_tree() const;
    std::vector<int> distances_from(int s) const;

    friend bool operator==(const STree&, const STree&) = default;
};

struct Report {
    std::vector<std::string> problems;
    std::vector<int> bad_nodes;
    bool ok() const { return problems.empty(); }
    std::string summary() const;
};

// Structure, condition (i), labels in S, and every node star in F.
Report validate_over(const STree& t, const SeparationSystem& s, const StarFamily& f);

bool is_irredundant(const STree& t);
// Removes branches until irredundant; the result contains x. remap maps old to new ids (-1 if removed).
STree prune(const STree& t, int x, std::vector<int>* remap = nullptr);

struct OrientedEdge {
    int x = 0;
    int y = 0;
};
bool natural_leq(const STree& t, OrientedEdge e, OrientedEdge f);

STree contract_nonantisymmetric(const STree& t);
// x a leaf with outgoing label r; r must be nontrivial and nondegenerate in s.
STree reduce_to_unique_leaf_occurrence(const STree& t, int x, const SeparationSystem& s, std::vector<int>* remap = nullptr);

// Canonical form: every edge stored with x < y, edges sorted.
STree canonical(const STree& t);
nlohmann::json stree_to_json(const STree& t);
STree stree_from_json(const nlohmann::json& j);
nlohmann::json sep_to_json(Sep s);
Sep sep_from_json(const nlohmann::json& j);

}  // namespace wdk
