#pragma once

#include <vector>

#include "json.hpp"

#include "widthdual/engine.hpp"
#include "widthdual/stree.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

struct TreeDecomposition {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Mask> bags;
};

struct BranchDecomposition {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_of;  // graph edge index -> tree leaf
};

struct MatroidTreeDecomposition {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> node_of;  // ground element -> tree node
};

// Plain trees: connected, acyclic, ids in range.
bool is_plain_tree(int nodes, const std::vector<std::pair<int, int>>& edges);

Report validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
int td_width(const TreeDecomposition& td);
int td_adhesion(const TreeDecomposition& td);  // a single bag counts its own size
TreeDecomposition stree_to_tree_decomposition(const STree& t, int ground);
STree tree_decomposition_to_stree(const Graph& g, const TreeDecomposition& td);

Report validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd);
int bd_width(const Graph& g, const BranchDecomposition& bd);
// Needs at least two graph edges; the tree must be over the tangle stars of S_k with k >= 3.
BranchDecomposition stree_to_branch_decomposition(const Graph& g, const STree& t);
STree branch_decomposition_to_stree(const Graph& g, const BranchDecomposition& bd);

// Brambles: connected, pairwise touching vertex sets.
Report validate_bramble(const Graph& g, const std::vector<Mask>& sets);
int bramble_order(const Graph& g, const std::vector<Mask>& sets);  // minimum hitting set, exact
std::vector<int> tangle_from_bramble(const Graph& g, const std::vector<Mask>& sets, const SeparationSystem& s);
std::vector<Mask> bramble_from_tangle(const Graph& g, const std::vector<int>& tangle, const SeparationSystem& s, int k);

Mask boundary(const Graph& g, Mask x);
Report validate_blockage(const Graph& g, const std::vector<Mask>& sets, const SeparationSystem& s, int k);
std::vector<int> tangle_from_blockage(const std::vector<Mask>& sets, const SeparationSystem& s);
std::vector<Mask> blockage_from_tangle(const std::vector<int>& tangle, const SeparationSystem& s);

int mtd_node_width(const Matroid& m, const MatroidTreeDecomposition& td, int node);
int mtd_width(const Matroid& m, const MatroidTreeDecomposition& td);
MatroidTreeDecomposition stree_to_matroid_decomposition(const Matroid& m, const STree& t);
STree matroid_decomposition_to_stree(const Matroid& m, const MatroidTreeDecomposition& td, int k);

nlohmann::json td_to_json(const TreeDecomposition& td);
nlohmann::json bd_to_json(const BranchDecomposition& bd);
nlohmann::json mtd_to_json(const MatroidTreeDecomposition& td);
nlohmann::json sets_to_json(const std::vector<Mask>& sets);

}  // namespace wdk
