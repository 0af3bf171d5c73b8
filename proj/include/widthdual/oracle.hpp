#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "widthdual/family.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

constexpr int kOrientationCap = 24;

// All consistent orientations by plain enumeration of 2^m choices (m non-degenerate separations, m <= 24).
std::vector<std::vector<int>> enumerate_consistent_orientations(const SeparationSystem& s);

// Backtracking search for consistent F-avoiding orientations. Visitor returns false to stop.
void for_each_tangle(const StarFamily& f, const std::function<bool(const std::vector<int>&)>& visit);
std::optional<std::vector<int>> brute_force_tangle(const StarFamily& f);

int treewidth_exact(const Graph& g);
int pathwidth_exact(const Graph& g);
int branchwidth_exact(const Graph& g);  // at most 12 edges

struct NamedGraph {
    std::string name;
    Graph graph;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // centre 0
Graph matching_graph(int edges);
Graph binary_tree(int depth);

// One representative per isomorphism class, n vertices (n <= 6).
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<NamedGraph> small_corpus(int max_n);
std::vector<NamedGraph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n);
std::vector<NamedGraph> named_corpus();

}  // namespace wdk
