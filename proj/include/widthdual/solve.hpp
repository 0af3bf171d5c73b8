#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "widthdual/engine.hpp"
#include "widthdual/family.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

enum class Mode { Branch, Tree, Path, Adhesion, Carving, Rank, MatroidTree, Custom };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& name);  // UsageError on unknown names
bool uses_matroid(Mode m);

struct Instance {
    std::optional<Graph> graph;
    std::optional<Matroid> matroid;
    std::vector<std::vector<Sep>> custom_stars;
};

// Everything one engine run needs; pointers stay valid while the Problem lives.
struct Problem {
    Mode mode = Mode::Tree;
    int k = 1;
    int w = 0;  // adhesion mode only
    std::unique_ptr<Graph> graph;
    std::unique_ptr<Matroid> matroid;
    std::unique_ptr<Universe> universe;
    std::unique_ptr<SeparationSystem> system;
    std::unique_ptr<StarFamily> family;
};

// w = 0 in adhesion mode means w = k.
Problem build_problem(const Instance& in, Mode mode, int k, int w = 0);

struct Solution {
    Witness witness;
    EngineStats stats;
    bool weak_fallback = false;
};

// Custom families that are not closed under shifting fall back to weak duality.
Solution solve(const Problem& p);
std::string width_param(const Problem& p, Side side);
// Classical counterpart of the witness (decomposition, bramble, blockage), or null.
nlohmann::json classical_object(const Problem& p, const Witness& w);

// Branch-width below 3 read off the component structure.
int small_branchwidth(const Graph& g);
struct BranchSummary {
    int branch_width = 0;
    int tangle_number = 0;
};
BranchSummary branch_summary(const Graph& g);

struct DichotomyReport {
    Side side = Side::Tree;
    bool verified = false;
    std::vector<std::string> problems;
    std::uint64_t engine_calls = 0;
};

// Solve, validate the witness, check the absent side against brute force, round-trip translations.
DichotomyReport verify_dichotomy(const Problem& p);

}  // namespace wdk
