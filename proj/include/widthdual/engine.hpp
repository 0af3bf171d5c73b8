#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "widthdual/family.hpp"
#include "widthdual/stree.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

enum class Side { Tree, Tangle, Orientation };
const char* side_name(Side s);

// One of: an S-tree over F, an F-tangle, or (weak duality only) an F-avoiding orientation.
struct Witness {
    Side side = Side::Tree;
    STree tree;
    std::vector<Sep> oriented;  // sorted payloads

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct EngineStats {
    std::uint64_t calls = 0;
    std::uint64_t memo_hits = 0;
};

// O⁻ as flags: s is flagged iff {inverse(s)} is a member.
std::vector<char> compute_forced(const StarFamily& f);
bool is_avoided(const std::vector<int>& set, const StarFamily& f);
// Every trivial element is forced or degenerate.
bool is_standard(const StarFamily& f);

// Image of s under the shift toward s0 along r. Undefined outside {s : s >= r or inverse(s) >= r} minus inverse(r).
Sep shift_map(Sep r, Sep s0, Sep s);
bool is_linked(const SeparationSystem& s, int s0, int r);
// Minimum-order element between r and r2 (ties by id).
int find_link(const SeparationSystem& s, const Universe& u, int r, int r2);

// Relabels every edge through the shift; x is the leaf whose outgoing label is r.
STree shift_stree(const STree& t, int x, Sep r, Sep s0, const SeparationSystem& s);
// x1 carries {inverse(s0)} in t1, x2 carries {s0} in t2; both leaves are replaced by one edge.
STree merge_at_leaves(const STree& t1, int x1, const STree& t2, int x2, Sep s0);

Witness weak_duality(const StarFamily& f, EngineStats* stats = nullptr);
Witness strong_duality(const StarFamily& f, const Universe& u, EngineStats* stats = nullptr);

// Validates either side: an S-tree over f, or a consistent f-avoiding orientation.
Report verify_witness(const Witness& w, const StarFamily& f);
std::vector<int> ids_of(const SeparationSystem& s, const std::vector<Sep>& seps);  // -1 for unknown

}  // namespace wdk
