#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "widthdual/core.hpp"

namespace wdk {

// Handle to an element of a specific system; used where mixing systems must be caught.
struct SepRef {
    std::uint64_t system = 0;
    int id = -1;
};

struct Classification {
    bool degenerate = false;
    bool small = false;
    bool trivial = false;
    bool co_trivial = false;
    int witness = -1;  // canonical representative of a separation witnessing triviality

    bool plain() const { return !degenerate && !small && !trivial && !co_trivial; }
};

// A finite poset with order-reversing involution whose elements are set separations.
// Elements are sorted by payload, so index order is the canonical order and the
// canonical key of a separation is the smaller index of its two orientations.
class SeparationSystem {
public:
    SeparationSystem(int ground, std::vector<Sep> payloads);

    int size() const { return static_cast<int>(elems_.size()); }
    int ground() const { return ground_; }
    Mask full() const { return full_mask(ground_); }
    std::uint64_t id() const { return uid_; }

    const Sep& payload(int i) const { return elems_[i]; }
    const std::vector<Sep>& payloads() const { return elems_; }
    int inverse(int i) const { return inv_[i]; }
    bool degenerate(int i) const { return inv_[i] == i; }
    int underlying(int i) const { return i < inv_[i] ? i : inv_[i]; }
    int find(Sep s) const;

    bool leq(int i, int j) const;
    bool lt(int i, int j) const { return i != j && leq(i, j); }
    bool leq(SepRef r, SepRef s) const;
    SepRef ref(int i) const { return {uid_, i}; }

    // Canonical representatives, one per unordered separation, ascending.
    const std::vector<int>& separations() const { return reps_; }
    int nondegenerate_count() const;

    Classification classify(int i) const;
    bool trivial(int i) const;

private:
    void compute_trivial() const;

    int ground_;
    std::uint64_t uid_;
    std::vector<Sep> elems_;
    std::vector<int> inv_;
    std::vector<int> reps_;
    std::unordered_map<Sep, int, SepHash> index_;
    std::vector<std::uint64_t> dense_;  // row-major bit matrix of leq, empty above the size limit
    std::size_t words_ = 0;
    mutable std::once_flag trivial_once_;
    mutable std::vector<int> trivial_witness_;  // -1 if not trivial
};

constexpr int kDenseLeqLimit = 20000;

bool nested(const SeparationSystem& s, int r, int t);
bool points_toward(const SeparationSystem& s, int r, int t);
bool is_star(const SeparationSystem& s, const std::vector<int>& members);
bool is_consistent(const SeparationSystem& s, const std::vector<int>& set);
bool is_antisymmetric(const SeparationSystem& s, const std::vector<int>& set);
// Exactly one orientation of every separation (degenerate ones included).
bool is_orientation(const SeparationSystem& s, const std::vector<int>& set);

// First pair (r, t) with r < t, inverse(r) and t in the set, r and t distinct separations.
std::optional<std::pair<int, int>> consistency_violation(const SeparationSystem& s, const std::vector<int>& set);

std::vector<int> sorted_unique(std::vector<int> v);

}  // namespace wdk
