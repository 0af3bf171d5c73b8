#pragma once

#include <bitset>
#include <optional>
#include <string>
#include <vector>

#include "widthdual/separation_system.hpp"
#include "widthdual/universe.hpp"

namespace wdk {

using Star = std::vector<int>;  // sorted ids of one system

// A set of stars over a fixed separation system, given by a membership predicate.
class StarFamily {
public:
    explicit StarFamily(const SeparationSystem& s) : sys_(&s) {}
    virtual ~StarFamily() = default;

    const SeparationSystem& system() const { return *sys_; }

    // sigma: sorted ids, no duplicates.
    virtual bool contains(const Star& sigma) const = 0;
    // A member all of whose elements are flagged in `in`; it contains `must` when must >= 0.
    virtual std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const = 0;
    virtual std::string name() const = 0;

    bool contains_singleton(int id) const { return contains(Star{id}); }

protected:
    bool valid_star(const Star& sigma) const;
    const SeparationSystem* sys_;
};

// Stars whose B-sides meet in fewer than `bound` elements, optionally of bounded size.
class IntersectionFamily final : public StarFamily {
public:
    IntersectionFamily(const SeparationSystem& s, int bound, int max_size = 0);
    bool contains(const Star& sigma) const override;
    std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const override;
    std::string name() const override;
    int bound() const { return bound_; }

private:
    int bound_;
    int max_size_;  // 0 = unbounded
};

constexpr int kMaxCoverEdges = 512;

// Stars of at most three elements whose small sides cover the graph (graph mode) or the ground set.
class TangleFamily final : public StarFamily {
public:
    TangleFamily(const SeparationSystem& s, const Graph& g);  // covers vertices and edges via G[A_i]
    explicit TangleFamily(const SeparationSystem& s);          // A_1 ∪ A_2 ∪ A_3 = ground
    bool contains(const Star& sigma) const override;
    std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const override;
    std::string name() const override { return graph_mode_ ? "tangle-graph" : "tangle-ground"; }

    // Covering test for any multiset of at most three elements, star or not.
    bool covers(const std::vector<int>& ids) const;

private:
    struct Cover {
        Mask verts = 0;
        std::bitset<kMaxCoverEdges> edges;
    };
    Cover cover_of(int id) const;
    bool complete(const Cover& c) const;

    bool graph_mode_;
    Graph graph_;
    std::vector<Cover> covers_;
    Cover goal_;
};

// Matroid stars with sum of r(B_i) minus (size-1) r(M) below k.
class MatroidFamily final : public StarFamily {
public:
    MatroidFamily(const SeparationSystem& s, const Matroid& m, int k);
    bool contains(const Star& sigma) const override;
    std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const override;
    std::string name() const override { return "matroid"; }
    int star_order(const Star& sigma) const;

private:
    void check_member(const Star& sigma) const;
    const Matroid* m_;
    int k_;
};

// A finite list of stars.
class ExplicitFamily final : public StarFamily {
public:
    ExplicitFamily(const SeparationSystem& s, std::vector<Star> members);
    bool contains(const Star& sigma) const override;
    std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const override;
    std::string name() const override { return "explicit"; }
    const std::vector<Star>& members() const { return members_; }

private:
    std::vector<Star> members_;
};

// base ∪ {{inverse(t)} : extra[t]}: the family after forcing the flagged elements.
class ExtendedFamily final : public StarFamily {
public:
    ExtendedFamily(const StarFamily& base, std::vector<char> extra);
    bool contains(const Star& sigma) const override;
    std::optional<Star> find_within(const std::vector<char>& in, int must = -1) const override;
    std::string name() const override { return base_->name() + "+forced"; }

private:
    const StarFamily* base_;
    std::vector<char> extra_;
};

}  // namespace wdk
