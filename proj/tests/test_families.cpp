#include "doctest.h"
#include "support.hpp"

#include "widthdual/engine.hpp"
#include "widthdual/family.hpp"
#include "widthdual/oracle.hpp"
#include "widthdual/solve.hpp"
#include "widthdual/translate.hpp"

using namespace wdk;

namespace {

Mask m(std::initializer_list<int> v) { return mask_from(std::vector<int>(v)); }

SeparationSystem system_of(const Graph& g, int k) {
    return SeparationSystem(g.n, Universe::vertex_separations(g).enumerate(k));
}

Side engine_side(const Graph& g, Mode mode, int k) {
    return solve(build_problem(Instance{g, std::nullopt, {}}, mode, k)).witness.side;
}

}  // namespace

TEST_CASE("graph tangle family") {
    auto one = path_graph(2);
    CHECK(engine_side(one, Mode::Branch, 2) == Side::Tangle);
    auto none = Graph::make(3, {});
    CHECK(engine_side(none, Mode::Branch, 2) == Side::Tree);

    auto s = system_of(path_graph(3), 3);
    TangleFamily f(s, path_graph(3));
    int whole = s.find({s.full(), 0});
    CHECK(f.contains({whole}));
    CHECK(f.covers({whole, whole, whole}));
    auto forced = compute_forced(f);
    for (int i = 0; i < s.size(); ++i)
        if (s.classify(i).small) CHECK(forced[i]);
    int a = s.find({m({0, 1}), m({1, 2})}), b = s.find({m({1, 2}), m({0, 1})});
    CHECK(f.contains(sorted_unique({a, b})));
    CHECK_FALSE(f.contains({a}));
}

TEST_CASE("star-only tangle family: consistent orientations avoiding stars avoid all covering triples") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            for (int k = 1; k <= 3; ++k) {
                auto s = system_of(g, k);
                if (s.nondegenerate_count() > 16) continue;
                TangleFamily f(s, g);
                for (const auto& o : enumerate_consistent_orientations(s)) {
                    if (!is_avoided(o, f)) continue;
                    for (int x : o)
                        for (int y : o)
                            for (int z : o) CHECK_FALSE(f.covers({x, y, z}));
                }
            }
}

TEST_CASE("intersection families") {
    auto p3 = path_graph(3);
    auto s = system_of(p3, 2);
    IntersectionFamily f(s, 2);
    for (int i = 0; i < s.size(); ++i) CHECK(f.contains({i}) == (popcount(s.payload(i).b) < 2));
    auto s3 = system_of(p3, 3);
    IntersectionFamily f3(s3, 2);
    int a = s3.find({m({0, 1}), m({1, 2})}), b = s3.find({m({1, 2}), m({0, 1})});
    CHECK(f3.contains(sorted_unique({a, b})));
    CHECK_THROWS_AS(build_problem(Instance{p3, std::nullopt, {}}, Mode::Adhesion, 3, 2), UsageError);
}

TEST_CASE("size-bounded family keeps singletons and pairs only") {
    auto k2 = path_graph(2);
    auto s = system_of(k2, 2);
    IntersectionFamily full(s, 2), paths(s, 2, 2);
    for (int i = 0; i < s.size(); ++i) CHECK(full.contains({i}) == paths.contains({i}));
    int pairs = 0;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) {
            Sep x = s.payload(i), y = s.payload(j);
            bool member = sep_leq(x, y.inverse()) && sep_leq(y, x.inverse()) && popcount(x.b & y.b) < 2;
            CHECK(paths.contains({i, j}) == member);
            pairs += member;
        }
    CHECK(pairs == 5);
    CHECK_FALSE(paths.contains({s.find({m({0}), m({0, 1})}), s.find({m({1}), m({0, 1})})}));

    auto p4 = path_graph(4);
    auto s4 = system_of(p4, 3);
    IntersectionFamily f4(s4, 3), p4f(s4, 3, 2);
    Star triple = sorted_unique({s4.find({m({0}), m({0, 1, 2, 3})}), s4.find({m({3}), m({0, 1, 2, 3})}),
                                 s4.find({m({1}), m({0, 1, 2, 3})})});
    CHECK(f4.contains(triple) == false);
    CHECK_FALSE(p4f.contains(triple));
}

TEST_CASE("matroid family") {
    auto k3 = complete_graph(3);
    auto mk3 = Matroid::graphic(k3);
    auto u = Universe::bipartitions(mk3);
    for (int k = 1; k <= 4; ++k) {
        SeparationSystem s(u.ground(), u.enumerate(k));
        MatroidFamily f(s, mk3, k);
        for (int i = 0; i < s.size(); ++i) CHECK(f.contains({i}) == (mk3.rank(s.payload(i).b) < k));
        Star ends = sorted_unique({s.find({0, mk3.ground()}), s.find({mk3.ground(), 0})});
        CHECK(f.contains(ends));
        int a = s.find({0b001, 0b110}), b = s.find({0b010, 0b101});
        if (a >= 0 && b >= 0) {
            Star pair = sorted_unique({a, b});
            CHECK(f.star_order(pair) == 2);
            CHECK(f.contains(pair) == (k >= 3));
        }
    }
}

TEST_CASE("branch decompositions from trees") {
    for (int leaves = 2; leaves <= 4; ++leaves) {
        auto g = star_graph(leaves);
        auto p = build_problem(Instance{g, std::nullopt, {}}, Mode::Branch, 3);
        auto w = solve(p).witness;
        REQUIRE(w.side == Side::Tree);
        auto bd = stree_to_branch_decomposition(g, w.tree);
        CHECK(validate_branch_decomposition(g, bd).ok());
        CHECK(bd_width(g, bd) == 1);
    }
    auto p4 = path_graph(4);
    auto w = solve(build_problem(Instance{p4, std::nullopt, {}}, Mode::Branch, 3)).witness;
    REQUIRE(w.side == Side::Tree);
    CHECK(bd_width(p4, stree_to_branch_decomposition(p4, w.tree)) == 2);

    auto k2 = path_graph(2);
    BranchDecomposition single{1, {}, {0}};
    auto t = branch_decomposition_to_stree(k2, single);
    CHECK(t.nodes == 2);
    CHECK(t.label(0, 1) == Sep{0b11, 0b11});

    auto matching = matching_graph(2);
    BranchDecomposition two{2, {{0, 1}}, {0, 1}};
    CHECK(validate_branch_decomposition(matching, two).ok());
    CHECK(bd_width(matching, two) == 0);
}

TEST_CASE("tree decompositions") {
    auto k2 = path_graph(2);
    TreeDecomposition one{1, {}, {0b11}};
    auto t = tree_decomposition_to_stree(k2, one);
    CHECK(t.nodes == 2);
    auto s3 = system_of(k2, 3);
    CHECK(validate_over(t, s3, IntersectionFamily(s3, 3)).ok());

    auto p3 = path_graph(3);
    TreeDecomposition bags{2, {{0, 1}}, {m({0, 1}), m({1, 2})}};
    auto pt = tree_decomposition_to_stree(p3, bags);
    auto s = system_of(p3, 3);
    CHECK(validate_over(pt, s, IntersectionFamily(s, 3)).ok());
    auto back = stree_to_tree_decomposition(pt, 3);
    CHECK(validate_tree_decomposition(p3, back).ok());
    CHECK(td_width(back) == 1);

    auto k3 = complete_graph(3);
    TreeDecomposition whole{1, {}, {0b111}};
    CHECK(td_width(whole) == 2);
    CHECK(td_adhesion(whole) == 3);
    TreeDecomposition bad{2, {{0, 1}}, {m({0, 1}), m({2})}};
    CHECK_FALSE(validate_tree_decomposition(k3, bad).ok());
}

TEST_CASE("brambles") {
    auto k3 = complete_graph(3);
    std::vector<Mask> singles{m({0}), m({1}), m({2})};
    CHECK(validate_bramble(k3, singles).ok());
    CHECK(bramble_order(k3, singles) == 3);
    auto s = system_of(k3, 3);
    IntersectionFamily f(s, 3);
    auto tangle = tangle_from_bramble(k3, singles, s);
    Witness w{Side::Tangle, {}, {}};
    for (int x : tangle) w.oriented.push_back(s.payload(x));
    CHECK(verify_witness(w, f).ok());
    auto bramble = bramble_from_tangle(k3, tangle, s, 3);
    CHECK(validate_bramble(k3, bramble).ok());
    CHECK(bramble_order(k3, bramble) >= 3);
    CHECK(tangle_from_bramble(k3, bramble, s) == tangle);

    CHECK(engine_side(path_graph(3), Mode::Tree, 4) == Side::Tree);
    CHECK_FALSE(validate_bramble(path_graph(4), {m({0}), m({3})}).ok());
}

TEST_CASE("blockages") {
    auto k2 = path_graph(2);
    CHECK(pathwidth_exact(k2) == 1);
    auto p = build_problem(Instance{k2, std::nullopt, {}}, Mode::Path, 2);
    auto w = solve(p).witness;
    REQUIRE(w.side == Side::Tangle);
    auto ids = ids_of(*p.system, w.oriented);
    auto blockage = blockage_from_tangle(ids, *p.system);
    CHECK(validate_blockage(k2, blockage, *p.system, 2).ok());
    for (Mask x = 0; x <= 3; ++x)
        if (popcount(x) < 2) CHECK(std::count(blockage.begin(), blockage.end(), x) == 1);
    CHECK(tangle_from_blockage(blockage, *p.system) == ids);
    std::vector<Mask> broken = blockage;
    broken.pop_back();
    CHECK_FALSE(validate_blockage(k2, broken, *p.system, 2).ok());
}

TEST_CASE("matroid tree decompositions") {
    auto k3 = complete_graph(3);
    auto mk3 = Matroid::graphic(k3);
    MatroidTreeDecomposition single{1, {}, {0, 0, 0}};
    CHECK(mtd_width(mk3, single) == 2);
    auto t = matroid_decomposition_to_stree(mk3, single, 3);
    CHECK(t.nodes == 2);
    CHECK(t.label(0, 1) == Sep{0, mk3.ground()});

    auto p = build_problem(Instance{std::nullopt, mk3, {}}, Mode::MatroidTree, 3);
    auto w = solve(p).witness;
    REQUIRE(w.side == Side::Tree);
    auto td = stree_to_matroid_decomposition(mk3, w.tree);
    CHECK(mtd_width(mk3, td) == 2);
    CHECK(engine_side(k3, Mode::MatroidTree, 2) == Side::Tangle);
}
