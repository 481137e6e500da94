#include "doctest.h"
#include "lozenge/count.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/regions.hpp"
#include "support.hpp"

#include <sstream>

using namespace lozenge;

namespace {

Region pair_region() { return Region({TriCell(0, 0), TriCell(0, 1)}); }

}  // namespace

TEST_CASE("cell orientation and adjacency")
{
    CHECK(TriCell(0, 1).up());
    CHECK_FALSE(TriCell(0, 0).up());
    CHECK(TriCell(1, 0).up());
    CHECK(TriCell(-1, -2).up());
    // An up cell's third neighbour is below it, a down cell's is above.
    auto up = neighbours(TriCell(0, 1));
    CHECK(up[2] == TriCell(-1, 1));
    auto down = neighbours(TriCell(0, 0));
    CHECK(down[2] == TriCell(1, 0));
    CHECK(adjacent(TriCell(0, 0), TriCell(0, 1)));
    CHECK_FALSE(adjacent(TriCell(0, 0), TriCell(0, 2)));
    CHECK_THROWS_AS(LozengePos(TriCell(0, 0), TriCell(0, 2)), std::invalid_argument);
    CHECK(LozengePos(TriCell(0, 1), TriCell(0, 0)) == LozengePos(TriCell(0, 0), TriCell(0, 1)));
}

TEST_CASE("region basics")
{
    Region r({TriCell(0, 1), TriCell(0, 0), TriCell(0, 1)});
    CHECK(r.size() == 2);
    CHECK(r.contains(TriCell(0, 0)));
    CHECK(r.weight(LozengePos(TriCell(0, 0), TriCell(0, 1))) == 1);
    Region h({TriCell(0, 0), TriCell(0, 1)}, {LozengePos(TriCell(0, 0), TriCell(0, 1))});
    CHECK(h.weight(LozengePos(TriCell(0, 0), TriCell(0, 1))) == make_rational(1, 2));
    CHECK_THROWS(Region({TriCell(0, 0)}, {LozengePos(TriCell(0, 0), TriCell(0, 1))}));
}

TEST_CASE("balance")
{
    CHECK(balance(Region{}) == 0);
    CHECK(balance(hexagon({1, 1, 1})) == 1);
    CHECK(balance(hexagon({2, 3, 0})) == 0);
    for (int k = 0; k < 4; ++k)
        CHECK(balance(hexagon({3, 2, k})) == k);
}

TEST_CASE("forced lozenge elimination")
{
    auto e = eliminate_forced(Region{});
    CHECK(e.region.empty());
    CHECK(e.factor == 1);
    CHECK_FALSE(e.untileable);

    e = eliminate_forced(pair_region());
    CHECK(e.region.empty());
    CHECK(e.factor == 1);
    CHECK_FALSE(e.untileable);

    CHECK(eliminate_forced(Region({TriCell(0, 0)})).untileable);

    Region half({TriCell(0, 0), TriCell(0, 1)}, {LozengePos(TriCell(0, 0), TriCell(0, 1))});
    CHECK(eliminate_forced(half).factor == make_rational(1, 2));

    // The count is unchanged by elimination.
    for (const Region& r : {hexagon({2, 2, 1}), r_region(IndexList{1, 3}, IndexList{2}, 1),
                            r_bar_region(IndexList{2}, IndexList{1, 3}, 2)}) {
        auto f = eliminate_forced(r);
        CHECK(count_oracle(r) == f.factor * count_oracle(f.region));
    }
}

TEST_CASE("congruence")
{
    Region r = hexagon({2, 3, 1});
    CHECK(congruent(r, r));
    CHECK(congruent(r, translate(r, 4, 2)));
    CHECK(congruent(r, translate(r, 1, 3)));
    CHECK_THROWS(translate(r, 1, 0));
    CHECK(congruent(r, rotate180(r)));
    CHECK(congruent(r, reflect(r, 5)));
    CHECK_FALSE(congruent(hexagon({2, 2, 0}), hexagon({2, 2, 1})));

    Region a = r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2);
    REQUIRE_FALSE(a.half_weighted().empty());
    std::vector<LozengePos> fewer(a.half_weighted().begin() + 1, a.half_weighted().end());
    CHECK_FALSE(congruent(a, Region(a.cells(), fewer)));
    CHECK(congruent(a, translate(a, 2, -4)));
}

TEST_CASE("symmetry axis and cut")
{
    CHECK_FALSE(symmetry_axis(Region{}).has_value());
    auto axis = symmetry_axis(hexagon({2, 2, 0}));
    REQUIRE(axis.has_value());
    CHECK(*axis == 2);
    // Reflection keeps orientation, so a lone up-down pair has no axis.
    CHECK_FALSE(symmetry_axis(pair_region()).has_value());
    CHECK_THROWS_AS(symmetry_axis_cut(pair_region()), CutError);
    CHECK(symmetry_axis(hexagon({2, 3, 1})).has_value());

    auto empty = symmetry_axis_cut(Region{});
    CHECK(empty.width == 0);
    CHECK(empty.plus.empty());
    CHECK(empty.minus.empty());

    // Unit hexagon: halves are two triangles each side, one half-weighted lozenge.
    auto unit = symmetry_axis_cut(hexagon({1, 1, 0}));
    CHECK(unit.width == 1);
    CHECK(count_oracle(hexagon({1, 1, 0})) ==
          pow2(unit.width) * count_oracle(unit.plus) * count_oracle(unit.minus));
}

TEST_CASE("vertebra labels")
{
    auto v = vertebra_labels(Region{}, 0, 0);
    CHECK(v.below.empty());
    CHECK(v.above.empty());

    // Every rhombic vertebra of H(5,5,3) is present: strips 1..13 give labels 1..7.
    auto h = vertebra_labels(hexagon({5, 5, 3}), 0);
    CHECK(h.below.empty());
    CHECK(h.above == std::vector<int>{1, 2, 3, 4, 5, 6, 7});

    auto w = windowed_hexagon({5, 6, 6}, {WindowSpec::parse("D:4@5"), WindowSpec::parse("D:2@11")});
    auto labels = vertebra_labels(w.with_windows, 0);
    CHECK(labels.above == std::vector<int>{1, 2, 5, 7, 8, 9});
    CHECK(labels.below.empty());
}

TEST_CASE("boundary walks and rasterization")
{
    BoundaryWalk w(LatticePoint{0, 0});
    w.step(Step::E);
    w.step(Step::NW);
    w.step(Step::SW);
    CHECK(w.closed());
    CHECK(w.count(Step::E) == 1);
    auto cells = rasterize(w.points());
    CHECK(cells.size() == 1);

    BoundaryWalk m(LatticePoint{0, 0});
    m.move_to_x2(6);
    CHECK(m.current() == LatticePoint{6, 0});
    m.step(Step::NE);
    CHECK_THROWS(m.move_to_x2(8));
}

TEST_CASE("hexagon boundary matches the region")
{
    const HexParams p{3, 2, 2};
    auto walk = hexagon_boundary(p);
    CHECK(walk.closed());
    CHECK(walk.count(Step::E) == p.a + p.k);
    CHECK(walk.count(Step::W) == p.a);
    CHECK(walk.count(Step::NE) == p.b);
    CHECK(walk.count(Step::SE) == p.b);
    CHECK(walk.count(Step::NW) == p.b + p.k);
    CHECK(walk.count(Step::SW) == p.b + p.k);
    Region r(rasterize(walk.points()));
    CHECK(r == hexagon(p));
}

TEST_CASE("TRIREGION round trip")
{
    const Region h = hexagon({5, 5, 3});
    const std::string text = write_triregion(h);
    CHECK(read_triregion(text) == h);
    CHECK(write_triregion(read_triregion(text)) == text);

    const Region r = r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2);
    CHECK(read_triregion(write_triregion(r)) == r);

    CHECK(write_triregion(Region{}) == "TRIREGION 1\n");
    CHECK(read_triregion(std::string("TRIREGION 1\n")).empty());

    try {
        read_triregion(std::string("NOTREGION\nC 0 0 D\n"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
    try {
        read_triregion(std::string("TRIREGION 1\nC 0 0 U\n"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}
