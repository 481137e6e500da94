#include "doctest.h"
#include "lozenge/count.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/verify.hpp"

using namespace lozenge;

namespace {

std::vector<WindowSpec> windows(std::initializer_list<const char*> texts)
{
    std::vector<WindowSpec> out;
    for (const char* t : texts)
        out.push_back(WindowSpec::parse(t));
    return out;
}

// Unit triangles inside a hexagon with sides s1..s6: a big triangle of
// side s1+s2+s3 minus three corner triangles.
long hexagon_area(long s1, long s2, long s3, long s5) { return (s1 + s2 + s3) * (s1 + s2 + s3) - s1 * s1 - s3 * s3 - s5 * s5; }

}  // namespace

TEST_CASE("hexagon construction")
{
    CHECK(hexagon({1, 1, 0}).size() == 6);
    CHECK(hexagon({5, 5, 3}).size() == 249);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int k = 0; k <= 3; ++k)
                CHECK(static_cast<long>(hexagon({a, b, k}).size()) == hexagon_area(a + k, b, b + k, b + k));
    CHECK(HexParams{5, 5, 3}.axis() == 8);
    CHECK(HexParams{5, 5, 3}.strips() == 13);
}

TEST_CASE("box hexagon")
{
    CHECK(box_hexagon(1, 1, 1).size() == 6);
    CHECK(balance(box_hexagon(2, 3, 4)) == 0);
    CHECK(box_hexagon(2, 2, 2).size() == 24);
}

TEST_CASE("window specs")
{
    auto w = WindowSpec::parse("D:2@5");
    CHECK(w.kind == WindowKind::Delta);
    CHECK(w.size == 2);
    CHECK(w.base_row == 5);
    CHECK(w.min_row() == 5);
    CHECK(w.max_row() == 6);
    CHECK(w.str() == "D:2@5");
    auto n = WindowSpec::parse("N:1@8");
    CHECK(n.min_row() == 7);
    CHECK(n.max_row() == 7);
    CHECK_THROWS(WindowSpec::parse("X:1@2"));
    CHECK_THROWS(WindowSpec::parse("D:0@2"));
    CHECK_THROWS(WindowSpec::parse("D2@2"));
}

TEST_CASE("windowed hexagons and their labels")
{
    auto a = windowed_hexagon({5, 6, 6}, windows({"D:4@5", "D:2@11"}));
    CHECK(a.family == HexFamily::H);
    CHECK(a.l == IndexList{1, 2, 5, 7, 8, 9});
    CHECK(a.q.empty());
    CHECK(a.exponent() == 6);

    auto b = windowed_hexagon({7, 8, 3}, windows({"D:5@9", "D:2@16", "N:2@8", "N:2@4"}));
    CHECK(b.family == HexFamily::Hlq);
    CHECK(b.l == IndexList{2, 4});
    CHECK(b.q == IndexList{3, 5});

    auto c = windowed_hexagon({8, 8, 1}, windows({"N:1@8", "N:2@5", "D:4@11"}));
    CHECK(c.family == HexFamily::HbarLq);
    CHECK(c.l == IndexList{1, 3, 4});
    CHECK(c.q == IndexList{1, 4});

    auto plain = windowed_hexagon({1, 1, 0}, {});
    CHECK(plain.family == HexFamily::H);
    CHECK(plain.l == IndexList{1});
}

TEST_CASE("window placement errors")
{
    // Off the axis parity.
    CHECK(check_windows({5, 6, 6}, windows({"D:4@6"})).has_value());
    // Outside the hexagon.
    CHECK(check_windows({2, 2, 0}, windows({"D:2@3"})).has_value());
    // Overlapping windows.
    CHECK(check_windows({5, 6, 6}, windows({"D:4@5", "D:2@7"})).has_value());
    // Odd windows need a matching k.
    CHECK(check_windows({2, 2, 1}, {}).has_value());
    CHECK_THROWS_AS(windowed_hexagon({2, 2, 0}, windows({"D:2@3"})), RegionError);
    CHECK_FALSE(check_windows({5, 6, 6}, windows({"D:4@5", "D:2@11"})).has_value());
}

TEST_CASE("boundary contact")
{
    CHECK_FALSE(boundary_contact({5, 6, 6}, windows({"D:4@5", "D:2@11"})).has_value());
    CHECK_FALSE(boundary_contact({7, 8, 3}, windows({"D:5@9", "D:2@16", "N:2@8", "N:2@4"})).has_value());
    // A Delta apex on the top side.
    CHECK(boundary_contact({2, 2, 2}, windows({"D:2@4"})).has_value());
    // A Delta base on the base is fine.
    CHECK_FALSE(boundary_contact({6, 5, 4}, windows({"D:2@8", "D:2@0"})).has_value());
}

TEST_CASE("window enumeration")
{
    CHECK(enumerate_window_sets({3, 3, 0}, 2).front().empty());
    for (const HexParams p : {HexParams{3, 3, 0}, HexParams{3, 3, 1}, HexParams{2, 4, 2}}) {
        auto sets = enumerate_window_sets(p, 2);
        for (const auto& ws : sets) {
            CHECK_FALSE(check_windows(p, ws).has_value());
            CHECK(ws.size() <= 2);
        }
        // The windows must remove the k surplus up triangles.
        CHECK(sets.front().empty() == (p.k == 0));
        CHECK(enumerate_window_sets(p, 1).size() <= sets.size());
    }
}

TEST_CASE("minimal x")
{
    CHECK(r_min_x(IndexList{}, IndexList{2, 4}, RFamily::R) == 4 - 2 - 1);
    CHECK(r_min_x(IndexList{}, IndexList{1}, RFamily::R) == -1);
    CHECK_THROWS_AS(r_boundary(IndexList{1}, IndexList{1}, r_min_x(IndexList{1}, IndexList{1}, RFamily::R) - 1,
                               RFamily::R),
                    RegionError);
    CHECK_THROWS_AS(r_boundary(IndexList{}, IndexList{}, 3, RFamily::R), RegionError);
}

TEST_CASE("empty lists give the empty region")
{
    CHECK(r_region(IndexList{}, IndexList{}, 7).empty());
    CHECK(r_bar_region(IndexList{}, IndexList{}, 0).empty());
}

TEST_CASE("R regions: boundary, weights and side lengths")
{
    struct Case {
        IndexList l, q;
        int x;
        RFamily f;
    };
    const std::vector<Case> cases = {
        {{2, 4, 5}, {2, 4}, 2, RFamily::R},   {{}, {2, 4}, 4, RFamily::R},
        {{2, 4, 5}, {2, 4}, 3, RFamily::RBar}, {{}, {2, 4}, 5, RFamily::RBar},
        {{1, 3}, {2}, 1, RFamily::R},          {{2}, {1, 3}, 2, RFamily::RBar},
    };
    for (const auto& c : cases) {
        CAPTURE(r_instance(c.f, c.l, c.q, c.x));
        const int m = c.l.size(), n = c.q.size();
        auto b = r_boundary(c.l, c.q, c.x, c.f);
        CHECK(b.walk.closed());
        Region r = r_family_region(c.l, c.q, c.x, c.f);
        CHECK(balance(r) == 0);
        // One half-weighted position per selected bump of the upper path.
        CHECK(static_cast<int>(r.half_weighted().size()) == n);
        for (const auto& h : r.half_weighted())
            CHECK(r.weight(h) == make_rational(1, 2));
        const int sw = static_cast<int>(path_endpoints(r, PathSide::Southwest).size());
        const int nw = static_cast<int>(path_endpoints(r, PathSide::Northwest).size());
        if (c.f == RFamily::R) {
            // With l empty the lower path has no bumps and the side is one shorter.
            CHECK(sw == (m == 0 ? n : 2 * c.l.last() - m + n + 1));
            CHECK(nw == 2 * c.q.last() + m - n);
        } else {
            CHECK(sw == 2 * c.l.last() - m + n);
            CHECK(nw == 2 * c.q.last() + m - n + 1);
        }
    }
}
