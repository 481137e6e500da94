#include "doctest.h"
#include "lozenge/count.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/render.hpp"
#include "support.hpp"

using namespace lozenge;

TEST_CASE("render formats")
{
    CHECK(parse_render_format("ascii") == RenderFormat::Ascii);
    CHECK(parse_render_format("svg") == RenderFormat::Svg);
    CHECK(parse_render_format("triregion") == RenderFormat::Triregion);
    CHECK_THROWS_AS(parse_render_format("png"), std::invalid_argument);
}

TEST_CASE("ascii")
{
    CHECK(render_ascii(Region{}) == "# region cells=0 halves=0\n");
    CHECK(render_ascii(hexagon({1, 1, 0})) == "# region cells=6 halves=0 rows=0..1 cols=0..2\nAVA\nVAV\n");
    Region half({TriCell(0, 0), TriCell(0, 1)}, {LozengePos(TriCell(0, 0), TriCell(0, 1))});
    CHECK(render_ascii(half) == "# region cells=2 halves=1 rows=0..0 cols=0..1\nva\n");
}

TEST_CASE("svg golden files")
{
    const std::string dir = LOZENGE_TEST_DIR "/golden/";
    const std::string hex = testing_support::read_file(dir + "hexagon_5_5_3.svg");
    REQUIRE_FALSE(hex.empty());
    CHECK(render_svg(hexagon({5, 5, 3})) == hex);
    const std::string r = testing_support::read_file(dir + "r_245_24_x2.svg");
    REQUIRE_FALSE(r.empty());
    CHECK(render_svg(r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2)) == r);
}

TEST_CASE("svg is deterministic and shows halves and tilings")
{
    Region r = r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2);
    const std::string a = render_svg(r), b = render_svg(r);
    CHECK(a == b);
    std::size_t ovals = 0;
    for (std::size_t p = a.find("<ellipse"); p != std::string::npos; p = a.find("<ellipse", p + 1))
        ++ovals;
    CHECK(ovals == r.half_weighted().size());

    Region h = hexagon({2, 3, 0});
    auto t = first_tiling(h);
    REQUIRE(t.has_value());
    CHECK(render_svg(h, t).size() > render_svg(h).size());
    CHECK(render(h, RenderFormat::Triregion) == write_triregion(h));
    auto broken = *t;
    broken.pop_back();
    CHECK_THROWS_AS(render(h, RenderFormat::Svg, broken), std::invalid_argument);
}
