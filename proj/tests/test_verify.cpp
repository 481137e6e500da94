#include "doctest.h"
#include "lozenge/verify.hpp"

#include <stdexcept>

using namespace lozenge;

namespace {

bool none_fail(const std::vector<CountReport>& reports)
{
    for (const auto& r : reports)
        if (!r.match)
            return false;
    return true;
}

bool all_match(const std::vector<CountReport>& reports)
{
    for (const auto& r : reports)
        if (!r.match)
            return false;
    return !reports.empty();
}

std::vector<WindowSpec> windows(std::initializer_list<const char*> texts)
{
    std::vector<WindowSpec> out;
    for (const char* t : texts)
        out.push_back(WindowSpec::parse(t));
    return out;
}

}  // namespace

TEST_CASE("reports")
{
    auto r = make_report("x", {{"a", 1}, {"b", make_rational(2, 2)}});
    CHECK(r.match);
    CHECK(r.line() == "RESULT x a=1 b=1 match=true");
    auto bad = make_report("y", {{"a", 1}, {"b", make_rational(1, 2)}});
    CHECK_FALSE(bad.match);
    CHECK(bad.line() == "RESULT y a=1 b=1/2 match=false");
    CHECK(r_instance(RFamily::R, IndexList{2, 4}, IndexList{1}, 3) == "R[l=(2,4),q=(1),x=3]");
    CHECK(r_instance(RFamily::RBar, IndexList{}, IndexList{1}, 0) == "Rbar[l=(),q=(1),x=0]");
}

TEST_CASE("product formula on sample regions")
{
    CHECK(verify_theorem_1_1({5, 6, 6}, windows({"D:4@5", "D:2@11"})).match);
    CHECK(verify_theorem_1_1({7, 8, 3}, windows({"D:5@9", "D:2@16", "N:2@8", "N:2@4"})).match);
    CHECK(verify_theorem_1_1({8, 8, 1}, windows({"N:1@8", "N:2@5", "D:4@11"})).match);
    CHECK(verify_theorem_1_1({6, 5, 4}, windows({"D:2@8", "D:2@0"})).match);
    CHECK(verify_theorem_1_1({6, 8, 1}, windows({"D:5@8", "N:2@7", "N:2@3"})).match);
}

TEST_CASE("product formula fails when a window apex touches the top side")
{
    auto r = verify_theorem_1_1({2, 2, 2}, windows({"D:2@4"}));
    CHECK_FALSE(r.match);
    REQUIRE(r.values.size() >= 2);
    CHECK(boundary_contact({2, 2, 2}, windows({"D:2@4"})).has_value());
}

TEST_CASE("region counts equal the P polynomials")
{
    CHECK(all_match(verify_prop_2_1(IndexList{}, IndexList{}, 2)));
    CHECK(verify_prop_2_1(IndexList{2, 4, 5}, IndexList{2, 4}, 2, RFamily::R).match);
    CHECK(verify_prop_2_1(IndexList{2, 4, 5}, IndexList{2, 4}, 3, RFamily::RBar).match);
    CHECK(all_match(verify_prop_2_1(IndexList{1, 3}, IndexList{2}, 2)));
    CHECK_THROWS(verify_prop_2_1(IndexList{3}, IndexList{}, -5));
}

TEST_CASE("count recurrences")
{
    CHECK(all_match(verify_count_recurrences(IndexList{1, 2}, IndexList{1}, 2)));
    CHECK(all_match(verify_count_recurrences(IndexList{1}, IndexList{1}, 1)));
    CHECK(all_match(verify_count_recurrences(IndexList{1}, IndexList{1, 2}, 1)));
    CHECK(all_match(verify_count_recurrences(IndexList{2, 3}, IndexList{1, 3}, 2)));
    const IndexList l{1}, q{1};
    CHECK_THROWS_AS(verify_count_recurrences(l, q, r_min_x(l, q, RFamily::R)), DomainError);
}

TEST_CASE("boundary identities")
{
    CHECK(all_match(verify_boundary_lemmas(IndexList{1, 3}, IndexList{1})));
    CHECK(all_match(verify_boundary_lemmas(IndexList{1}, IndexList{1, 3})));
    CHECK(all_match(verify_boundary_lemmas(IndexList{}, IndexList{2})));
    CHECK(all_match(verify_boundary_lemmas(IndexList{2, 4}, IndexList{1, 2})));
}

TEST_CASE("polynomial recurrences")
{
    CHECK(all_match(verify_poly_recurrences(IndexList{1, 3}, IndexList{2})));
    CHECK(all_match(verify_poly_recurrences(IndexList{}, IndexList{1, 4})));
    CHECK(all_match(verify_poly_recurrences(IndexList{2}, IndexList{})));
}

TEST_CASE("increment relations")
{
    for (int x = 0; x < 5; ++x) {
        CHECK(all_match(verify_increment_relations(IndexList{1, 3}, IndexList{2}, ListSel::L, 2, x)));
        CHECK(all_match(verify_increment_relations(IndexList{2}, IndexList{1, 3}, ListSel::Q, 2, x)));
    }
    CHECK_THROWS(verify_increment_relations(IndexList{1, 2}, IndexList{}, ListSel::L, 1, 2));
}

TEST_CASE("factorization")
{
    auto h = verify_factorization(hexagon({2, 2, 0}));
    CHECK(h.match);
    CHECK(verify_factorization(Region{}).match);
    CHECK(verify_factorization(windowed_hexagon({6, 5, 4}, windows({"D:2@8", "D:2@0"})).region).match);
}

TEST_CASE("B ratios and calibration")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            CHECK(none_fail(verify_b_ratios(m, n, make_rational(7, 3))));
            CHECK(none_fail(verify_calibration(m, n, 2)));
        }
    CHECK(all_match(verify_b_ratios(1, 2, 1)));
}

TEST_CASE("cut pieces")
{
    auto h = windowed_hexagon({6, 5, 4}, windows({"D:2@8", "D:2@0"}));
    CHECK(verify_cut_pieces(h, {RFamily::R, IndexList{}, IndexList{2, 3, 4, 6, 7}, 4},
                            {RFamily::R, IndexList{1, 2, 3, 5, 6}, IndexList{}, 3})
              .match);
    // Swapped order is also accepted.
    CHECK(verify_cut_pieces(h, {RFamily::R, IndexList{1, 2, 3, 5, 6}, IndexList{}, 3},
                            {RFamily::R, IndexList{}, IndexList{2, 3, 4, 6, 7}, 4})
              .match);
    CHECK_FALSE(verify_cut_pieces(h, {RFamily::R, IndexList{}, IndexList{2, 3, 4, 6, 7}, 5},
                                  {RFamily::R, IndexList{1, 2, 3, 5, 6}, IndexList{}, 3})
                    .match);
}

TEST_CASE("GV last row")
{
    // m != n: the coefficients are the matrix entries.
    CHECK(all_match(verify_last_row(IndexList{1, 3}, IndexList{2}, 2)));
    CHECK(all_match(verify_last_row(IndexList{2}, IndexList{1, 3}, 2)));
    // m == n: the entries fall short of the coefficients by the overshoot weight.
    const IndexList l{1}, q{3};
    const int x = r_min_x(l, q, RFamily::RBar) + 1;
    CHECK_FALSE(all_match(verify_last_row(l, q, x, RFamily::RBar)));
    CHECK(all_match(verify_last_row_adjusted(l, q, x, RFamily::RBar)));
    const IndexList l3{3}, q2{2};
    const int y = r_min_x(l3, q2, RFamily::R) + 1;
    CHECK_FALSE(all_match(verify_last_row(l3, q2, y, RFamily::R)));
    CHECK(all_match(verify_last_row_adjusted(l3, q2, y, RFamily::R)));
    CHECK(all_match(verify_last_row_adjusted(IndexList{1, 2}, IndexList{3, 4}, 2, RFamily::RBar)));
    CHECK(beyond_boundary_weight(1, IndexList{1, 3}, IndexList{2}, RFamily::R) == 0);
    CHECK(beyond_boundary_weight(1, IndexList{1}, IndexList{3}, RFamily::RBar) == 3);
}

TEST_CASE("sweeps")
{
    auto s = r_sweep(2, 1, 1);
    CHECK(s.size() == 3 * 3 * 2 * 2);
    CHECK(verify_reachability(r_sweep(3, 2, 2)).match);
    auto t = theorem_sweep(2, 1, 1);
    CHECK_FALSE(t.empty());
}

TEST_CASE("parallel reports keep order and pass errors through")
{
    auto out = parallel_reports(5, [](std::size_t i) {
        return std::vector<CountReport>{make_report(std::to_string(i), {{"v", 1}})};
    });
    REQUIRE(out.size() == 5);
    for (std::size_t i = 0; i < out.size(); ++i)
        CHECK(out[i].instance == std::to_string(i));
    CHECK_THROWS_AS(parallel_reports(3,
                                     [](std::size_t i) -> std::vector<CountReport> {
                                         if (i == 1)
                                             throw std::runtime_error("boom");
                                         return {};
                                     }),
                    std::runtime_error);
}
