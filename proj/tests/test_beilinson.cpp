#include <catch2/catch_amalgamated.hpp>

#include "sheafcoh/beilinson.hpp"
#include "sheafcoh/parse.hpp"
#include "testutil.hpp"

using namespace sheafcoh;
using testutil::parse;
using testutil::xrng;

namespace {
const space P1P1({1, 1});
const space P1P2({1, 2});

atom line_atom(const space& X, std::vector<int> m) {
    return atom::line(X, multidegree(std::move(m)));
}
}  // namespace

TEST_CASE("variant II pages on P1 x P1") {
    SECTION("the structure sheaf gives a single corner cell") {
        e1_page page = beilinson_e1(P1P1, parse(P1P1, "O(0)#O(0)"), ss_variant::II);
        REQUIRE(page.cells.size() == 1);
        auto& cell = page.cells.at({0, 0});
        REQUIRE(cell.size() == 1);
        CHECK(cell[0].first == line_atom(P1P1, {0, 0}));
        CHECK(cell[0].second == 1);
    }
    SECTION("O(1,0)") {
        e1_page page = beilinson_e1(P1P1, parse(P1P1, "O(1)#O(0)"), ss_variant::II);
        REQUIRE(page.cells.size() == 2);
        auto& c10 = page.cells.at({-1, 0});
        REQUIRE(c10.size() == 1);
        CHECK(c10[0].first == line_atom(P1P1, {-1, 0}));
        CHECK(c10[0].second == 1);
        auto& c00 = page.cells.at({0, 0});
        REQUIRE(c00.size() == 1);
        CHECK(c00[0].first == line_atom(P1P1, {0, 0}));
        CHECK(c00[0].second == 2);
    }
    SECTION("O(-1,-2) concentrates in the second row") {
        e1_page page = beilinson_e1(P1P1, parse(P1P1, "O(-1)#O(-2)"), ss_variant::II);
        REQUIRE(page.cells.size() == 2);
        auto& c12 = page.cells.at({-1, 2});
        REQUIRE(c12.size() == 1);
        CHECK(c12[0].first == line_atom(P1P1, {-1, 0}));
        CHECK(c12[0].second == 1);
        auto& c22 = page.cells.at({-2, 2});
        REQUIRE(c22.size() == 1);
        CHECK(c22[0].first == line_atom(P1P1, {-1, -1}));
        CHECK(c22[0].second == 2);
    }
}

TEST_CASE("K-class convergence check") {
    SECTION("pinned pages pass") {
        for (const char* expr : {"O(0)#O(0)", "O(1)#O(0)", "O(-1)#O(-2)"}) {
            e1_page page = beilinson_e1(P1P1, parse(P1P1, expr), ss_variant::II);
            kclass_result r = kclass_check(page);
            REQUIRE(r.pass);
            REQUIRE(r.residual.is_zero());
        }
    }
    SECTION("a corrupted page fails with a nonzero residual") {
        e1_page page = beilinson_e1(P1P1, parse(P1P1, "O(1)#O(0)"), ss_variant::II);
        page.cells.erase({-1, 0});
        kclass_result r = kclass_check(page);
        CHECK(!r.pass);
        CHECK(!r.residual.is_zero());
    }
    SECTION("random representable sheaves, variant II") {
        xrng rng(7);
        for (int i = 0; i < 60; ++i) {
            const space& X = (i % 2) ? P1P1 : P1P2;
            sheaf_sum F = testutil::random_sheaf(X, rng, 3, -3, 3);
            REQUIRE(kclass_check(beilinson_e1(X, F, ss_variant::II)).pass);
        }
    }
    SECTION("line-bundle sums: both variants converge and agree on χ") {
        xrng rng(8);
        for (int i = 0; i < 40; ++i) {
            const space& X = (i % 2) ? P1P1 : P1P2;
            sheaf_sum F = testutil::random_line_sum(X, rng, 3, -3, 3);
            for (ss_variant v : {ss_variant::I, ss_variant::II}) {
                e1_page page = beilinson_e1(X, F, v);
                REQUIRE(kclass_check(page).pass);
                Int total = 0;
                for (const auto& [pq, entries] : page.cells)
                    for (const auto& [label, mult] : entries)
                        total += parity_sign(pq.first + pq.second) * mult *
                                 chi(sheaf_sum::single(X, label));
                REQUIRE(total == chi(F));
            }
        }
    }
}

TEST_CASE("pages stay inside the square") {
    xrng rng(9);
    for (int i = 0; i < 30; ++i) {
        const space& X = (i % 2) ? P1P1 : P1P2;
        const int d = X.dim();
        sheaf_sum F = testutil::random_sheaf(X, rng, 3, -4, 4);
        for (const auto& [pq, entries] : beilinson_e1(X, F, ss_variant::II).cells) {
            REQUIRE((-d <= pq.first && pq.first <= 0));
            REQUIRE((0 <= pq.second && pq.second <= d));
            REQUIRE(!entries.empty());
            for (const auto& [label, mult] : entries) REQUIRE(mult > 0);
        }
    }
}

TEST_CASE("variant I requires a sum of line bundles") {
    CHECK_THROWS_AS(beilinson_e1(P1P2, parse(P1P2, "O(0)#Om^1(0)"), ss_variant::I),
                    inexpressible_product);
    CHECK_NOTHROW(beilinson_e1(P1P2, parse(P1P2, "O(0)#O(-1)"), ss_variant::I));
}

TEST_CASE("corner summand") {
    SECTION("clean corner") {
        corner_report r = corner_summand(P1P1, parse(P1P1, "O(0)#O(0) + O(-1)#O(-1)"));
        REQUIRE(r.hypotheses_hold);
        CHECK(r.h0 == 1);
        CHECK(r.summand == parse(P1P1, "O(0)#O(0)"));
        CHECK(r.verified);
    }
    SECTION("blocked corner") {
        corner_report r = corner_summand(P1P1, parse(P1P1, "O(0)#O(1) + O(-1)#O(0)"));
        REQUIRE(!r.hypotheses_hold);
        bool found = false;
        for (const auto& v : r.violations)
            if (v.p == -1 && v.member == multidegree({0, -1}) && v.dim == 1) found = true;
        CHECK(found);
    }
    SECTION("empty corner") {
        corner_report r = corner_summand(P1P1, parse(P1P1, "O(-1)#O(-1)"));
        REQUIRE(r.hypotheses_hold);
        CHECK(r.h0 == 0);
        CHECK(r.summand.is_zero());
        CHECK(r.verified);
    }
    SECTION("soundness on random sums") {
        xrng rng(10);
        int held = 0;
        for (int i = 0; i < 200; ++i) {
            sheaf_sum F = testutil::random_sheaf(P1P1, rng, 4, -3, 3);
            corner_report r = corner_summand(P1P1, F);
            if (r.hypotheses_hold) {
                ++held;
                REQUIRE(r.verified);
                REQUIRE(F.contains(r.summand));
            }
        }
        REQUIRE(held > 0);  // the corpus must exercise the non-vacuous branch
    }
}
