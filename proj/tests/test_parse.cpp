#include <catch2/catch_amalgamated.hpp>

#include "sheafcoh/parse.hpp"
#include "testutil.hpp"

using namespace sheafcoh;
using testutil::xrng;

namespace {
const space P1P1({1, 1});
const space P2P1({2, 1});

size_t offset_of(const std::string& src, const space& X, bool* semantic = nullptr) {
    try {
        parse_sheaf(src, X);
    } catch (const parse_error& e) {
        if (semantic) *semantic = e.semantic;
        return e.offset;
    }
    FAIL("expected a parse error for: " << src);
    return SIZE_MAX;
}
}  // namespace

TEST_CASE("grammar") {
    sheaf_sum S = parse_sheaf("O(-1)#O(0) + Om^1(2)#O(1)", P2P1);
    REQUIRE(S.terms().size() == 2);
    auto it = S.terms().begin();
    CHECK(it->first == atom({factor(2, 0, -1), factor(1, 0, 0)}));
    ++it;
    CHECK(it->first == atom({factor(2, 1, 2), factor(1, 0, 1)}));

    CHECK(parse_sheaf("T^1(-1)#O(0)", P1P1) ==
          sheaf_sum::single(P1P1, atom({factor(1, 0, 1), factor(1, 0, 0)})));
    CHECK(parse_sheaf("  O( -1 ) # O( 0 )  ", P1P1) == parse_sheaf("O(-1)#O(0)", P1P1));
    CHECK(parse_sheaf("0", P1P1) == sheaf_sum(P1P1));
    CHECK(parse_sheaf("O(2)#O(2) + O(2)#O(2)", P1P1).terms().begin()->second == 2);
}

TEST_CASE("parse errors carry byte offsets") {
    bool semantic = false;
    CHECK(offset_of("O(1)", P1P1, &semantic) == 4);  // arity: one factor on a two-factor space
    CHECK(semantic);
    CHECK(offset_of("O(", P1P1) == 2);
    CHECK(offset_of("Q(1)", P1P1) == 0);
    CHECK(offset_of("O(1)#", P1P1) == 5);
    CHECK(offset_of("O(1)#O(2)#O(3)", P1P1, &semantic) == 9);
    CHECK(semantic);
    CHECK(offset_of("O(1)#O(2) +", P1P1) == 11);
    semantic = false;
    CHECK(offset_of("Om^2(0)#O(0)", P1P1, &semantic) == 0);  // power 2 on a P^1 factor
    CHECK(semantic);
    CHECK_NOTHROW(parse_sheaf("Om^2(0)#O(0)", P2P1));
    CHECK_THROWS_AS(parse_sheaf("O(99999999999)#O(0)", P1P1), parse_error);
}

TEST_CASE("printing") {
    CHECK(to_string(parse_sheaf("O(-1)#O(0)", P1P1)) == "O(-1)#O(0)");
    CHECK(to_string(parse_sheaf("Om^1(2)#O(1)", P2P1)) == "Om^1(2)#O(1)");
    CHECK(to_string(sheaf_sum(P1P1)) == "0");
    // multiplicities print as repeated summands, per the grammar
    CHECK(to_string(parse_sheaf("O(1)#O(1) + O(1)#O(1)", P1P1)) == "O(1)#O(1) + O(1)#O(1)");
    // tangent input prints in the Ω normal form
    CHECK(to_string(parse_sheaf("T^1(0)#O(0)", P2P1)) == "Om^1(3)#O(0)");
}

TEST_CASE("round trip on random sheaves") {
    xrng rng(13);
    const space P1P1P1({1, 1, 1});
    for (int i = 0; i < 500; ++i) {
        const space& X = (i % 3 == 0) ? P1P1 : (i % 3 == 1) ? P2P1 : P1P1P1;
        sheaf_sum S = testutil::random_sheaf(X, rng, 3, -9, 9);
        REQUIRE(parse_sheaf(to_string(S), X) == S);
    }
}
