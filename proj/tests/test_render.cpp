#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "sheafcoh/render.hpp"
#include "testutil.hpp"

using namespace sheafcoh;
using testutil::parse;
using testutil::xrng;

namespace {
const space P1P1({1, 1});
const space P2P1({2, 1});
}  // namespace

TEST_CASE("json integers stay exact") {
    CHECK(json_int(Int(0)).is_number());
    CHECK(json_int(Int(-17)).get<long long>() == -17);
    Int just_below = (Int(1) << 53) - 1;
    CHECK(json_int(just_below).is_number());
    CHECK(json_int(just_below).get<long long>() == 9007199254740991LL);
    Int at_limit = Int(1) << 53;
    REQUIRE(json_int(at_limit).is_string());
    CHECK(json_int(at_limit).get<std::string>() == "9007199254740992");
    CHECK(json_int(-at_limit).get<std::string>() == "-9007199254740992");
    // a dimension that actually overflows doubles: h^0(P^3, O(2000000))
    Int big = cohomology(parse(space({3}), "O(2000000)")).at(0);
    REQUIRE(json_int(big).is_string());
    CHECK(Int(json_int(big).get<std::string>()) == big);
}

TEST_CASE("cohomology table JSON shape") {
    CHECK(to_json(cohomology(parse(P1P1, "O(0)#O(-2)"))).dump() == R"({"1":1})");
    CHECK(to_json(cohomology(parse(P1P1, "O(-1)#O(-1)"))).dump() == "{}");
}

TEST_CASE("verdict JSON") {
    split_result r = split_check(P1P1, parse(P1P1, "O(0)#O(0)"));
    CHECK(to_json(r).dump() == R"({"verdict":"CERTIFIED_SPLIT"})");
    r = split_check(P1P1, parse(P1P1, "O(-1)#O(1)"));
    json j = to_json(r);
    CHECK(j["verdict"] == "INCONCLUSIVE");
    CHECK(j["witness"]["box"] == json::array({-1, -1}));
    CHECK(j["witness"]["t"] == 0);
    CHECK(j["witness"]["q"] == 1);
    CHECK(j["witness"]["dim"] == 1);
}

TEST_CASE("tables and JSON agree on every cohomology dimension") {
    xrng rng(14);
    for (int i = 0; i < 25; ++i) {
        const space& X = (i % 2) ? P1P1 : P2P1;
        coh_table t = cohomology(testutil::random_sheaf(X, rng, 3, -4, 4));
        json j = to_json(t);
        // re-read the table text and compare entry for entry
        std::istringstream table(table_of(t));
        std::string header;
        std::getline(table, header);
        std::map<int, Int> seen;
        int q;
        std::string dim;
        while (table >> q >> dim) seen[q] = Int(dim);
        REQUIRE(seen.size() == t.size());
        for (const auto& [deg, h] : t) {
            REQUIRE(seen.at(deg) == h);
            const json& v = j.at(std::to_string(deg));
            REQUIRE((v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>())) == h);
        }
    }
}
