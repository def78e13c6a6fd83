#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gzcz/golay.hpp"
#include "gzcz/zcz.hpp"
#include "helpers.hpp"

using namespace gzcz;
using namespace gzcz::test;

namespace {

std::vector<SignQuadruple> valid_quadruples() {
    std::vector<SignQuadruple> out;
    for (int x1 : {1, -1})
        for (int x2 : {1, -1})
            for (int x3 : {1, -1})
                for (int x4 : {1, -1}) {
                    const SignQuadruple s{x1, x2, x3, x4};
                    if (s.valid()) {
                        out.push_back(s);
                    }
                }
    return out;
}

} // namespace

TEST_CASE("verify_gcp") {
    const auto pair = length10_pair();
    CHECK(verify_gcp(pair));
    CHECK(verify_gcp(length5_quad_pair()));
    CHECK_FALSE(verify_gcp(binary({1, 1}), binary({1, 1})));
    CHECK_THROWS_AS(verify_gcp(binary({1}), binary({1, 1})), LengthMismatchError);
}

TEST_CASE("golay_mate") {
    const auto pair = length10_pair();
    const auto mate = golay_mate(pair);
    CHECK(mate.a == binary({1, 1, -1, -1, 1, -1, 1, -1, 1, 1}));
    CHECK(mate.b == binary({1, 1, -1, -1, -1, -1, -1, 1, -1, -1}));
    CHECK(verify_gcp(mate));
    CHECK(mate_property(pair, mate));

    const auto mate2 = golay_mate(mate);
    CHECK(verify_gcp(mate2));

    const auto qpair = length5_quad_pair();
    const auto qmate = golay_mate(qpair);
    CHECK(verify_gcp(qmate));
    CHECK(mate_property(qpair, qmate));
}

TEST_CASE("mate_property") {
    const auto pair = length10_pair();
    CHECK(mate_property(pair, golay_mate(pair)));
    CHECK_FALSE(mate_property(pair, pair)); // C_{a,b} + C_{a,b} != 0 here
    const GolayPair unit{binary({1}), binary({1})};
    const GolayPair unit_mate{binary({1}), binary({-1})};
    CHECK(mate_property(unit, unit_mate));
}

TEST_CASE("build_zcz_pair produces the length-40 pair") {
    const auto pair = length10_pair();
    const auto mate = golay_mate(pair);
    const auto [p, q] = build_zcz_pair(pair, mate, {1, 1, 1, -1});
    CHECK(p == concat({pair.a, pair.b, pair.a, negate(pair.b)}));
    CHECK(q == concat({mate.a, mate.b, mate.a, negate(mate.b)}));
    const auto report = verify_golay_zcz({p, q}, 10);
    CHECK(report.passed);
    CHECK(report.measured_zacz == 10);
    CHECK(report.measured_zccz == 10);
}

TEST_CASE("build_zcz_pair on the quadriphase pair") {
    const auto pair = length5_quad_pair();
    const auto [p, q] = build_zcz_pair(pair, golay_mate(pair), {1, 1, 1, -1});
    CHECK(p.length() == 20);
    const auto report = verify_golay_zcz({p, q}, 5);
    CHECK(report.passed);
    CHECK(report.exact);
    CHECK(report.modulus == 4);
}

TEST_CASE("build_zcz_pair rejects bad inputs") {
    const auto pair = length10_pair();
    const auto mate = golay_mate(pair);
    CHECK_THROWS_AS(build_zcz_pair(pair, mate, {1, 1, 1, 1}), SignConditionError);
    // passes the mate cross-sum but is not mutually orthogonal
    const GolayPair fake{pair.a, negate(pair.b)};
    CHECK(mate_property(pair, fake));
    CHECK_THROWS_AS(build_zcz_pair(pair, fake, {1, 1, 1, -1}), MateError);
    // fails the mate cross-sum outright
    CHECK_THROWS_AS(build_zcz_pair(pair, pair, {1, 1, 1, -1}), MateError);
}

TEST_CASE("zcz conditions hold for the doubling family and all sign patterns") {
    const auto quadruples = valid_quadruples();
    REQUIRE(quadruples.size() == 8);

    std::vector<GolayPair> family;
    GolayPair seed{binary({1}), binary({1})};
    for (int step = 0; step < 3; ++step) {
        seed = double_pair(seed);
        family.push_back(seed); // lengths 2, 4, 8
    }
    family.push_back(length10_pair());

    for (const auto& pair : family) {
        REQUIRE(verify_gcp(pair));
        const auto mate = golay_mate(pair);
        const auto n = static_cast<std::int64_t>(pair.length());
        for (const auto& signs : quadruples) {
            const auto [p, q] = build_zcz_pair(pair, mate, signs);
            const auto report = verify_golay_zcz({p, q}, n);
            CHECK(report.passed);
            CHECK(report.complementary);
            CHECK(report.measured_zacz >= n);
            CHECK(report.measured_zccz >= n);
        }
    }
}

TEST_CASE("negating the signs of matching blocks leaves the profiles unchanged") {
    // blocks 1 and 3 carry the same sequence, as do 2 and 4; flipping both
    // members of such a position pair negates every occurrence of one
    // sequence and no correlation value moves
    const auto pair = length10_pair();
    const auto mate = golay_mate(pair);
    for (const auto& signs : valid_quadruples()) {
        const auto [p0, q0] = build_zcz_pair(pair, mate, signs);
        const SignQuadruple flip13{-signs.x1, signs.x2, -signs.x3, signs.x4};
        const SignQuadruple flip24{signs.x1, -signs.x2, signs.x3, -signs.x4};
        for (const auto& other : {flip13, flip24}) {
            REQUIRE(other.valid());
            const auto [p1, q1] = build_zcz_pair(pair, mate, other);
            CHECK(pccf(p0, p0).equals(pccf(p1, p1)));
            CHECK(pccf(q0, q0).equals(pccf(q1, q1)));
            CHECK(pccf(p0, q0).equals(pccf(p1, q1)));
        }
    }
}
