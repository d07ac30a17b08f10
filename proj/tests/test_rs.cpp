#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pelp/pair.hpp"
#include "pelp/rs.hpp"

using namespace pelp;

namespace {
const Field F7(7, 1), F13(13, 1);
}

TEST_CASE("construction and encoding") {
    const RsCode c = rs_code(F7, full_support_points(F7), 2);
    CHECK(c.code.dim() == 2);
    CHECK(rs_encode(c, Poly{F7.zero(), F7.one()}) == Word{{0}, {1}, {2}, {3}, {4}, {5}, {6}});
    CHECK(rs_encode(c, Poly{}) == Word(7, F7.zero()));
    CHECK(rs_encode(c, Poly{F7.one()}) == Word(7, F7.one()));
    CHECK_THROWS_AS(rs_encode(c, Poly{F7.one(), F7.one(), F7.one()}), std::invalid_argument);
    CHECK(rs_code(F7, full_support_points(F7), 7).code == LinearCode::full(F7, 7));
    CHECK(dual(c.code) == rs_code(F7, full_support_points(F7), 5).code);

    CHECK_THROWS_AS(rs_code(F7, Word{{1}, {2}, {1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(rs_code(F7, Word{{1}, {2}, {3}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(rs_code(F7, Word{{1}, {2}, {3}}, 4), std::invalid_argument);
}

TEST_CASE("generator matches the monomial span on arbitrary supports") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        Word pts = full_support_points(F13);
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(4 + rng() % 9);
        const std::size_t k = 1 + rng() % pts.size();
        CHECK(rs_code(F13, pts, k).code == oracle::rs_by_monomials(F13, pts, k));
    }
}

TEST_CASE("MDS distance and duality on full support") {
    const Word x = full_support_points(F7);
    for (std::size_t k = 1; k <= 7; ++k) {
        const RsCode c = rs_code(F7, x, k);
        CHECK(min_distance(c.code) == 8 - k);
        if (k < 7) CHECK(dual(c.code) == rs_code(F7, x, 7 - k).code);
    }
}

TEST_CASE("star products of RS codes") {
    const Word x = full_support_points(F13);
    for (std::size_t k = 1; k <= 13; ++k)
        for (std::size_t k2 = 1; k2 <= 13; ++k2) {
            const LinearCode p = star_product(rs_code(F13, x, k).code, rs_code(F13, x, k2).code);
            if (k + k2 - 1 <= 13) {
                CHECK(p == rs_code(F13, x, k + k2 - 1).code);
            } else {
                CHECK(p == LinearCode::full(F13, 13));
            }
        }
}

TEST_CASE("the RS locating pair") {
    const RsCode c = rs_code(F13, full_support_points(F13), 3);

    const PairReport ok = validate_pelp_pair(rs_pelp_pair(c, 6, 2));
    CHECK(ok.all_hold());
    CHECK(ok.genuine_ecp.status == CheckStatus::fails);

    const PelpPair p7 = rs_pelp_pair(c, 7, 2);
    CHECK(p7.B().dim() == 3);
    CHECK(p7.W(2).dim() == 1);
    const PairReport bad = validate_pelp_pair(p7);
    CHECK(bad.c5.status == CheckStatus::fails);
    CHECK(bad.c5.lhs == 4);
    CHECK(bad.c5.rhs == 7);

    const PairReport ecp = validate_pelp_pair(rs_pelp_pair(c, 5, 1));
    CHECK(ecp.all_hold());
    CHECK(ecp.genuine_ecp.status == CheckStatus::holds);

    CHECK_THROWS_AS(rs_pelp_pair(c, 11, 1), std::invalid_argument);
}

TEST_CASE("d(B^perp) > t exactly when t is at most half the distance") {
    // distances come from enumeration here, not from the closed-form hints
    const Word x = full_support_points(F7);
    for (std::size_t k = 1; k <= 5; ++k) {
        const RsCode c = rs_code(F7, x, k);
        for (std::size_t t = 1; t + k <= 7; ++t) {
            const PelpPair hinted = rs_pelp_pair(c, t, 1);
            const PelpPair plain(hinted.A(), hinted.B(), hinted.C(), 1, t);
            const PairReport r = validate_pelp_pair(plain);
            const bool half_distance_side = 2 * t <= c.distance() - 1;
            CHECK((r.genuine_ecp.status == CheckStatus::holds) == half_distance_side);
            CHECK(r.c3.status == CheckStatus::holds);
            CHECK(r.c4.status == CheckStatus::holds);
        }
    }
}
