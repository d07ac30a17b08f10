#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pelp/rs.hpp"

using namespace pelp;

namespace {

LinearCode rows_code(const Field& f, std::size_t n, std::vector<std::vector<std::uint64_t>> rows) {
    Matrix m(f, 0, n);
    for (const auto& r : rows) {
        Word w;
        for (auto v : r) w.push_back(FieldElem{v});
        m.append_row(w);
    }
    return LinearCode::from_generator(m);
}

const Field F2(2, 1), F3(3, 1), F4(2, 2), F7(7, 1), F13(13, 1);

LinearCode rs7(std::size_t k) { return rs_code(F7, full_support_points(F7), k).code; }

}  // namespace

TEST_CASE("dual") {
    const LinearCode rep = rows_code(F2, 3, {{1, 1, 1}});
    const LinearCode d = dual(rep);
    CHECK(d.dim() == 2);
    CHECK(d == rows_code(F2, 3, {{1, 1, 0}, {0, 1, 1}}));

    CHECK(dual(rs7(2)) == rs7(5));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const LinearCode c = oracle::random_code(F7, n, rng() % (n + 1), rng);
        CHECK(dual(dual(c)) == c);
        CHECK(dual(c).dim() == n - c.dim());
        if (n <= 4) CHECK(dual(c) == oracle::dual_by_enumeration(c));
    }
}

TEST_CASE("puncture and shorten") {
    std::mt19937_64 rng(12);
    const LinearCode c = oracle::random_code(F7, 6, 3, rng);
    CHECK(puncture(c, {0, 1, 2, 3, 4, 5}) == c);
    CHECK(puncture(rows_code(F2, 3, {{0, 1, 0}}), {1}) == LinearCode::full(F2, 1));
    CHECK(puncture(rs7(3), {0, 3, 6}) == LinearCode::full(F7, 3));
    CHECK_THROWS_AS(puncture(c, {}), std::invalid_argument);
    CHECK_THROWS_AS(puncture(c, {6}), std::out_of_range);

    CHECK(shorten(c, {}) == c);
    CHECK(shorten(LinearCode::full(F2, 3), {0}) == rows_code(F2, 3, {{0, 1, 0}, {0, 0, 1}}));
    for (std::size_t j = 0; j <= 3; ++j) {
        IndexList js;
        for (std::size_t i = 0; i < j; ++i) js.push_back(2 * i);
        CHECK(shorten(rs7(4), js).dim() == 4 - j);
    }
    CHECK_THROWS_AS(shorten(c, {9}), std::out_of_range);

    // shortening by enumeration: codewords vanishing on J
    for (int trial = 0; trial < 20; ++trial) {
        const LinearCode r = oracle::random_code(F3, 5, 1 + rng() % 4, rng);
        IndexList js;
        for (std::size_t i = 0; i < 5; ++i)
            if (rng() % 3 == 0) js.push_back(i);
        std::vector<Word> keep;
        for (const auto& w : oracle::words_of(oracle::codewords(r))) {
            bool z = true;
            for (auto i : js) z = z && w[i].value == 0;
            if (z) keep.push_back(w);
        }
        const LinearCode s = shorten(r, js);
        CHECK(s == oracle::code_of(F3, 5, keep));
        const IndexList zs = zero_set(s);
        for (auto i : js) CHECK(std::find(zs.begin(), zs.end(), i) != zs.end());
    }
}

TEST_CASE("zero set") {
    CHECK(zero_set(rows_code(F2, 3, {{0, 1, 0}})) == IndexList{0, 2});
    CHECK(zero_set(LinearCode::full(F7, 4)).empty());
    CHECK(zero_set(LinearCode::zero(F7, 3)) == IndexList{0, 1, 2});
}

TEST_CASE("star product") {
    std::mt19937_64 rng(13);
    const LinearCode ones = rows_code(F7, 7, {{1, 1, 1, 1, 1, 1, 1}});
    const LinearCode c = oracle::random_code(F7, 7, 3, rng);
    CHECK(star_product(ones, c) == c);
    CHECK(star_product(rs7(2), rs7(2)) == rs7(3));
    CHECK(star_product(rows_code(F7, 3, {{1, 0, 0}}), rows_code(F7, 3, {{0, 1, 0}})) == LinearCode::zero(F7, 3));
    CHECK_THROWS_AS(star_product(c, LinearCode::full(F7, 6)), std::invalid_argument);

    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const LinearCode a = oracle::random_code(F3, n, 1 + rng() % 2, rng);
        const LinearCode b = oracle::random_code(F3, n, 1 + rng() % 2, rng);
        const LinearCode d = oracle::random_code(F3, n, 1 + rng() % 2, rng);
        CHECK(star_product(a, b) == oracle::star_by_enumeration(a, b));
        CHECK(star_product(a, b) == star_product(b, a));
        CHECK(star_product(a, LinearCode(sum(b.space(), d.space()))) ==
              LinearCode(sum(star_product(a, b).space(), star_product(a, d).space())));
    }
}

TEST_CASE("powers") {
    std::mt19937_64 rng(14);
    const LinearCode c = oracle::random_code(F7, 5, 2, rng);
    CHECK(power(c, 1) == c);
    const RsCode r3 = rs_code(F13, full_support_points(F13), 3);
    CHECK(power(r3.code, 2) == rs_code(F13, full_support_points(F13), 5).code);
    CHECK(power(rs7(5), 2) == LinearCode::full(F7, 7));
    CHECK_THROWS_AS(power(c, 0), std::invalid_argument);
}

TEST_CASE("adjunction of star and inner product") {
    std::mt19937_64 rng(15);
    for (const Field& f : {F4, F7, F13}) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + rng() % 9;
            const Word a = oracle::random_word(f, n, rng), b = oracle::random_word(f, n, rng),
                       c = oracle::random_word(f, n, rng);
            CHECK(dot(f, star(f, a, b), c) == dot(f, a, star(f, b, c)));
        }
    }
}

TEST_CASE("stabilizer and degeneracy") {
    CHECK(stabilizer(LinearCode::full(F3, 3)) == LinearCode::full(F3, 3));
    const LinearCode rep = rows_code(F7, 3, {{1, 1, 1}});
    CHECK(stabilizer(rep) == rep);
    CHECK(stabilizer(rows_code(F2, 2, {{1, 0}})) == LinearCode::full(F2, 2));

    CHECK(is_degenerated(rows_code(F2, 2, {{1, 0}})));
    CHECK_FALSE(is_degenerated(rs7(3)));
    CHECK(stabilizer(rs7(3)) == rows_code(F7, 7, {{1, 1, 1, 1, 1, 1, 1}}));
    CHECK(is_degenerated(rows_code(F3, 2, {{1, 0}, {0, 1}})));
    CHECK_THROWS_AS(is_degenerated(LinearCode::zero(F7, 3)), std::invalid_argument);

    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const LinearCode c = oracle::random_code(F3, n, 1 + rng() % n, rng);
        const LinearCode d = oracle::random_code(F3, n, 1 + rng() % n, rng);
        CHECK(stabilizer(c) == oracle::stabilizer_by_enumeration(c));
        CHECK(stabilizer(c) == stabilizer(dual(c)));
        CHECK(stabilizer(c).is_subcode_of(stabilizer(star_product(c, d))));
    }
}

TEST_CASE("minimum distance") {
    CHECK(min_distance(rs7(2)) == 6);
    CHECK(min_distance(rows_code(F2, 5, {{1, 1, 1, 1, 1}})) == 5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const LinearCode c = oracle::random_code(F2, 8, 3, rng);
        if (c.dim() == 0) continue;
        CHECK(min_distance(c) == oracle::min_weight_by_enumeration(c));
    }
    CHECK_THROWS_AS(min_distance(LinearCode::full(F13, 8)), std::length_error);
    CHECK_FALSE(min_distance_feasible(LinearCode::full(F13, 8)));
    CHECK_THROWS_AS(min_distance(LinearCode::zero(F7, 3)), std::invalid_argument);
}

TEST_CASE("Kneser inequality") {
    const LinearCode rep = rows_code(F7, 3, {{1, 1, 1}});
    auto r = kneser_check(rep, rep);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.holds);
    r = kneser_check(rs7(2), rs7(3));
    CHECK(r.lhs == 4);
    CHECK_FALSE(r.product_degenerated);
    CHECK(r.cauchy_davenport_holds);
    CHECK(r.holds);

    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const LinearCode a = oracle::random_code(F4, n, 1 + rng() % std::min<std::size_t>(5, n), rng);
        const LinearCode b = oracle::random_code(F4, n, 1 + rng() % std::min<std::size_t>(5, n), rng);
        const auto k = kneser_check(a, b);
        CHECK(k.holds);
        if (!k.product_degenerated) CHECK(k.cauchy_davenport_holds);
    }
}
