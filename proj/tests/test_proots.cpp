#include <doctest.h>

#include <random>

#include "levelscope/proots.hpp"

using namespace levelscope;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

MultiPoly random_homogeneous(Fp fp, int nvars, u64 deg, std::mt19937_64& rng) {
    MultiPoly f(fp, nvars);
    for (int t = 0; t < 6; ++t) {
        Exponents e(nvars, 0);
        u64 remaining = deg;
        for (int i = 0; i + 1 < nvars; ++i) {
            e[i] = static_cast<u32>(rng() % (remaining + 1));
            remaining -= e[i];
        }
        e[nvars - 1] = static_cast<u32>(remaining);
        f.add_term(e, rng() % fp.modulus());
    }
    return f;
}

}  // namespace

TEST_CASE("decompose examples") {
    Fp f3(3);
    MultiPoly g = MultiPoly::parse("x^3*y^2 + x", f3, xy);
    RootDecomposition dec = decompose(g, 1);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components.at({0, 2}) == MultiPoly::parse("x", f3, xy));
    CHECK(dec.components.at({1, 0}) == MultiPoly::one(f3, 2));

    Fp f5(5);
    auto d2 = decompose(MultiPoly::parse("x^4", f5, xy), 1);
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components.at({4, 0}).is_one());

    auto d3 = decompose(MultiPoly::parse("x^5", f5, xy), 1);
    REQUIRE(d3.components.size() == 1);
    CHECK(d3.components.at({0, 0}) == MultiPoly::parse("x", f5, xy));

    CHECK_THROWS_AS(decompose(g, 0), ArgumentError);
}

TEST_CASE("roots_ideal reproduces the published genus-2 chain head") {
    Fp fp(11);
    MultiPoly f = MultiPoly::parse("y^2*z^3-x^5-2*z^5", fp, xyz);
    HomIdeal ideal = roots_ideal(f.pow(10), 1);
    HomIdeal expected(fp, 3,
                      {MultiPoly::parse("z^2", fp, xyz), MultiPoly::parse("x*z", fp, xyz),
                       MultiPoly::parse("x^3", fp, xyz)});
    CHECK(ideal.equals(expected));
}

TEST_CASE("roots_ideal monomial cases") {
    Fp fp(5);
    CHECK(roots_ideal(MultiPoly::parse("x^4", fp, xy), 1).is_unit());
    HomIdeal i2 = roots_ideal(MultiPoly::parse("x^10", fp, xy), 1);
    CHECK(i2.equals(HomIdeal(fp, 2, {MultiPoly::parse("x^2", fp, xy)})));
}

TEST_CASE("roots_one_of_ideal examples") {
    Fp fp(5);
    HomIdeal k(fp, 2, {MultiPoly::parse("x^5", fp, xy), MultiPoly::parse("y^5", fp, xy)});
    HomIdeal expected(fp, 2, {MultiPoly::parse("x", fp, xy), MultiPoly::parse("y", fp, xy)});
    CHECK(roots_one_of_ideal(k).equals(expected));

    CHECK(roots_one_of_ideal(HomIdeal::unit(fp, 2)).is_unit());

    HomIdeal k2(fp, 2, {MultiPoly::parse("x^6", fp, xy)});
    CHECK(roots_one_of_ideal(k2).equals(HomIdeal(fp, 2, {MultiPoly::parse("x", fp, xy)})));
}

TEST_CASE("reconstruction identity on random inputs") {
    std::mt19937_64 rng(17);
    for (u64 p : {3ull, 5ull, 7ull}) {
        Fp fp(p);
        for (int e = 1; e <= 2; ++e) {
            for (int trial = 0; trial < 5; ++trial) {
                MultiPoly g(fp, 2);
                for (int t = 0; t < 8; ++t) {
                    Exponents exps = {static_cast<u32>(rng() % 30), static_cast<u32>(rng() % 30)};
                    g.add_term(exps, rng() % p);
                }
                RootDecomposition dec = decompose(g, e);
                CHECK(dec.reconstruct(fp, 2) == g);
            }
        }
    }
}

TEST_CASE("degree formula for homogeneous inputs") {
    std::mt19937_64 rng(29);
    Fp fp(5);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly g = random_homogeneous(fp, 3, 9, rng);
        if (g.is_zero()) continue;
        RootDecomposition dec = decompose(g, 1);
        for (const auto& [alpha, comp] : dec.components) {
            CHECK(comp.is_homogeneous());
            CHECK(comp.degree() == (g.degree() - exponent_degree(alpha)) / 5);
        }
    }
}

TEST_CASE("composition: I_(e+1)(g) = roots_one_of_ideal(I_e(g))") {
    std::mt19937_64 rng(43);
    for (u64 p : {3ull, 5ull}) {
        Fp fp(p);
        for (int trial = 0; trial < 8; ++trial) {
            MultiPoly g = random_homogeneous(fp, 3, 2 * p + 1, rng);
            if (g.is_zero()) continue;
            MultiPoly big = g.pow(p * p - 1);
            CHECK(roots_ideal(big, 2).equals(roots_one_of_ideal(roots_ideal(big, 1))));
        }
    }
}

TEST_CASE("roots_one_of_ideal does not depend on the generating set") {
    std::mt19937_64 rng(53);
    Fp fp(5);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly g1 = random_homogeneous(fp, 3, 4, rng);
        MultiPoly g2 = random_homogeneous(fp, 3, 6, rng);
        if (g1.is_zero() || g2.is_zero()) continue;
        // Same ideal, different generators: g2 replaced by g2 + m*g1.
        MultiPoly m = MultiPoly::monomial(fp, 3, {2, 0, 0}, 1 + rng() % 4);
        HomIdeal k1(fp, 3, {g1, g2});
        HomIdeal k2(fp, 3, {g1, g2 + m * g1});
        REQUIRE(k1.equals(k2));
        CHECK(roots_one_of_ideal(k1).equals(roots_one_of_ideal(k2)));
    }
}
