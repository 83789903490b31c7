#include <doctest.h>

#include <random>

#include "levelscope/cartier.hpp"

using namespace levelscope;

namespace {

UniPoly up(const std::string& text, Fp fp) { return UniPoly::parse(text, fp); }

}  // namespace

TEST_CASE("Cartier-Manin matrices of y^2 = x^5 + 2") {
    {
        CartierData d = cartier_data(up("x^5 + 2", Fp(11)), 2);
        CHECK(d.C.to_string() == "[[3,0], [0,10]]");
        CHECK(d.rank_C == 2);
        CHECK(d.stable_rank == 2);
        CHECK(p_rank(d) == 2);
        CHECK_FALSE(d.nilpotency.has_value());
        CHECK(d.classification == CurveClass::ordinary);
        CHECK(to_string(d.classification) == "ordinary");
        CHECK(level_lower_bound(d) == 2);
        CHECK_FALSE(d.yui_range_warning);
    }
    {
        CartierData d = cartier_data(up("x^5 + 2", Fp(13)), 2);
        CHECK(d.C.to_string() == "[[0,0], [12,0]]");
        CHECK(d.rank_C == 1);
        CHECK(p_rank(d) == 0);
        REQUIRE(d.nilpotency.has_value());
        CHECK(*d.nilpotency == 1);
        CHECK(d.classification == CurveClass::supersingular);
        CHECK(level_lower_bound(d) == 3);
    }
}

TEST_CASE("superspecial member of the mu_x family") {
    CartierData d = cartier_data(up("x^5 + x", Fp(13)), 2);
    CHECK(d.C.is_zero());
    CHECK(d.classification == CurveClass::superspecial);
    CHECK(p_rank(d) == 0);
    REQUIRE(d.nilpotency.has_value());
    CHECK(*d.nilpotency == 0);
    CHECK(level_lower_bound(d) == 2);
    // The extended block keeps nonzero expansion data even when C vanishes:
    // the coefficient of x^10 in (x^5 + x)^6 is binomial(6,1) = 6.
    CHECK(d.C_ext.at(0, 2) == 6);
    CHECK_FALSE(d.C_ext.is_zero());
}

TEST_CASE("extended matrix embeds C as its leading columns") {
    CartierData d = cartier_data(up("x^5 + 3*x^2 + 1", Fp(11)), 2);
    CHECK(d.C_ext.rows() == 2);
    CHECK(d.C_ext.cols() == 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(d.C_ext.at(i, j) == d.C.at(i, j));
}

TEST_CASE("model validation") {
    Fp fp(11);
    CHECK_THROWS_AS(cartier_manin(up("x^4 + 1", fp), 2, 2), ArgumentError);
    CHECK_THROWS_AS(cartier_manin(up("x^5 + 2", fp), 0, 1), ArgumentError);
    // x^5 + x^4 has 0 as a multiple root.
    CHECK_THROWS_AS(cartier_manin(up("x^5 + x^4", fp), 2, 2), ArgumentError);
    CHECK(cartier_data(up("x^3 + x + 1", Fp(5)), 1).yui_range_warning);
}

TEST_CASE("iterated matrix equals the matrix power") {
    std::mt19937_64 rng(307);
    for (u64 p : {11ull, 13ull}) {
        Fp fp(p);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<u64> c(6, 0);
            for (int i = 0; i < 5; ++i) c[i] = rng() % p;
            c[5] = 1;
            UniPoly h(fp, c);
            if (!h.is_squarefree()) continue;
            CartierData d = cartier_data(h, 2);
            CHECK(cartier_manin_iterate(h, 2, 2) == d.C.pow(2));
            CHECK(cartier_manin_iterate(h, 2, 1) == d.C);
        }
    }
}

TEST_CASE("classification readout is internally consistent") {
    std::mt19937_64 rng(401);
    for (u64 p : {5ull, 7ull}) {
        Fp fp(p);
        for (int genus = 2; genus <= 3; ++genus) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<u64> c(2 * genus + 2, 0);
                for (int i = 0; i <= 2 * genus; ++i) c[i] = rng() % p;
                c[2 * genus + 1] = 1;
                UniPoly h(fp, c);
                if (!h.is_squarefree()) continue;
                CartierData d = cartier_data(h, genus);
                CHECK(d.stable_rank == d.C.pow(genus).rank());
                CHECK(d.stable_rank <= d.rank_C);
                CHECK((d.classification == CurveClass::ordinary) ==
                      (d.rank_C == static_cast<std::size_t>(genus)));
                if (d.classification == CurveClass::superspecial) CHECK(d.C.is_zero());
                if (d.nilpotency.has_value()) CHECK(d.stable_rank == 0);
                if (genus >= 3 && d.stable_rank == 0 && !d.C.is_zero())
                    CHECK(d.classification == CurveClass::p_rank_zero_nonordinary);
                CHECK(level_lower_bound(d) >= 2);
            }
        }
    }
}
