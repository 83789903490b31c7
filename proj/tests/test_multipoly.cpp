#include <doctest.h>

#include <random>

#include "levelscope/budget.hpp"
#include "levelscope/multipoly.hpp"

using namespace levelscope;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

MultiPoly mp(const std::string& text, u64 p) { return MultiPoly::parse(text, Fp(p), xyz); }

MultiPoly random_poly(Fp fp, int nvars, u64 max_deg, int nterms, std::mt19937_64& rng) {
    MultiPoly f(fp, nvars);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(nvars);
        for (auto& x : e) x = static_cast<u32>(rng() % (max_deg + 1));
        f.add_term(e, rng() % fp.modulus());
    }
    return f;
}

// Oracle: plain repeated multiplication, no Frobenius shortcuts.
MultiPoly pow_naive(const MultiPoly& f, u64 n) {
    MultiPoly r = MultiPoly::one(f.field(), f.nvars());
    for (u64 i = 0; i < n; ++i) r = r * f;
    return r;
}

}  // namespace

TEST_CASE("parse examples") {
    MultiPoly f = mp("y^2*z^3 - x^5 - 2*z^5", 11);
    CHECK(f.term_count() == 3);
    CHECK(f.coeff({0, 0, 5}) == 9);  // -2 = 9 mod 11
    CHECK(f.coeff({5, 0, 0}) == 10);
    CHECK(f.coeff({0, 2, 3}) == 1);

    CHECK(mp("x - x", 7).is_zero());
    CHECK_THROWS_AS(mp("x^(3)", 7), ParseError);
    CHECK_THROWS_AS(mp("", 7), ParseError);
    CHECK_THROWS_AS(mp("w + x", 7), ParseError);
    CHECK_THROWS_AS(mp("x^", 7), ParseError);
}

TEST_CASE("parse positions") {
    try {
        mp("x + q", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("canonical printing round-trips") {
    MultiPoly f = mp("y^2*z^3 - x^5 - 2*z^5", 11);
    CHECK(f.to_string(xyz) == "10*x^5+y^2*z^3+9*z^5");
    CHECK(MultiPoly::parse(f.to_string(xyz), Fp(11), xyz) == f);
    CHECK(MultiPoly::zero(Fp(11), 3).to_string(xyz) == "0");

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        MultiPoly g = random_poly(Fp(13), 3, 6, 8, rng);
        CHECK(MultiPoly::parse(g.to_string(xyz), Fp(13), xyz) == g);
    }
}

TEST_CASE("multiplication") {
    Fp fp(7);
    MultiPoly a = MultiPoly::parse("x+y", fp, xyz);
    MultiPoly b = MultiPoly::parse("x-y", fp, xyz);
    CHECK(a * b == MultiPoly::parse("x^2+6*y^2", fp, xyz));
    MultiPoly f = mp("y^2*z^3 - x^5 - 2*z^5", 11);
    CHECK(f * MultiPoly::one(Fp(11), 3) == f);
    CHECK_THROWS_AS(mp("x", 7) * mp("x", 11), ArgumentError);
}

TEST_CASE("pow uses the freshman's dream") {
    CHECK(mp("x+y", 3).pow(3) == mp("x^3+y^3", 3));
    CHECK(mp("x+y", 5).pow(0).is_one());
}

TEST_CASE("frobenius_power") {
    CHECK(mp("x+2*y", 5).frobenius_power(1) == mp("x^5+2*y^5", 5));
    CHECK(MultiPoly::one(Fp(5), 3).frobenius_power(3).is_one());
    CHECK(mp("x+y", 3).frobenius_power(2) == pow_naive(mp("x+y", 3), 9));
}

TEST_CASE("frobenius_power equals pow(f, p^k) on random inputs") {
    std::mt19937_64 rng(11);
    for (u64 p : {3ull, 5ull}) {
        Fp fp(p);
        for (u32 k = 1; k <= 2; ++k) {
            u64 q = 1;
            for (u32 i = 0; i < k; ++i) q *= p;
            for (int trial = 0; trial < 5; ++trial) {
                MultiPoly f = random_poly(fp, 2, 3, 4, rng);
                CHECK(f.frobenius_power(k) == f.pow(q));
                CHECK(f.pow(q) == pow_naive(f, q));
            }
        }
    }
}

TEST_CASE("pow is multiplicative in the exponent") {
    std::mt19937_64 rng(23);
    Fp fp(5);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly f = random_poly(fp, 2, 2, 3, rng);
        u64 m = rng() % 6, n = rng() % 6;
        CHECK(f.pow(m + n) == f.pow(m) * f.pow(n));
    }
}

TEST_CASE("linear_change basics") {
    Fp fp(13);
    MultiPoly f = MultiPoly::parse("x^2", fp, xyz);
    FpMatrix swap_xy(fp, 3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    CHECK(f.linear_change(swap_xy) == MultiPoly::parse("y^2", fp, xyz));

    MultiPoly g = mp("y^2*z^3 - x^5 - 2*z^5", 13);
    CHECK(g.linear_change(FpMatrix::identity(fp, 3)) == g);

    FpMatrix singular(fp, 3, 3, {1, 1, 0, 1, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(g.linear_change(singular), ArgumentError);
}

TEST_CASE("linear_change composition law and degree preservation") {
    std::mt19937_64 rng(31);
    Fp fp(13);
    auto random_invertible = [&] {
        for (;;) {
            FpMatrix a(fp, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) a.set(i, j, rng() % 13);
            if (a.rank() == 3) return a;
        }
    };
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly f = random_poly(fp, 3, 3, 4, rng);
        FpMatrix a = random_invertible();
        FpMatrix b = random_invertible();
        // (f|A)|B = f|AB; picking B as a right inverse of A recovers f.
        CHECK(f.linear_change(a).linear_change(b) == f.linear_change(a.mul(b)));
        CHECK(f.linear_change(a).degree() == f.degree());
        MultiPoly h = mp("y^2*z^3 - x^5 - 2*z^5", 13).linear_change(a);
        CHECK(h.is_homogeneous());
    }
}

TEST_CASE("term budget aborts large products") {
    u64 saved = budget::max_terms();
    budget::set_max_terms(4);
    Fp fp(7);
    MultiPoly a = MultiPoly::parse("x+y+z", fp, xyz);
    CHECK_THROWS_AS(a * a, ResourceError);
    budget::set_max_terms(saved);
    CHECK_NOTHROW(a * a);
}
