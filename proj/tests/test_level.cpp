#include <doctest.h>

#include <random>

#include "levelscope/level.hpp"
#include "levelscope/unipoly.hpp"

using namespace levelscope;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

MultiPoly mp(const std::string& text, Fp fp) { return MultiPoly::parse(text, fp, xyz); }

MultiPoly quintic(Fp fp) { return mp("y^2*z^3 - x^5 - 2*z^5", fp); }

MultiPoly random_homogeneous(Fp fp, u64 deg, std::mt19937_64& rng) {
    MultiPoly f(fp, 3);
    while (f.is_zero()) {
        for (int t = 0; t < 5; ++t) {
            u32 a = static_cast<u32>(rng() % (deg + 1));
            u32 b = static_cast<u32>(rng() % (deg - a + 1));
            f.add_term({a, b, static_cast<u32>(deg - a - b)}, rng() % fp.modulus());
        }
    }
    return f;
}

// Trace of Frobenius of y^2 = g(x) by direct point counting.
long long trace_of_frobenius(const UniPoly& g) {
    const u64 p = g.field().modulus();
    long long count = 1;  // point at infinity
    for (u64 x = 0; x < p; ++x) {
        u64 v = g.eval(x);
        if (v == 0) {
            count += 1;
            continue;
        }
        bool square = false;
        for (u64 y = 1; y <= p / 2; ++y) {
            if (y * y % p == v) {
                square = true;
                break;
            }
        }
        count += square ? 2 : 0;
    }
    return static_cast<long long>(p) + 1 - count;
}

}  // namespace

TEST_CASE("level of the genus-2 quintic across primes") {
    {
        LevelResult r = level_chain(quintic(Fp(11)));
        REQUIRE(r.level.has_value());
        CHECK(*r.level == 2);
        CHECK_FALSE(r.capped);
        REQUIRE(r.chain.size() == 2);
        HomIdeal expected(Fp(11), 3,
                          {mp("z^2", Fp(11)), mp("x*z", Fp(11)), mp("x^3", Fp(11))});
        CHECK(r.chain[0].equals(expected));
        CHECK(r.chain[1].equals(expected));
    }
    {
        LevelResult r = level_chain(quintic(Fp(13)));
        REQUIRE(r.level.has_value());
        CHECK(*r.level == 4);
        CHECK(r.chain.size() == 4);
    }
    {
        LevelResult r = level_chain(quintic(Fp(17)));
        REQUIRE(r.level.has_value());
        CHECK(*r.level == 3);
    }
}

TEST_CASE("level edge cases") {
    Fp fp(5);
    // A single variable has level 1: I_1(x^(p-1)) is the unit ideal.
    LevelResult r = level_chain(mp("x", fp));
    CHECK(r.level == 1);
    REQUIRE(r.chain.size() == 1);
    CHECK(r.chain[0].is_unit());

    CHECK(level_chain(mp("3", fp)).level == 1);

    CHECK_THROWS_AS(level_chain(mp("0", fp)), ArgumentError);
    CHECK_THROWS_AS(level_chain(mp("x", fp), 0), ArgumentError);

    // Chain not yet stabilized when e_max is hit: capped, no level claimed.
    LevelResult capped = level_chain(quintic(Fp(13)), 2);
    CHECK(capped.capped);
    CHECK_FALSE(capped.level.has_value());
    CHECK(capped.chain.size() == 2);
}

TEST_CASE("level_direct matches the definition and its budget") {
    Fp f3(3);
    // x^16 = (x)^[9] * x^7, so the ideal of 9th roots of x^16 is (x).
    HomIdeal i2 = level_direct(MultiPoly::parse("x^2", f3, {"x", "y"}), 2);
    CHECK(i2.equals(HomIdeal(f3, 2, {MultiPoly::parse("x", f3, {"x", "y"})})));

    CHECK_THROWS_AS(level_direct(quintic(Fp(11)), 3, 100), ResourceError);
    CHECK_THROWS_AS(level_direct(quintic(Fp(11)), 0), ArgumentError);
}

TEST_CASE("recursive chain agrees with the direct expansion") {
    std::mt19937_64 rng(101);
    for (u64 p : {3ull, 5ull}) {
        Fp fp(p);
        for (int trial = 0; trial < 6; ++trial) {
            MultiPoly f = random_homogeneous(fp, 4, rng);
            LevelResult r = level_chain(f, 4);
            for (int e = 1; e <= 2; ++e) {
                const HomIdeal& recursive =
                    r.chain[std::min<std::size_t>(e, r.chain.size()) - 1];
                CHECK(recursive.equals(level_direct(f, e, 100'000)));
            }
        }
    }
    // The published genus-2 example, both ways, at e = 1 and 2.
    MultiPoly f = quintic(Fp(11));
    LevelResult r = level_chain(f);
    CHECK(r.chain[0].equals(level_direct(f, 1)));
    CHECK(r.chain[1].equals(level_direct(f, 2, 100'000)));
}

TEST_CASE("level is invariant under linear changes of variables") {
    std::mt19937_64 rng(211);
    Fp fp(7);
    MultiPoly f = mp("y^2*z - x^3 - x*z^2", fp);
    LevelResult base = level_chain(f);
    for (int trial = 0; trial < 4; ++trial) {
        FpMatrix A(fp, 3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) A.set(i, j, rng() % 7);
        } while (A.rank() < 3);
        CHECK(level_chain(f.linear_change(A)).level == base.level);
    }
}

TEST_CASE("operator extraction certificate") {
    {
        MultiPoly f = quintic(Fp(11));
        LevelResult r = level_chain(f);
        FrobeniusOperator op = extract_operator(f, r);
        CHECK(op.e == 2);
        CHECK(op.recombine(Fp(11), 3) == f.pow(121 - 11));
        REQUIRE(op.pairs.size() == r.chain[1].generators().size());
        for (std::size_t j = 0; j < op.pairs.size(); ++j)
            CHECK(op.pairs[j].second == r.chain[1].generators()[j]);
    }
    {
        // Ordinary elliptic curve: level 1, trivial certificate f^0 = 1.
        Fp fp(5);
        MultiPoly f = mp("y^2*z - x^3 - x*z^2 - z^3", fp);
        LevelResult r = level_chain(f);
        REQUIRE(r.level == 1);
        FrobeniusOperator op = extract_operator(f, r);
        CHECK(op.recombine(fp, 3).is_one());
    }
    {
        // Supersingular elliptic curve over F_7: level 2.
        Fp fp(7);
        MultiPoly f = mp("y^2*z - x^3 - x*z^2", fp);
        LevelResult r = level_chain(f);
        REQUIRE(r.level == 2);
        FrobeniusOperator op = extract_operator(f, r);
        CHECK(op.recombine(fp, 3) == f.pow(49 - 7));
    }
    // Budget guard: p^e above max_q is refused, not attempted.
    MultiPoly f = quintic(Fp(13));
    LevelResult r = level_chain(f);
    CHECK_THROWS_AS(extract_operator(f, r), ResourceError);
}

TEST_CASE("hasse_invariant examples") {
    Fp f3(3);
    CHECK(hasse_invariant(mp("y^2*z - x^3 - x^2*z", f3)) == 1);
    CHECK(hasse_invariant(mp("y^2*z - x^3 - x*z^2", Fp(7))) == 0);
    CHECK_THROWS_AS(hasse_invariant(mp("x^2", f3)), ArgumentError);
    CHECK_THROWS_AS(hasse_invariant(MultiPoly::parse("x^3", f3, {"x", "y"})), ArgumentError);
}

TEST_CASE("hasse_invariant equals the trace of Frobenius mod p") {
    for (u64 p : {3ull, 5ull, 7ull, 11ull}) {
        Fp fp(p);
        for (u64 a = 0; a < std::min<u64>(p, 5); ++a) {
            for (u64 b = 1; b < std::min<u64>(p, 5); ++b) {
                UniPoly g(fp, {b, a, 0, 1});  // x^3 + a*x + b
                if (!g.is_squarefree()) continue;
                // Homogenize x^3 + a x + b against z by hand.
                MultiPoly cubic(fp, 3);
                cubic.add_term({3, 0, 0}, 1);
                if (a) cubic.add_term({1, 0, 2}, a);
                cubic.add_term({0, 0, 3}, b);
                MultiPoly f = mp("y^2*z", fp) - cubic;
                long long t = trace_of_frobenius(g);
                CHECK(hasse_invariant(f) == fp.reduce_signed(t));
            }
        }
    }
}

TEST_CASE("elliptic level is 1 for ordinary and 2 for supersingular") {
    for (u64 p : {3ull, 5ull, 7ull}) {
        Fp fp(p);
        for (u64 a = 0; a < p; ++a) {
            for (u64 b = 0; b < p; ++b) {
                UniPoly g(fp, {b, a, 0, 1});
                if (!g.is_squarefree()) continue;
                MultiPoly cubic(fp, 3);
                cubic.add_term({3, 0, 0}, 1);
                if (a) cubic.add_term({1, 0, 2}, a);
                if (b) cubic.add_term({0, 0, 3}, b);
                MultiPoly f = mp("y^2*z", fp) - cubic;
                int expected = hasse_invariant(f) == 0 ? 2 : 1;
                CHECK(level_chain(f).level == expected);
            }
        }
    }
}
