#include <doctest.h>

#include <random>

#include "igusa/numeric.hpp"

using namespace igusa;

TEST_CASE("p_valuation examples")
{
    CHECK(p_valuation(BigInt(12), PrimeSpec(2)) == Valuation(2));
    CHECK(p_valuation(BigInt(0), PrimeSpec(5)).is_infinite());
    CHECK(p_valuation(BigInt(5), PrimeSpec(5)) == Valuation(1));
    CHECK(p_valuation(BigInt(-250), PrimeSpec(5)) == Valuation(3));
}

TEST_CASE("valuation infinity participates in min and ordering")
{
    Valuation inf;
    CHECK(inf.is_infinite());
    CHECK(min(inf, Valuation(3)) == Valuation(3));
    CHECK(Valuation(7) < inf);
    CHECK((inf + Valuation(1)).is_infinite());
    CHECK_THROWS_AS(inf.value(), Error);
    CHECK(inf.to_string() == "inf");
}

TEST_CASE("rational arithmetic examples")
{
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(4, 5) * Rational(5, 4) == 1);
    CHECK(1 - inv_prime_power(PrimeSpec(5), 1) == Rational(4, 5));
    CHECK_THROWS_AS(checked_div(Rational(1), Rational(0)), Error);
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("prime checking")
{
    CHECK_NOTHROW(PrimeSpec(2));
    CHECK_NOTHROW(PrimeSpec(101));
    CHECK_THROWS_AS(PrimeSpec(1), Error);
    CHECK_THROWS_AS(PrimeSpec(91), Error);
}

TEST_CASE("valuation is additive on random 64-bit products")
{
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        PrimeSpec ps(p);
        for (int i = 0; i < 500; ++i) {
            BigInt x = static_cast<unsigned long>(rng() | 1), y = static_cast<unsigned long>(rng() | 1);
            x *= ps.pow(rng() % 5);
            y *= ps.pow(rng() % 5);
            CHECK(p_valuation(BigInt(x * y), ps) == p_valuation(x, ps) + p_valuation(y, ps));
        }
    }
}

TEST_CASE("rational field axioms on random triples")
{
    std::mt19937 rng(11);
    auto draw = [&] {
        Rational r(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 999) + 1);
        r.canonicalize();
        return r;
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (b != 0) CHECK(checked_div(a, b) * b == a);
    }
}

TEST_CASE("modular residues")
{
    PrimeSpec p(5);
    ModResidue a(BigInt(23), 2, p), b(BigInt(4), 2, p);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 92 % 25);
    CHECK((-a).value() == 2);
    CHECK(ModResidue(BigInt(-1), 2, p).value() == 24);
    CHECK_THROWS(ModResidue(BigInt(3), 0, p));
    Mod64 m{checked_pow_u64(5, 20)};
    CHECK(m.pow(5, 20) == 0);
    CHECK(m.mul(m.m - 1, m.m - 1) == 1);
    CHECK_THROWS(checked_pow_u64(5, 40));
    CHECK(inv_mod_prime(3, 7) == 5);
}
