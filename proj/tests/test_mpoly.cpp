#include <doctest.h>

#include <random>

#include "igusa/mpoly.hpp"
#include "reference.hpp"

using namespace igusa;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs)
{
    std::vector<BigInt> r;
    for (auto x : xs) r.emplace_back(x);
    return r;
}

}  // namespace

TEST_CASE("evaluate examples")
{
    auto f = parse_polynomial("x^2 + y^3");
    CHECK(f.evaluate(big({2, 1})) == 5);
    CHECK(parse_polynomial("x^2").evaluate(big({0})) == 0);
    PrimeSpec p(5);
    std::vector<ModResidue> pt{ModResidue(1, 1, p), ModResidue(2, 1, p)};
    CHECK(f.evaluate(pt).value() == 4);
    CHECK_THROWS_AS(f.evaluate(big({1})), Error);
}

TEST_CASE("partials examples")
{
    auto f = parse_polynomial("x1^2 + x1*x2");
    auto d = f.partials();
    REQUIRE(d.size() == 2);
    CHECK(d[0] == parse_polynomial("2*x1 + x2", {"x1", "x2"}));
    CHECK(d[1] == parse_polynomial("x1", {"x1", "x2"}));
    auto c = parse_polynomial("7", {"x", "y"}).partials();
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());
    auto g = parse_polynomial("x^2+y^3").partials();
    CHECK(g[0] == parse_polynomial("2x", {"x", "y"}));
    CHECK(g[1] == parse_polynomial("3y^2", {"x", "y"}));
}

TEST_CASE("shift_scale examples")
{
    PrimeSpec p(5);
    auto zero = big({0});
    auto r1 = shift_scale(parse_polynomial("x^2"), zero, p);
    CHECK(r1.order == 2);
    CHECK(r1.transformed == parse_polynomial("x^2"));
    auto r2 = shift_scale(parse_polynomial("x^2 + 5x"), zero, p);
    CHECK(r2.order == 2);
    CHECK(r2.transformed == parse_polynomial("x^2 + x"));
    auto r3 = shift_scale(parse_polynomial("x^2 - 5"), zero, p);
    CHECK(r3.order == 1);
    CHECK(r3.transformed == parse_polynomial("5x^2 - 1"));
    CHECK_THROWS_AS(shift_scale(Polynomial({"x"}), zero, p), Error);
}

TEST_CASE("monomial_scale examples")
{
    std::vector<unsigned> k32{3, 2}, k11{1, 1}, k1{1};
    auto r1 = monomial_scale(parse_polynomial("x^2+y^3"), k32, PrimeSpec(5));
    CHECK(r1.order == 6);
    CHECK(r1.transformed == parse_polynomial("x^2+y^3"));
    auto r2 = monomial_scale(parse_polynomial("x"), k1, PrimeSpec(3));
    CHECK(r2.order == 1);
    CHECK(r2.transformed == parse_polynomial("x"));
    auto r3 = monomial_scale(parse_polynomial("x^2+y^3"), k11, PrimeSpec(5));
    CHECK(r3.order == 2);
    CHECK(r3.transformed == parse_polynomial("x^2 + 5y^3"));
}

TEST_CASE("reduce_mod_p examples")
{
    CHECK(reduce_mod_p(parse_polynomial("5x^2 + 3x"), 5).to_string() == "3*x");
    CHECK(reduce_mod_p(parse_polynomial("x^2+y^3"), 7).to_string() == "y^3 + x^2");
    CHECK(reduce_mod_p(parse_polynomial("10", {"x"}), 5).is_zero());
}

TEST_CASE("shift_scale round trip and order on random inputs")
{
    std::mt19937 rng(3);
    for (const auto& f : ref::random_corpus(40, 2, 5)) {
        for (std::uint64_t p : {2, 3, 5}) {
            PrimeSpec ps(p);
            std::vector<BigInt> P{BigInt(static_cast<long>(rng() % 9) - 4), BigInt(static_cast<long>(rng() % 9) - 4)};
            auto r = shift_scale(f, P, ps);
            std::vector<BigInt> scale(2, ps.big());
            Polynomial direct = substitute_affine(f, P, scale);
            CHECK(r.transformed * ps.pow(r.order) == direct);
            Valuation v;
            for (const auto& [m, c] : direct.terms()) v = min(v, p_valuation(c, ps));
            CHECK(v == Valuation(r.order));
            CHECK(p_valuation(r.transformed.content(), ps) == Valuation(0));
        }
    }
}

TEST_CASE("formal derivative commutes with reduction")
{
    for (const auto& f : ref::random_corpus(40, 3, 9)) {
        for (std::uint64_t p : {2, 3, 5}) {
            auto a = reduce_mod_p(f, p).partials();
            auto fp = f.partials();
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == reduce_mod_p(fp[i], p));
        }
    }
}

TEST_CASE("parser")
{
    auto f = parse_polynomial("x^2 + y^3");
    CHECK(f.support() == std::vector<Monomial>{{2, 0}, {0, 3}});
    CHECK(parse_polynomial("3x - 3x").is_zero());
    auto g = parse_polynomial("x1^2*x2 + 5");
    CHECK(g.coefficient({2, 1}) == 1);
    CHECK(g.coefficient({0, 0}) == 5);
    CHECK(g.num_terms() == 2);
    CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^2000000"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + * y"), ParseError);
}

TEST_CASE("print then parse is the identity on canonical forms")
{
    for (const auto& f : ref::random_corpus(60, 3, 21)) {
        auto g = parse_polynomial(f.to_string(), f.variables());
        CHECK(g == f);
        CHECK(g.to_string() == f.to_string());
    }
}

TEST_CASE("direct sum keeps variables apart")
{
    auto s = direct_sum(parse_polynomial("x^2"), parse_polynomial("y^3"));
    CHECK(s.variables() == std::vector<std::string>{"x", "y"});
    CHECK(s == parse_polynomial("x^2 + y^3"));
    CHECK_THROWS_AS(direct_sum(parse_polynomial("x^2"), parse_polynomial("x^3")), Error);
}
