#include <doctest.h>

#include <random>

#include "igusa/oracle.hpp"
#include "igusa/spf.hpp"
#include "reference.hpp"

using namespace igusa;

namespace {

Rational r(long a, long b = 1)
{
    Rational x(a, b);
    x.canonicalize();
    return x;
}

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

ResidueDomain full(const Polynomial& f, std::uint64_t p) { return ResidueDomain::full(f.num_vars(), p); }

}  // namespace

TEST_CASE("spf_counts examples")
{
    auto x = parse_polynomial("x");
    auto a = spf_counts(x, full(x, 5), PrimeSpec(5));
    CHECK(a.nu == r(4, 5));
    CHECK(a.sigma == r(1, 5));
    CHECK(a.singular.empty());
    auto sq = parse_polynomial("x^2");
    auto b = spf_counts(sq, full(sq, 5), PrimeSpec(5));
    CHECK(b.nu == r(4, 5));
    CHECK(b.sigma == 0);
    CHECK(b.singular == std::vector<ResiduePoint>{{0}});
    auto circle = parse_polynomial("x^2+y^2");
    auto c = spf_counts(circle, ResidueDomain::unit_torus(2, 3), PrimeSpec(3));
    CHECK(c.nu == r(4, 9));
    CHECK(c.sigma == 0);
    CHECK(c.singular.empty());
}

TEST_CASE("measure conservation at the top node")
{
    for (const auto& f : ref::random_corpus(30, 2, 61)) {
        for (std::uint64_t p : {2, 3, 5}) {
            for (const auto& d : {ResidueDomain::full(2, p), ResidueDomain::unit_torus(2, p)}) {
                auto c = spf_counts(f, d, PrimeSpec(p));
                const Rational cell(BigInt(1), PrimeSpec(p).pow(2));
                CHECK(c.nu + c.sigma + cell * static_cast<unsigned long>(c.singular.size()) ==
                      cell * static_cast<unsigned long>(d.points().size()));
            }
        }
    }
}

TEST_CASE("L_at and ell_at examples")
{
    CHECK(L_at(parse_polynomial("x^2 - 5"), big({0}), PrimeSpec(5)) == Valuation(1));
    CHECK(ell_at(parse_polynomial("x"), big({0}), PrimeSpec(7)) == Valuation(0));
    CHECK(L_at(parse_polynomial("x^2 + x"), big({0}), PrimeSpec(5)) == Valuation(0));
    CHECK_THROWS_AS(ell_at(parse_polynomial("x^2"), big({0}), PrimeSpec(5)), Error);
    CHECK_THROWS_AS(L_at(parse_polynomial("x^2"), big({0}), PrimeSpec(5)), Error);
}

TEST_CASE("sup_bound examples")
{
    auto x = parse_polynomial("x");
    CHECK(sup_bound(x, full(x, 5), PrimeSpec(5), BoundMode::ell, 8) == std::optional<std::uint64_t>(0));
    auto sq = parse_polynomial("x^2");
    CHECK_FALSE(sup_bound(sq, full(sq, 5), PrimeSpec(5), BoundMode::ell, 8).has_value());
    // x^2 + x is critical at -1/2, a 5-adic integer: the branch x = 2 mod 5 never closes
    auto q = parse_polynomial("x^2 + x");
    CHECK_FALSE(sup_bound(q, full(q, 5), PrimeSpec(5), BoundMode::ell, 8).has_value());
    // over Z_2 the derivative 2x + 1 is a unit
    CHECK(sup_bound(q, full(q, 2), PrimeSpec(2), BoundMode::ell, 8) == std::optional<std::uint64_t>(0));
    CHECK(sup_bound(q, full(q, 5), PrimeSpec(5), BoundMode::L, 8) == std::optional<std::uint64_t>(0));
}

TEST_CASE("sup_bound agrees with direct minimization")
{
    const PrimeSpec p(3);
    for (const char* s : {"x^2 - 3", "x^3 - 9*x", "x^2 + 27", "x^3 + 3*x + 9", "x*y - 3", "x^2 + 3*y"}) {
        auto f = parse_polynomial(s);
        for (auto mode : {BoundMode::L, BoundMode::ell}) {
            auto b = sup_bound(f, full(f, 3), p, mode, 6);
            if (!b) continue;
            CAPTURE(s);
            CHECK(*b == ref::brute_sup(f, 3, static_cast<unsigned>(*b + 1), mode == BoundMode::L));
        }
    }
}

TEST_CASE("spf_evaluate examples")
{
    auto x = parse_polynomial("x");
    auto a = spf_evaluate(x, full(x, 5), PrimeSpec(5));
    CHECK(a.zeta.numerator == UPoly::constant(r(4, 5)));
    CHECK(a.zeta.factors == std::vector<DenFactor>{{1, 1}});

    auto q = parse_polynomial("x^2 + x");
    auto b = spf_evaluate(q, full(q, 5), PrimeSpec(5));
    CHECK(expand(b.zeta, 9) == ref::naive_series(q, 5, 10));

    auto m = parse_polynomial("x^2 - 5");
    auto c = spf_evaluate(m, full(m, 5), PrimeSpec(5));
    CHECK(c.zeta.numerator == UPoly({r(4, 5), r(1, 5)}) * UPoly({r(1), r(-1, 5)}));
    REQUIRE(c.trace.children.size() == 1);
    CHECK(c.trace.children[0].order == 1);
    CHECK(c.trace.children[0].polynomial == "5*x^2 - 1");
    CHECK(c.trace.children[0].nu == 1);
    CHECK(expand(c.zeta, 7) == ref::naive_series(m, 5, 8));
}

TEST_CASE("singular points trip the guard")
{
    auto sq = parse_polynomial("x^2");
    CHECK_THROWS_AS(spf_evaluate(sq, full(sq, 5), PrimeSpec(5)), Error);
    auto cusp = parse_polynomial("x^2 + y^3");
    CHECK_THROWS_AS(spf_evaluate(cusp, full(cusp, 3), PrimeSpec(3), 6), Error);
}

TEST_CASE("spf matches the oracle series on the corpus")
{
    for (const char* s : {"x", "x^2+x", "x^2-5", "x+y", "x^2+3x+y", "x^3 - 3x - 9", "x*y - 2", "x^2 - 2*y^2 + 1"}) {
        for (std::uint64_t p : {2, 3, 5}) {
            auto f = parse_polynomial(s);
            CAPTURE(s);
            CAPTURE(p);
            SPFResult z;
            try {
                z = spf_evaluate(f, full(f, p), PrimeSpec(p));
            } catch (const Error&) {
                continue;  // singular point over this prime
            }
            CHECK(z.zeta.factors == std::vector<DenFactor>{{1, 1}});
            CHECK(expand(z.zeta, 6) == measure_series(count_mod(f, PrimeSpec(p), 7)));
        }
    }
}

TEST_CASE("perturbation beyond the proposition bound leaves the integral unchanged")
{
    std::mt19937 rng(13);
    for (const char* s : {"x^2 - 5", "x^2 + x", "x^3 - 3x - 9", "x*y - 2"}) {
        for (std::uint64_t p : {3, 5}) {
            auto f = parse_polynomial(s);
            const PrimeSpec ps(p);
            auto d = full(f, p);
            SPFResult base;
            try {
                base = spf_evaluate(f, d, ps);
            } catch (const Error&) {
                continue;
            }
            auto C = sup_bound(f, d, ps, BoundMode::L, 12);
            REQUIRE(C.has_value());
            const unsigned beta = static_cast<unsigned>(*C + base.max_path + 1);
            Polynomial g(f.variables());
            for (int k = 0; k < 3; ++k) {
                Monomial m(f.num_vars());
                for (auto& e : m) e = rng() % 4;
                g.add_term(m, static_cast<long>(rng() % 7) - 3);
            }
            auto F = f + g * ps.pow(beta);
            CHECK(spf_evaluate(F, d, ps).zeta.numerator == base.zeta.numerator);
        }
    }
}
