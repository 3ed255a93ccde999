#include <doctest.h>

#include <numeric>
#include <random>

#include "igusa/euclid.hpp"

using namespace igusa;

TEST_CASE("phi_step examples")
{
    CHECK(phi_step({2, 3}, {2, 3}) == PhiState{2, 1});
    CHECK(phi_step({2, 1}, {2, 3}) == PhiState{1, 3});
    CHECK(phi_step({4, 4}, {4, 6}) == PhiState{4, 6});
    CHECK_THROWS_AS(phi_step({0, 1}, {1, 1}), Error);
}

TEST_CASE("orbit examples")
{
    auto o = orbit(2, 3);
    CHECK(o.period == 4);
    CHECK(o.states == std::vector<PhiState>{{2, 3}, {2, 1}, {1, 3}, {2, 2}, {2, 3}});
    auto one = orbit(1, 1);
    CHECK(one.period == 1);
    CHECK(one.states == std::vector<PhiState>{{1, 1}, {1, 1}});
    auto two = orbit(2, 4);
    CHECK(two.e == 1);
    CHECK(two.e_prime == 2);
    CHECK(two.period == 2);
    CHECK(two.states == std::vector<PhiState>{{2, 4}, {2, 2}, {2, 4}});
}

TEST_CASE("mu_nu_sums examples")
{
    auto s = mu_nu_sums(orbit(2, 3), 1, 1);
    CHECK(s.mu == std::vector<std::int64_t>{1, 1, 2, 2});
    CHECK(s.mu_sum == 6);
    CHECK(s.nu_sum == 5);
    auto t = mu_nu_sums(orbit(1, 1), 4, 9);
    CHECK(t.mu_sum == 1);
    CHECK(t.nu_sum == 13);
    CHECK(mu_nu_sums(orbit(2, 4), 0, 0).nu_sum == 0);
}

TEST_CASE("lemma identities for all c, d up to 40")
{
    std::mt19937 rng(17);
    for (std::int64_t c = 1; c <= 40; ++c) {
        for (std::int64_t d = 1; d <= 40; ++d) {
            auto o = orbit(c, d);
            const std::int64_t g = std::gcd(c, d);
            REQUIRE(o.period == c / g + d / g - 1);
            REQUIRE(o.states.front() == o.states.back());
            for (std::size_t k = 0; k + 1 < o.states.size(); ++k) REQUIRE(phi_step(o.states[k], {c, d}) == o.states[k + 1]);
            REQUIRE(orbit(d, c).period == o.period);
            for (int r = 0; r < 20; ++r) {
                std::int64_t ct = rng() % 50, dt = rng() % 50;
                auto s = mu_nu_sums(o, ct, dt);
                REQUIRE(s.mu_sum == std::lcm(c, d));
                REQUIRE(s.nu_sum == o.e * dt + o.e_prime * ct);
            }
        }
    }
}
