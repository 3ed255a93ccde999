#include "igusa/euclid.hpp"

#include <numeric>

namespace igusa {

PhiState phi_step(PhiState state, PhiState base)
{
    auto [s, t] = state;
    if (s <= 0 || t <= 0 || base.first <= 0 || base.second <= 0) throw Error("phi_step: arguments must be positive");
    if (s == t) return base;
    if (s > t) return {s - t, base.second};
    return {base.first, t - s};
}

PhiOrbit orbit(std::int64_t c, std::int64_t d)
{
    if (c <= 0 || d <= 0) throw Error("orbit: c and d must be positive");
    PhiOrbit o;
    o.c = c;
    o.d = d;
    const std::int64_t g = std::gcd(c, d);
    o.e = c / g;
    o.e_prime = d / g;
    o.states.push_back({c, d});
    do {
        o.states.push_back(phi_step(o.states.back(), {c, d}));
    } while (o.states.back() != o.states.front());
    o.period = static_cast<std::int64_t>(o.states.size()) - 1;
    return o;
}

MuNuSums mu_nu_sums(const PhiOrbit& orb, std::int64_t c_tilde, std::int64_t d_tilde)
{
    MuNuSums r;
    r.c_tilde = c_tilde;
    r.d_tilde = d_tilde;
    for (std::size_t k = 1; k < orb.states.size(); ++k) {
        auto [ck, dk] = orb.states[k];
        r.mu.push_back(std::min(ck, dk));
        r.nu.push_back(ck == dk ? c_tilde + d_tilde : (ck > dk ? d_tilde : c_tilde));
        r.mu_sum += r.mu.back();
        r.nu_sum += r.nu.back();
    }
    return r;
}

}  // namespace igusa
