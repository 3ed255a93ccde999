#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "igusa/numeric.hpp"

namespace igusa {

using PhiState = std::pair<std::int64_t, std::int64_t>;

/// One application of the subtractive map with base (c, d).
PhiState phi_step(PhiState state, PhiState base);

struct PhiOrbit {
    std::int64_t c = 0, d = 0;
    std::int64_t e = 0, e_prime = 0;
    std::int64_t period = 0;
    std::vector<PhiState> states;  // states[0] is (c, d); size period + 1
};

PhiOrbit orbit(std::int64_t c, std::int64_t d);

struct MuNuSums {
    std::int64_t c_tilde = 0, d_tilde = 0;
    std::vector<std::int64_t> mu, nu;  // entries for states 2..period+1
    std::int64_t mu_sum = 0, nu_sum = 0;
};

MuNuSums mu_nu_sums(const PhiOrbit& orb, std::int64_t c_tilde, std::int64_t d_tilde);

}  // namespace igusa
