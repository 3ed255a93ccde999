#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "igusa/newton.hpp"
#include "igusa/noncrit.hpp"

namespace igusa {

/// 1 - q^{-q_power} t^{t_power}, or no factor at all when not finite.
struct AffineExponent {
    bool finite = false;
    std::int64_t t_power = 0;
    std::int64_t q_power = 0;
};

AffineExponent c_ab(std::int64_t m_f, std::int64_t m_g, std::int64_t abs_a, std::int64_t abs_b);

struct PairFactor {
    WeightVector a, b;
    std::int64_t m_f = 0, m_g = 0;
    AffineExponent exponent;
};

/// (A, B) meaning the factor 1 - q^{-A} t^B.
using DenFactor = std::pair<std::int64_t, std::int64_t>;

struct TSDenominator {
    DenFactor universal{1, 1};
    std::vector<PairFactor> pairs;  // every (a, b), inert ones included
    std::vector<std::string> warnings;

    /// Universal factor first, then every finite pair factor with multiplicity.
    std::vector<DenFactor> factors() const;
};

TSDenominator denominator(const Polynomial& f, const Polynomial& g, const NonCritParams& params = {});

/// Real parts of the candidate poles, ascending.
std::vector<Rational> candidate_poles(const TSDenominator& den);

}  // namespace igusa
