#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/tsden.hpp"
#include "igusa/upoly.hpp"

namespace igusa {

/// Coefficients of t^0 .. t^depth.
using PowerSeries = std::vector<Rational>;

/// numerator(t) / prod (1 - q^{-A} t^B) at a specialized q.
struct RationalZeta {
    UPoly numerator;
    std::vector<DenFactor> factors;
    std::uint64_t q = 0;

    std::string to_string() const;
};

/// prod (1 - q^{-A} t^B) expanded.
UPoly denominator_poly(const std::vector<DenFactor>& factors, std::uint64_t q);

PowerSeries expand(const RationalZeta& z, std::size_t depth);

struct Recovery {
    bool ok = false;
    UPoly numerator;                // product truncated to degree max_deg
    std::vector<Rational> residual;  // product coefficients of degree max_deg+1 .. depth
};

/// Multiplies the series by the denominator; succeeds iff everything above max_deg vanishes.
/// Needs more coefficients than max_deg + 1.
Recovery recover_numerator(const PowerSeries& series, const std::vector<DenFactor>& factors, std::uint64_t q,
                           std::int64_t max_deg);

/// True iff the product with the denominator vanishes from degree `start` on. Needs depth >= start + sum B.
bool check_recurrence(const PowerSeries& series, const std::vector<DenFactor>& factors, std::uint64_t q,
                      std::size_t start);

struct Reduction {
    UPoly numerator;    // after cancelling the common part
    UPoly denominator;  // reduced, expanded
    std::vector<Rational> surviving_poles;  // real parts, ascending
    std::vector<Rational> cancelled_poles;
};

/// Cancels gcd(numerator, denominator) over Q and reports which pole real parts remain.
Reduction reduce(const RationalZeta& z);

}  // namespace igusa
