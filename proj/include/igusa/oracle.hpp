#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igusa/mpoly.hpp"
#include "igusa/newton.hpp"
#include "igusa/ratfun.hpp"
#include "igusa/spf.hpp"
#include "igusa/tsden.hpp"

namespace igusa {

enum class Membership { outside, inside, undecided };

/// What x_i mod p^m says about v(x_i): exactly `low`, or at least `low` when x_i = 0 mod p^m.
struct ValuationBound {
    std::uint64_t low = 0;
    bool exact = true;
};

using ValuationPredicate = std::function<Membership(std::span<const ValuationBound>)>;

/// A set A of valuation vectors given as a product of blocks over disjoint coordinate ranges.
struct ConeDomainSpec {
    struct Block {
        std::size_t offset = 0;
        std::size_t dim = 0;
        ValuationPredicate member;
    };
    std::vector<Block> blocks;
    std::string label;

    Membership classify(std::span<const ValuationBound> v) const;
};

/// {0}.
ValuationPredicate origin_predicate();
/// Vectors k != 0 whose first meet locus is the given proper face.
ValuationPredicate face_cone_predicate(const NewtonPolyhedron& poly, std::size_t face);
/// Lattice points of a simplicial cone with per-generator strictness.
ValuationPredicate simplicial_cone_predicate(const Cone& cone);

struct CountSeries {
    Polynomial f;
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::vector<BigInt> counts;     // N_1 .. N_depth
    std::vector<BigInt> undecided;  // classes whose membership is not yet determined (restricted counts only)
    bool restricted = false;
    std::string domain;
    std::size_t requested_depth = 0;
    bool truncated = false;
    std::uint64_t nodes = 0;
};

struct CountOptions {
    std::uint64_t budget = 100'000'000;  // residue classes visited
    unsigned threads = 0;                // 0: from IGUSA_THREADS, default 1
};

CountSeries count_mod(const Polynomial& f, const PrimeSpec& p, std::size_t depth,
                      const std::optional<ConeDomainSpec>& domain = std::nullopt, const CountOptions& opt = {});

/// Coefficients 0 .. depth-1 of the measure series; unrestricted counts only.
PowerSeries measure_series(const CountSeries& c);

struct VerifyReport {
    bool ok = false;
    Polynomial sum;
    TSDenominator den;
    CountSeries counts;
    PowerSeries series;
    std::int64_t max_deg = 0;
    Recovery recovery;
    Reduction reduction;
    std::vector<Rational> candidates;
    std::optional<bool> spf_agrees;  // set when the stationary phase recursion terminates
    std::vector<std::string> notes;
};

/// The sum of t-powers of the denominator, capped so that two residual coefficients remain.
std::int64_t default_max_deg(const TSDenominator& den, std::size_t depth);

/// Series depth `depth` needs counts to depth + 1.
VerifyReport verify_theorem(const Polynomial& f, const Polynomial& g, const PrimeSpec& p, std::size_t depth,
                            std::optional<std::int64_t> max_deg = std::nullopt, const CountOptions& opt = {});

}  // namespace igusa
