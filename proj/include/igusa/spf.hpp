#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "igusa/mpoly.hpp"
#include "igusa/ratfun.hpp"

namespace igusa {

using ResiduePoint = std::vector<std::uint64_t>;

/// Preimage in O^n of a set of residues in F_p^n.
class ResidueDomain {
public:
    static ResidueDomain full(std::size_t n, std::uint64_t p);
    static ResidueDomain unit_torus(std::size_t n, std::uint64_t p);
    static ResidueDomain empty(std::size_t n, std::uint64_t p);
    static ResidueDomain from_points(std::size_t n, std::uint64_t p, std::set<ResiduePoint> points);

    std::size_t dim() const noexcept { return n_; }
    std::uint64_t prime() const noexcept { return p_; }
    bool contains(const ResiduePoint& x) const;
    std::vector<ResiduePoint> points() const;
    std::string describe() const;

private:
    enum class Kind { full, torus, listed };
    Kind kind_ = Kind::full;
    std::size_t n_ = 0;
    std::uint64_t p_ = 2;
    std::set<ResiduePoint> listed_;
};

struct SPFCounts {
    Rational nu, sigma;
    std::vector<ResiduePoint> singular;  // representatives in {0..p-1}
};

SPFCounts spf_counts(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p);

/// min(v(f(P)), v(grad f(P))); throws when P is a singular point.
Valuation L_at(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p);
/// min v(grad f(P)); throws when P is a critical point.
Valuation ell_at(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p);

enum class BoundMode { L, ell };

/// Supremum of L or ell over the domain, nullopt if some branch is still open at max_depth.
std::optional<std::uint64_t> sup_bound(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p, BoundMode mode,
                                       unsigned max_depth);

struct SPFNode {
    std::vector<ResiduePoint> path;
    std::uint64_t order = 0;       // e of the last step
    std::uint64_t cumulative = 0;  // running sum of orders
    std::string polynomial;
    Rational nu, sigma;
    std::size_t singular = 0;
    bool shared = false;  // subtree identical to an earlier node
    std::vector<SPFNode> children;
};

struct SPFResult {
    RationalZeta zeta;
    SPFNode trace;
    std::size_t max_path = 0;  // longest chain of singular lifts
};

SPFResult spf_evaluate(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p, unsigned depth_guard = 32);

}  // namespace igusa
