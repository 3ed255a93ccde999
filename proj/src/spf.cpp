#include "igusa/spf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace igusa {

namespace {

// Calls fn on every point of {0..p-1}^n.
template <class Fn>
void for_each_residue(std::size_t n, std::uint64_t p, Fn&& fn)
{
    ResiduePoint x(n, 0);
    for (;;) {
        fn(x);
        std::size_t i = 0;
        while (i < n && x[i] == p - 1) x[i++] = 0;
        if (i == n) return;
        ++x[i];
    }
}

std::vector<BigInt> to_big(const ResiduePoint& x)
{
    std::vector<BigInt> r;
    for (auto v : x) r.emplace_back(static_cast<unsigned long>(v));
    return r;
}

}  // namespace

ResidueDomain ResidueDomain::full(std::size_t n, std::uint64_t p)
{
    ResidueDomain d;
    d.kind_ = Kind::full;
    d.n_ = n;
    d.p_ = PrimeSpec(p).value();
    return d;
}

ResidueDomain ResidueDomain::unit_torus(std::size_t n, std::uint64_t p)
{
    ResidueDomain d = full(n, p);
    d.kind_ = Kind::torus;
    return d;
}

ResidueDomain ResidueDomain::empty(std::size_t n, std::uint64_t p) { return from_points(n, p, {}); }

ResidueDomain ResidueDomain::from_points(std::size_t n, std::uint64_t p, std::set<ResiduePoint> points)
{
    ResidueDomain d = full(n, p);
    d.kind_ = Kind::listed;
    for (const auto& x : points) {
        if (x.size() != n) throw Error("residue point arity mismatch");
        for (auto v : x)
            if (v >= p) throw Error("residue point coordinate out of range");
    }
    d.listed_ = std::move(points);
    return d;
}

bool ResidueDomain::contains(const ResiduePoint& x) const
{
    switch (kind_) {
    case Kind::full: return true;
    case Kind::torus: return std::none_of(x.begin(), x.end(), [](auto v) { return v == 0; });
    default: return listed_.count(x) > 0;
    }
}

std::vector<ResiduePoint> ResidueDomain::points() const
{
    if (kind_ == Kind::listed) return {listed_.begin(), listed_.end()};
    std::vector<ResiduePoint> out;
    for_each_residue(n_, p_, [&](const ResiduePoint& x) {
        if (contains(x)) out.push_back(x);
    });
    return out;
}

std::string ResidueDomain::describe() const
{
    switch (kind_) {
    case Kind::full: return "full";
    case Kind::torus: return "unit_torus";
    default: return "listed(" + std::to_string(listed_.size()) + ")";
    }
}

SPFCounts spf_counts(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p)
{
    if (d.dim() != f.num_vars() || d.prime() != p.value()) throw Error("spf_counts: domain does not match f and p");
    const FpPolynomial fb = reduce_mod_p(f, p);
    const auto grad = fb.partials();
    SPFCounts c;
    std::uint64_t nonzero = 0, smooth = 0;
    for (const auto& x : d.points()) {
        if (fb.evaluate(x) != 0) {
            ++nonzero;
        } else if (std::any_of(grad.begin(), grad.end(), [&](const FpPolynomial& g) { return g.evaluate(x) != 0; })) {
            ++smooth;
        } else {
            c.singular.push_back(x);
        }
    }
    const Rational vol = inv_prime_power(p, f.num_vars());
    c.nu = Rational(BigInt(static_cast<unsigned long>(nonzero))) * vol;
    c.sigma = Rational(BigInt(static_cast<unsigned long>(smooth))) * vol;
    return c;
}

Valuation ell_at(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p)
{
    Valuation v;
    for (const auto& d : f.partials()) v = min(v, p_valuation(d.evaluate(point), p));
    if (v.is_infinite()) throw Error("ell_at: point is a critical point");
    return v;
}

Valuation L_at(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p)
{
    Valuation v = p_valuation(f.evaluate(point), p);
    for (const auto& d : f.partials()) v = min(v, p_valuation(d.evaluate(point), p));
    if (v.is_infinite()) throw Error("L_at: point is a singular point");
    return v;
}

std::optional<std::uint64_t> sup_bound(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p, BoundMode mode,
                                       unsigned max_depth)
{
    std::vector<Polynomial> rel = f.partials();
    if (mode == BoundMode::L) rel.push_back(f);
    const std::size_t n = f.num_vars();
    std::uint64_t best = 0;
    // depth-first over classes x mod p^level
    struct Item {
        std::vector<BigInt> x;
        unsigned level;
    };
    std::vector<Item> stack;
    for (const auto& r : d.points()) stack.push_back({to_big(r), 1});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        Valuation v;
        for (const auto& h : rel) {
            Valuation w = p_valuation(h.evaluate(it.x), p);
            if (w < Valuation(it.level)) v = min(v, w);
        }
        if (v.is_finite()) {
            best = std::max(best, v.value());
            continue;
        }
        if (it.level >= max_depth) return std::nullopt;
        const BigInt step = p.pow(it.level);
        for_each_residue(n, p.value(), [&](const ResiduePoint& t) {
            Item child{it.x, it.level + 1};
            for (std::size_t i = 0; i < n; ++i) child.x[i] += step * static_cast<unsigned long>(t[i]);
            stack.push_back(std::move(child));
        });
    }
    return best;
}

namespace {

struct Memo {
    UPoly numerator;
    std::size_t height = 0;
};

class Evaluator {
public:
    Evaluator(const PrimeSpec& p, unsigned guard) : p_(p), guard_(guard) {}

    // Numerator over (1 - t/q) of the integral over the domain; fills the trace node.
    Memo run(const Polynomial& f, const ResidueDomain& d, SPFNode& node)
    {
        if (node.path.size() > guard_) {
            std::ostringstream os;
            os << "spf_evaluate: depth guard " << guard_ << " exceeded along path";
            for (const auto& pt : node.path) {
                os << " (";
                for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
                os << ")";
            }
            throw Error(os.str() + "; f has a singular point in the domain");
        }
        node.polynomial = f.to_string();
        const bool memoizable = d.describe() == "full";
        if (memoizable) {
            if (active_.count(node.polynomial))
                throw Error("spf_evaluate: recursion returns to " + node.polynomial + "; f has a singular point in the domain");
            if (auto it = memo_.find(node.polynomial); it != memo_.end()) {
                node.shared = true;
                return it->second;
            }
            active_.insert(node.polynomial);
        }
        const SPFCounts c = spf_counts(f, d, p_);
        node.nu = c.nu;
        node.sigma = c.sigma;
        node.singular = c.singular.size();
        const Rational qinv = inv_prime_power(p_, 1);
        // nu (1 - t/q) + sigma (1 - 1/q) t
        Memo out;
        out.numerator = UPoly(std::vector<Rational>{c.nu, c.sigma * (1 - qinv) - c.nu * qinv});
        const Rational cell = inv_prime_power(p_, f.num_vars());
        const auto full = ResidueDomain::full(f.num_vars(), p_.value());
        for (const auto& pt : c.singular) {
            const auto big = to_big(pt);
            ShiftScaleResult ss = shift_scale(f, big, p_);
            SPFNode child;
            child.path = node.path;
            child.path.push_back(pt);
            child.order = ss.order;
            child.cumulative = node.cumulative + ss.order;
            Memo sub = run(ss.transformed, full, child);
            out.numerator += sub.numerator * UPoly::monomial(cell, ss.order);
            out.height = std::max(out.height, sub.height + 1);
            node.children.push_back(std::move(child));
        }
        if (memoizable) {
            active_.erase(node.polynomial);
            memo_.emplace(node.polynomial, out);
        }
        return out;
    }

private:
    PrimeSpec p_;
    unsigned guard_;
    std::map<std::string, Memo> memo_;
    std::set<std::string> active_;
};

}  // namespace

SPFResult spf_evaluate(const Polynomial& f, const ResidueDomain& d, const PrimeSpec& p, unsigned depth_guard)
{
    if (f.is_zero()) throw Error("spf_evaluate: f = 0");
    if (d.dim() != f.num_vars() || d.prime() != p.value()) throw Error("spf_evaluate: domain does not match f and p");
    Evaluator ev(p, depth_guard);
    SPFResult r;
    Memo m = ev.run(f, d, r.trace);
    r.zeta.numerator = m.numerator;
    r.zeta.factors = {{1, 1}};
    r.zeta.q = p.value();
    r.max_path = m.height;
    return r;
}

}  // namespace igusa
