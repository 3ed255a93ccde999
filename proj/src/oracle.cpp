#include "igusa/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "igusa/linalg.hpp"

namespace igusa {

namespace {

// Range of an integer linear form over the valuation box; infinite ends flagged.
struct Range {
    std::int64_t lo = 0, hi = 0;
    bool lo_inf = false, hi_inf = false;
};

Range eval_form(const std::vector<std::int64_t>& c, std::span<const ValuationBound> v)
{
    Range r;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const auto x = static_cast<std::int64_t>(v[i].low) * c[i];
        r.lo += x;
        r.hi += x;
        if (!v[i].exact) (c[i] > 0 ? r.hi_inf : r.lo_inf) = true;
    }
    return r;
}

// form == 0
Membership zero_test(const Range& r)
{
    if (!r.lo_inf && !r.hi_inf && r.lo == 0 && r.hi == 0) return Membership::inside;
    if ((!r.lo_inf && r.lo > 0) || (!r.hi_inf && r.hi < 0)) return Membership::outside;
    return Membership::undecided;
}

// form > 0, or >= 0 when not strict
Membership sign_test(const Range& r, bool strict)
{
    if (!r.lo_inf && (strict ? r.lo > 0 : r.lo >= 0)) return Membership::inside;
    if (!r.hi_inf && (strict ? r.hi <= 0 : r.hi < 0)) return Membership::outside;
    return Membership::undecided;
}

void meet(Membership& acc, Membership m)
{
    if (acc == Membership::outside || m == Membership::outside)
        acc = Membership::outside;
    else if (m == Membership::undecided)
        acc = Membership::undecided;
}

}  // namespace

Membership ConeDomainSpec::classify(std::span<const ValuationBound> v) const
{
    Membership acc = Membership::inside;
    for (const auto& b : blocks) {
        if (b.offset + b.dim > v.size()) throw Error("cone domain block exceeds the variable count");
        meet(acc, b.member(v.subspan(b.offset, b.dim)));
        if (acc == Membership::outside) break;
    }
    return acc;
}

ValuationPredicate origin_predicate()
{
    return [](std::span<const ValuationBound> v) {
        Membership acc = Membership::inside;
        for (const auto& b : v) meet(acc, (b.exact && b.low == 0) ? Membership::inside : Membership::outside);
        return acc;
    };
}

ValuationPredicate face_cone_predicate(const NewtonPolyhedron& poly, std::size_t face_index)
{
    const Face& face = poly.faces().at(face_index);
    if (face.improper) throw Error("face_cone_predicate: the improper face has no cone");
    const auto& supp = poly.support();
    const std::size_t n = poly.ambient_dim();
    std::vector<std::vector<std::int64_t>> equal, greater;
    const Monomial& base = supp[face.meet.front()];
    auto diff = [&](const Monomial& a) {
        std::vector<std::int64_t> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(base[i]);
        return d;
    };
    for (std::size_t k = 0; k < supp.size(); ++k) {
        if (std::binary_search(face.meet.begin(), face.meet.end(), k))
            equal.push_back(diff(supp[k]));
        else
            greater.push_back(diff(supp[k]));
    }
    std::vector<bool> is_ray(n, false);
    for (auto r : face.rays) is_ray[r] = true;
    return [equal, greater, is_ray](std::span<const ValuationBound> v) {
        Membership acc = Membership::inside;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const bool zero = v[i].exact && v[i].low == 0;
            meet(acc, zero == is_ray[i] ? Membership::inside : Membership::outside);
        }
        for (const auto& c : equal) meet(acc, zero_test(eval_form(c, v)));
        for (const auto& c : greater) meet(acc, sign_test(eval_form(c, v), true));
        return acc;
    };
}

ValuationPredicate simplicial_cone_predicate(const Cone& cone)
{
    if (!cone.is_simplicial()) throw Error("simplicial_cone_predicate: generators are dependent");
    const std::size_t d = cone.generators.size();
    const std::size_t n = cone.generators.front().size();
    // complete the generators to a basis with unit vectors, then invert
    linalg::IntMat basis = cone.generators;
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        linalg::IntVec e(n, 0);
        e[i] = 1;
        auto trial = basis;
        trial.push_back(e);
        if (linalg::rank(trial) == trial.size()) basis = std::move(trial);
    }
    // coefficient forms: row j of the inverse of the matrix whose columns are the basis vectors
    std::vector<std::vector<std::int64_t>> forms;
    for (std::size_t j = 0; j < n; ++j) {
        linalg::IntVec e(n, 0);
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(e.begin(), e.end(), 0);
            e[i] = 1;
            row[i] = (*linalg::coordinates(basis, e))[j];
        }
        BigInt den = 1;
        for (const auto& x : row) den = lcm(den, BigInt(x.get_den()));
        std::vector<std::int64_t> ints(n);
        for (std::size_t i = 0; i < n; ++i) ints[i] = BigInt(row[i] * den).get_si();
        forms.push_back(std::move(ints));
    }
    std::vector<bool> strict = cone.strict;
    return [forms, strict, d](std::span<const ValuationBound> v) {
        Membership acc = Membership::inside;
        for (std::size_t j = 0; j < forms.size(); ++j) {
            Range r = eval_form(forms[j], v);
            meet(acc, j < d ? sign_test(r, strict[j]) : zero_test(r));
        }
        return acc;
    };
}

namespace {

using u128 = unsigned __int128;

struct Term {
    std::uint64_t coeff;
    Monomial exps;
};

class Counter {
public:
    Counter(const Polynomial& f, const PrimeSpec& p, std::size_t depth, const ConeDomainSpec* domain, std::uint64_t budget)
        : n_(f.num_vars()), p_(p.value()), depth_(depth), domain_(domain), budget_(budget)
    {
        M_.m = checked_pow_u64(p_, static_cast<unsigned>(depth));
        for (const auto& [m, c] : f.terms()) terms_.push_back({M_.reduce(c), m});
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Term> d;
            for (const auto& [m, c] : f.terms()) {
                if (m[i] == 0) continue;
                Monomial e = m;
                --e[i];
                const BigInt cc = c * static_cast<unsigned long>(m[i]);
                BigInt r = cc % static_cast<unsigned long>(p_);
                if (r < 0) r += static_cast<unsigned long>(p_);
                d.push_back({r.get_ui(), e});
            }
            grad_.push_back(std::move(d));
        }
        pows_.assign(depth + 1, 1);
        for (std::size_t k = 1; k <= depth; ++k) pows_[k] = pows_[k - 1] * p_;
        counts_.assign(depth + 1, 0);
        undecided_.assign(depth + 1, 0);
    }

    // Top-level residues handled by this call: those with index % stride == part.
    void run(unsigned part, unsigned stride)
    {
        std::vector<std::uint64_t> x(n_, 0);
        std::uint64_t idx = 0;
        for (;;) {
            if (idx++ % stride == part && eval(terms_, x, M_) % p_ == 0) visit(x, 1, false);
            std::size_t i = 0;
            while (i < n_ && x[i] == p_ - 1) x[i++] = 0;
            if (i == n_) break;
            ++x[i];
        }
    }

    void merge_into(std::vector<u128>& counts, std::vector<u128>& undecided, std::uint64_t& nodes) const
    {
        for (std::size_t k = 0; k <= depth_; ++k) {
            counts[k] += counts_[k];
            undecided[k] += undecided_[k];
        }
        nodes += nodes_;
    }

    bool exhausted() const { return exhausted_; }

private:
    std::uint64_t eval(const std::vector<Term>& ts, const std::vector<std::uint64_t>& x, const Mod64& M) const
    {
        std::uint64_t s = 0;
        for (const auto& t : ts) {
            std::uint64_t v = t.coeff;
            for (std::size_t i = 0; i < n_ && v; ++i)
                if (t.exps[i]) v = M.mul(v, M.pow(x[i] % M.m, t.exps[i]));
            s = M.add(s, v);
        }
        return s;
    }

    Membership classify(const std::vector<std::uint64_t>& x, std::size_t level) const
    {
        std::vector<ValuationBound> v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint64_t r = x[i] % pows_[level];
            if (r == 0) {
                v[i] = {level, false};
            } else {
                std::uint64_t k = 0, y = r;
                while (y % p_ == 0) {
                    y /= p_;
                    ++k;
                }
                v[i] = {k, true};
            }
        }
        return domain_->classify(v);
    }

    bool take_budget()
    {
        if (exhausted_) return false;
        if (budget_ == 0) {
            exhausted_ = true;
            return false;
        }
        --budget_;
        ++nodes_;
        return true;
    }

    // x is a class mod p^level with f(x) = 0 mod p^level.
    void visit(const std::vector<std::uint64_t>& x, std::size_t level, bool inside)
    {
        if (!take_budget()) return;
        if (domain_ && !inside) {
            Membership m = classify(x, level);
            if (m == Membership::outside) return;
            if (m == Membership::undecided) {
                ++undecided_[level];
            } else {
                inside = true;
            }
        }
        if (!domain_ || inside) ++counts_[level];
        if (level == depth_) return;

        const std::uint64_t fx = eval(terms_, x, M_);
        const std::uint64_t c = (fx % pows_[level + 1]) / pows_[level];
        const Mod64 P{p_};
        std::vector<std::uint64_t> g(n_);
        std::size_t pivot = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            g[i] = eval(grad_[i], x, P);
            if (g[i] != 0 && pivot == n_) pivot = i;
        }
        if (pivot == n_ && c != 0) return;

        const bool last = level + 1 == depth_;
        if (last && (!domain_ || inside)) {
            // children are counted, not visited
            counts_[level + 1] += pivot == n_ ? ipow(p_, n_) : ipow(p_, n_ - 1);
            return;
        }
        const std::uint64_t step = pows_[level];
        std::vector<std::uint64_t> t(n_, 0), child(n_);
        const std::uint64_t inv = pivot == n_ ? 0 : inv_mod_prime(g[pivot], p_);
        for (;;) {
            if (pivot != n_) {
                std::uint64_t s = c;
                for (std::size_t j = 0; j < n_; ++j)
                    if (j != pivot) s = (s + g[j] * t[j]) % p_;
                t[pivot] = (p_ - s) % p_ * inv % p_;
            }
            for (std::size_t i = 0; i < n_; ++i) child[i] = x[i] + step * t[i];
            visit(child, level + 1, inside);
            if (exhausted_) return;
            // advance over the free coordinates
            std::size_t i = 0;
            for (; i < n_; ++i) {
                if (i == pivot) continue;
                if (t[i] + 1 < p_) {
                    ++t[i];
                    break;
                }
                t[i] = 0;
            }
            if (i == n_) break;
        }
    }

    static std::uint64_t ipow(std::uint64_t b, std::size_t e)
    {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    }

    std::size_t n_;
    std::uint64_t p_;
    std::size_t depth_;
    const ConeDomainSpec* domain_;
    std::uint64_t budget_;
    bool exhausted_ = false;
    Mod64 M_{1};
    std::vector<Term> terms_;
    std::vector<std::vector<Term>> grad_;
    std::vector<std::uint64_t> pows_;
    std::vector<u128> counts_, undecided_;
    std::uint64_t nodes_ = 0;
};

BigInt to_big(u128 v)
{
    BigInt r = static_cast<unsigned long>(v >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(v & ~std::uint64_t{0});
    return r;
}

unsigned thread_count(const CountOptions& opt)
{
    if (opt.threads) return opt.threads;
    if (const char* env = std::getenv("IGUSA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// One full attempt at the given depth; nullopt when the budget runs out.
std::optional<CountSeries> attempt(const Polynomial& f, const PrimeSpec& p, std::size_t depth,
                                   const ConeDomainSpec* domain, std::uint64_t budget, unsigned threads)
{
    std::vector<u128> counts(depth + 1, 0), undecided(depth + 1, 0);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<Counter> parts;
    for (unsigned k = 0; k < threads; ++k) parts.emplace_back(f, p, depth, domain, budget / threads);
    if (threads == 1) {
        parts[0].run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back([&parts, k, threads] { parts[k].run(k, threads); });
        for (auto& th : pool) th.join();
    }
    for (const auto& c : parts) {
        c.merge_into(counts, undecided, nodes);
        exhausted = exhausted || c.exhausted();
    }
    if (exhausted) return std::nullopt;
    CountSeries out;
    out.f = f;
    out.p = p.value();
    out.n = f.num_vars();
    for (std::size_t k = 1; k <= depth; ++k) {
        out.counts.push_back(to_big(counts[k]));
        out.undecided.push_back(to_big(undecided[k]));
    }
    out.nodes = nodes;
    return out;
}

}  // namespace

CountSeries count_mod(const Polynomial& f, const PrimeSpec& p, std::size_t depth,
                      const std::optional<ConeDomainSpec>& domain, const CountOptions& opt)
{
    if (depth < 1) throw Error("count_mod: depth must be at least 1");
    if (f.num_vars() == 0) throw Error("count_mod: f has no variables");
    checked_pow_u64(p.value(), static_cast<unsigned>(depth));
    const unsigned threads = thread_count(opt);
    for (std::size_t d = depth; d >= 1; --d) {
        auto r = attempt(f, p, d, domain ? &*domain : nullptr, opt.budget, threads);
        if (!r) continue;
        r->restricted = domain.has_value();
        r->domain = domain ? domain->label : "full";
        r->requested_depth = depth;
        r->truncated = d < depth;
        if (!r->restricted) r->undecided.clear();
        return *r;
    }
    CountSeries empty;
    empty.f = f;
    empty.p = p.value();
    empty.n = f.num_vars();
    empty.restricted = domain.has_value();
    empty.domain = domain ? domain->label : "full";
    empty.requested_depth = depth;
    empty.truncated = true;
    return empty;
}

PowerSeries measure_series(const CountSeries& c)
{
    if (c.restricted) throw Error("measure_series: restricted counts do not determine a measure series");
    const PrimeSpec p(c.p);
    PowerSeries s;
    Rational prev = 1;  // N_0 = 1
    for (std::size_t m = 0; m < c.counts.size(); ++m) {
        Rational cur = Rational(c.counts[m]) * inv_prime_power(p, (m + 1) * c.n);
        s.push_back(prev - cur);
        prev = cur;
    }
    return s;
}

std::int64_t default_max_deg(const TSDenominator& den, std::size_t depth)
{
    std::int64_t order = 0;
    for (const auto& f : den.factors()) order += f.second;
    return std::max<std::int64_t>(0, std::min<std::int64_t>(order, static_cast<std::int64_t>(depth) - 2));
}

VerifyReport verify_theorem(const Polynomial& f, const Polynomial& g, const PrimeSpec& p, std::size_t depth,
                            std::optional<std::int64_t> max_deg, const CountOptions& opt)
{
    VerifyReport r;
    r.sum = direct_sum(f, g);
    r.den = denominator(f, g);
    r.candidates = candidate_poles(r.den);
    r.max_deg = max_deg ? *max_deg : default_max_deg(r.den, depth);
    r.counts = count_mod(r.sum, p, depth + 1, std::nullopt, opt);
    if (r.counts.truncated) {
        r.notes.push_back("count budget exceeded; counts truncated to depth " + std::to_string(r.counts.counts.size()));
        return r;
    }
    r.series = measure_series(r.counts);
    const auto factors = r.den.factors();
    r.recovery = recover_numerator(r.series, factors, p.value(), r.max_deg);
    r.ok = r.recovery.ok;
    if (r.ok) {
        r.reduction = reduce(RationalZeta{r.recovery.numerator, factors, p.value()});
    } else {
        r.notes.push_back("residual coefficients do not vanish: falsification candidate");
    }
    try {
        auto spf = spf_evaluate(r.sum, ResidueDomain::full(r.sum.num_vars(), p.value()), p);
        r.spf_agrees = expand(spf.zeta, depth) == r.series;
        if (!*r.spf_agrees) r.notes.push_back("stationary phase evaluation disagrees with the counts");
    } catch (const Error&) {
        // singular point: the recursion does not terminate, nothing to compare
    }
    return r;
}

}  // namespace igusa
