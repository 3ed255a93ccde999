#include "igusa/tsden.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace igusa {

AffineExponent c_ab(std::int64_t m_f, std::int64_t m_g, std::int64_t abs_a, std::int64_t abs_b)
{
    if (abs_a < 1 || abs_b < 1) throw Error("c_ab: |a| and |b| must be positive");
    if (m_f < 0 || m_g < 0) throw Error("c_ab: m-values must be nonnegative");
    AffineExponent r;
    if (m_f == 0 || m_g == 0) return r;
    const std::int64_t g = std::gcd(m_f, m_g);
    const std::int64_t e = m_f / g, e_prime = m_g / g;
    r.finite = true;
    r.t_power = m_f / g * m_g;
    r.q_power = e * abs_b + e_prime * abs_a;
    return r;
}

std::vector<DenFactor> TSDenominator::factors() const
{
    std::vector<DenFactor> out{universal};
    for (const auto& pf : pairs)
        if (pf.exponent.finite) out.emplace_back(pf.exponent.q_power, pf.exponent.t_power);
    return out;
}

TSDenominator denominator(const Polynomial& f, const Polynomial& g, const NonCritParams& params)
{
    (void)direct_sum(f, g);  // rejects shared variables
    const auto pf = NewtonPolyhedron::build(f);
    const auto pg = NewtonPolyhedron::build(g);
    TSDenominator den;
    for (const auto* side : {&f, &g}) {
        auto rep = check_noncritical(*side, params);
        if (rep.verdict != Verdict::non_critical)
            den.warnings.push_back(side->to_string() + ": Newton non-criticality " +
                                   (rep.verdict == Verdict::critical ? "fails" : "not certified"));
        else if (rep.heuristic)
            den.warnings.push_back(side->to_string() + ": Newton non-criticality only heuristic");
    }
    for (const auto& fa : pf.facets()) {
        for (const auto& gb : pg.facets()) {
            PairFactor p;
            p.a = fa.normal;
            p.b = gb.normal;
            p.m_f = fa.m_value;
            p.m_g = gb.m_value;
            p.exponent = c_ab(fa.m_value, gb.m_value, fa.abs_normal(), gb.abs_normal());
            den.pairs.push_back(std::move(p));
        }
    }
    return den;
}

std::vector<Rational> candidate_poles(const TSDenominator& den)
{
    std::set<Rational> poles;
    for (const auto& [a, b] : den.factors()) {
        Rational r(-a, b);
        r.canonicalize();
        poles.insert(r);
    }
    return {poles.begin(), poles.end()};
}

}  // namespace igusa
