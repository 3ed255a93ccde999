#include "igusa/ratfun.hpp"

#include <map>
#include <sstream>

namespace igusa {

namespace {

Rational q_inverse_power(std::uint64_t q, std::int64_t a)
{
    if (a < 0) throw Error("negative q exponent in denominator factor");
    BigInt qa;
    mpz_ui_pow_ui(qa.get_mpz_t(), q, static_cast<unsigned long>(a));
    Rational r(BigInt(1), qa);
    r.canonicalize();
    return r;
}

UPoly factor_poly(const DenFactor& f, std::uint64_t q)
{
    if (f.second < 1) throw Error("denominator factor needs a positive t-power");
    return UPoly::constant(1) - UPoly::monomial(q_inverse_power(q, f.first), static_cast<std::size_t>(f.second));
}

}  // namespace

std::string RationalZeta::to_string() const
{
    std::ostringstream os;
    os << "(" << numerator.to_string("t") << ")";
    if (!factors.empty()) {
        os << " / (";
        for (const auto& [a, b] : factors) {
            os << "(1 - q^-" << a << "*t";
            if (b != 1) os << "^" << b;
            os << ")";
        }
        os << ")";
    }
    return os.str();
}

UPoly denominator_poly(const std::vector<DenFactor>& factors, std::uint64_t q)
{
    UPoly d = UPoly::constant(1);
    for (const auto& f : factors) d = d * factor_poly(f, q);
    return d;
}

PowerSeries expand(const RationalZeta& z, std::size_t depth)
{
    PowerSeries s(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i) s[i] = z.numerator.coeff(i);
    for (const auto& [a, b] : z.factors) {
        const Rational c = q_inverse_power(z.q, a);
        const auto step = static_cast<std::size_t>(b);
        for (std::size_t i = step; i <= depth; ++i) s[i] += c * s[i - step];
    }
    return s;
}

Recovery recover_numerator(const PowerSeries& series, const std::vector<DenFactor>& factors, std::uint64_t q,
                           std::int64_t max_deg)
{
    if (series.empty() || static_cast<std::int64_t>(series.size()) - 1 <= max_deg)
        throw Error("recover_numerator: series depth must exceed max_deg");
    const std::size_t depth = series.size() - 1;
    std::vector<Rational> prod = series;
    for (const auto& [a, b] : factors) {
        const Rational c = q_inverse_power(q, a);
        const auto step = static_cast<std::size_t>(b);
        for (std::size_t i = depth + 1; i-- > step;) prod[i] -= c * prod[i - step];
    }
    Recovery r;
    r.ok = true;
    std::vector<Rational> low;
    for (std::size_t i = 0; i <= depth; ++i) {
        if (static_cast<std::int64_t>(i) <= max_deg) {
            low.push_back(prod[i]);
        } else {
            r.residual.push_back(prod[i]);
            if (prod[i] != 0) r.ok = false;
        }
    }
    r.numerator = UPoly(std::move(low));
    return r;
}

bool check_recurrence(const PowerSeries& series, const std::vector<DenFactor>& factors, std::uint64_t q,
                      std::size_t start)
{
    std::size_t order = 0;
    for (const auto& f : factors) order += static_cast<std::size_t>(f.second);
    if (series.empty() || series.size() - 1 < start + order) throw Error("check_recurrence: insufficient depth");
    return recover_numerator(series, factors, q, static_cast<std::int64_t>(start) - 1).ok;
}

Reduction reduce(const RationalZeta& z)
{
    Reduction r;
    const UPoly den = denominator_poly(z.factors, z.q);
    UPoly g = z.numerator.is_zero() ? den : gcd(z.numerator, den);
    g = g * (1 / g.coeff(0));  // keeps the reduced denominator at 1 for t = 0
    r.numerator = divmod(z.numerator, g).first;
    r.denominator = divmod(den, g).first;
    std::map<Rational, bool> alive;
    for (const auto& f : z.factors) {
        Rational pole(-f.first, f.second);
        pole.canonicalize();
        bool& a = alive[pole];
        if (!z.numerator.is_zero() && gcd(r.denominator, factor_poly(f, z.q)).degree() > 0) a = true;
    }
    for (const auto& [pole, a] : alive) (a ? r.surviving_poles : r.cancelled_poles).push_back(pole);
    return r;
}

}  // namespace igusa
