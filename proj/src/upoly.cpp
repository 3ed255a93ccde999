#include "igusa/upoly.hpp"

#include <sstream>

namespace igusa {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UPoly::lead() const
{
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    return *this * (Rational(1) / lead());
}

UPoly UPoly::strip_zero_roots() const
{
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return UPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Rational& s)
{
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
}

std::string UPoly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0 || c != 1) os << c.get_str();
        if (k > 0) {
            if (c != 1) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) return {UPoly{}, a};
    std::vector<Rational> q(r.size() - bc.size() + 1);
    const Rational inv = Rational(1) / b.lead();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = r[k + bc.size() - 1] * inv;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= f * bc[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& a)
{
    if (a.degree() <= 0) return a.monic();
    UPoly g = gcd(a, a.derivative());
    return divmod(a, g).first.monic();
}

}  // namespace igusa
