#include "igusa/numeric.hpp"

#include <ostream>

namespace igusa {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    mpz_class z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

PrimeSpec::PrimeSpec(std::uint64_t p) : p_(p)
{
    if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
}

BigInt PrimeSpec::pow(unsigned long k) const
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, k);
    return r;
}

std::uint64_t Valuation::value() const
{
    if (!finite_) throw Error("valuation is +inf");
    return v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) noexcept
{
    if (!a.finite_ || !b.finite_) return Valuation::infinity();
    return Valuation(a.v_ + b.v_);
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(v_) : std::string("inf"); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Valuation p_valuation(const BigInt& x, const PrimeSpec& p)
{
    if (x == 0) return Valuation::infinity();
    BigInt pb = p.big();
    BigInt y = x;
    std::uint64_t k = mpz_remove(y.get_mpz_t(), x.get_mpz_t(), pb.get_mpz_t());
    return Valuation(k);
}

Valuation p_valuation(const Rational& x, const PrimeSpec& p)
{
    if (x == 0) return Valuation::infinity();
    if (p_valuation(x.get_den(), p).value() != 0) throw Error("rational is not p-integral");
    return p_valuation(BigInt(x.get_num()), p);
}

Rational checked_div(const Rational& a, const Rational& b)
{
    if (b == 0) throw Error("division by zero");
    return a / b;
}

Rational inv_prime_power(const PrimeSpec& p, unsigned long k)
{
    Rational r(BigInt(1), p.pow(k));
    return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    unsigned __int128 l = static_cast<unsigned __int128>(a / gcd_u64(a, b)) * b;
    if (l > UINT64_MAX) throw Error("lcm overflow");
    return static_cast<std::uint64_t>(l);
}

ModResidue::ModResidue(BigInt value, unsigned level, PrimeSpec prime)
    : value_(std::move(value)), level_(level), prime_(prime)
{
    if (level_ == 0) throw Error("ModResidue level must be >= 1");
    BigInt m = modulus();
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
}

void ModResidue::check_compatible(const ModResidue& o) const
{
    if (level_ != o.level_ || !(prime_ == o.prime_)) throw Error("ModResidue ring mismatch");
}

ModResidue ModResidue::operator+(const ModResidue& o) const
{
    check_compatible(o);
    return {value_ + o.value_, level_, prime_};
}

ModResidue ModResidue::operator*(const ModResidue& o) const
{
    check_compatible(o);
    return {value_ * o.value_, level_, prime_};
}

ModResidue ModResidue::operator-() const { return {-value_, level_, prime_}; }

std::uint64_t Mod64::reduce(const BigInt& x) const
{
    BigInt r;
    BigInt mb(std::to_string(m));
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mb.get_mpz_t());
    return std::stoull(r.get_str());
}

std::uint64_t Mod64::pow(std::uint64_t a, std::uint64_t e) const noexcept
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t checked_pow_u64(std::uint64_t p, unsigned k)
{
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= p;
        if (r >= (static_cast<unsigned __int128>(1) << 62)) throw Error("modulus p^k exceeds 2^62");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0) throw Error("not invertible mod p");
    Mod64 m{p};
    return m.pow(a, p - 2);
}

}  // namespace igusa
