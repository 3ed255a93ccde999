#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace igusa {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown for violated preconditions across the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational prime p, used as uniformizer (pi = p) and residue cardinality (q = p).
class PrimeSpec {
public:
    explicit PrimeSpec(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    BigInt big() const { return BigInt(static_cast<unsigned long>(p_)); }

    /// p^k as a big integer.
    BigInt pow(unsigned long k) const;

    friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of N ∪ {+inf}. The infinite state is never encoded as an integer.
class Valuation {
public:
    constexpr Valuation() noexcept = default;  // +inf
    constexpr explicit Valuation(std::uint64_t v) noexcept : finite_(true), v_(v) {}

    static constexpr Valuation infinity() noexcept { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }
    std::uint64_t value() const;  // throws on +inf

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) noexcept
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr bool operator<(const Valuation& a, const Valuation& b) noexcept
    {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(const Valuation& a, const Valuation& b) noexcept { return !(b < a); }
    friend constexpr bool operator>(const Valuation& a, const Valuation& b) noexcept { return b < a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) noexcept;
    friend Valuation min(const Valuation& a, const Valuation& b) noexcept { return b < a ? b : a; }

    std::string to_string() const;

private:
    bool finite_ = false;
    std::uint64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Largest k with p^k | x; +inf iff x == 0.
Valuation p_valuation(const BigInt& x, const PrimeSpec& p);
Valuation p_valuation(const Rational& x, const PrimeSpec& p);  // numerator valuation minus denominator's; x must be p-integral

/// Exact a / b; throws Error on b == 0.
Rational checked_div(const Rational& a, const Rational& b);

/// 1 / p^k
Rational inv_prime_power(const PrimeSpec& p, unsigned long k);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "a/b" or "a"
Rational parse_rational(const std::string& s);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Element of Z/p^m Z.
class ModResidue {
public:
    ModResidue(BigInt value, unsigned level, PrimeSpec prime);

    const BigInt& value() const noexcept { return value_; }
    unsigned level() const noexcept { return level_; }
    const PrimeSpec& prime() const noexcept { return prime_; }
    BigInt modulus() const { return prime_.pow(level_); }

    ModResidue operator+(const ModResidue& o) const;
    ModResidue operator*(const ModResidue& o) const;
    ModResidue operator-() const;

    friend bool operator==(const ModResidue& a, const ModResidue& b)
    {
        return a.level_ == b.level_ && a.prime_ == b.prime_ && a.value_ == b.value_;
    }

private:
    void check_compatible(const ModResidue& o) const;

    BigInt value_;
    unsigned level_;
    PrimeSpec prime_;
};

/// Fixed-width arithmetic modulo m < 2^63, used on hot paths of the point counter.
struct Mod64 {
    std::uint64_t m;

    std::uint64_t reduce(const BigInt& x) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept
    {
        std::uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
};

/// p^k if it is below 2^62, else throws.
std::uint64_t checked_pow_u64(std::uint64_t p, unsigned k);

/// Inverse of a modulo prime p (a not divisible by p).
std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);

}  // namespace igusa
