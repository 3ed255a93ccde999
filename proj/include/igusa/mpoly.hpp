#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igusa/numeric.hpp"

namespace igusa {

/// Exponent vector omega of a monomial x^omega.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order with x1 > x2 > ... .
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

unsigned total_degree(const Monomial& m) noexcept;

/// Sparse multivariate polynomial with integer coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigInt, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const BigInt& c);
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);

    std::size_t num_vars() const noexcept { return vars_.size(); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    BigInt coefficient(const Monomial& m) const;
    std::vector<Monomial> support() const;

    /// Adds c * x^m, dropping the term if it cancels.
    void add_term(const Monomial& m, const BigInt& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const;
    unsigned degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;

    BigInt evaluate(std::span<const BigInt> point) const;
    ModResidue evaluate(std::span<const ModResidue> point) const;

    Polynomial partial(std::size_t var) const;
    std::vector<Polynomial> partials() const;

    /// Divides every coefficient by d, which must divide the content.
    Polynomial exact_divide(const BigInt& d) const;

    /// Same terms, new variable names (count must match).
    Polynomial renamed(std::vector<std::string> variables) const;

    /// Canonical text form, terms in descending graded lex order: `3*x1^2*x2 + x2^3 - 7`.
    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Result of f(P + p x) = p^order * transformed, with p not dividing content(transformed).
struct ShiftScaleResult {
    std::uint64_t order = 0;
    Polynomial transformed;
};

/// x_i -> shift_i + scale_i * x_i, exact.
Polynomial substitute_affine(const Polynomial& f, std::span<const BigInt> shift, std::span<const BigInt> scale);

/// The stationary-phase transform f -> f_P and its order e_P(f).
ShiftScaleResult shift_scale(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p);

/// f(p^k1 x1, ..., p^kn xn) = p^order * transformed.
ShiftScaleResult monomial_scale(const Polynomial& f, std::span<const unsigned> k, const PrimeSpec& p);

/// Polynomial with coefficients in F_p, same sparse layout.
class FpPolynomial {
public:
    FpPolynomial(std::vector<std::string> variables, std::uint64_t p);

    std::uint64_t prime() const noexcept { return p_; }
    std::size_t num_vars() const noexcept { return vars_.size(); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Monomial, std::uint64_t, GrlexLess>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, std::uint64_t c);
    std::uint64_t evaluate(std::span<const std::uint64_t> point) const;
    FpPolynomial partial(std::size_t var) const;
    std::vector<FpPolynomial> partials() const;
    std::string to_string() const;

    friend bool operator==(const FpPolynomial& a, const FpPolynomial& b)
    {
        return a.p_ == b.p_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    std::vector<std::string> vars_;
    std::uint64_t p_;
    std::map<Monomial, std::uint64_t, GrlexLess> terms_;
};

FpPolynomial reduce_mod_p(const Polynomial& f, const PrimeSpec& p);
FpPolynomial reduce_mod_p(const Polynomial& f, std::uint64_t p);

/// f(x) + g(y) over the concatenated variable list; shared names are an error.
Polynomial direct_sum(const Polynomial& f, const Polynomial& g);

/// Same polynomial viewed in a larger ring; `variables` must contain f's variables.
Polynomial embed(const Polynomial& f, const std::vector<std::string>& variables);

/// Parses `3*x1^2*x2 + x2^3 - 7`. Variables are ordered by first appearance unless given.
Polynomial parse_polynomial(const std::string& text);
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position);
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace igusa
