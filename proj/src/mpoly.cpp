#include "igusa/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace igusa {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const noexcept
{
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

unsigned total_degree(const Monomial& m) noexcept { return std::accumulate(m.begin(), m.end(), 0u); }

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const BigInt& c)
{
    Polynomial f(std::move(variables));
    f.add_term(Monomial(f.num_vars(), 0), c);
    return f;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index)
{
    Polynomial f(std::move(variables));
    if (index >= f.num_vars()) throw Error("variable index out of range");
    Monomial m(f.num_vars(), 0);
    m[index] = 1;
    f.add_term(m, 1);
    return f;
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

BigInt Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Monomial> Polynomial::support() const
{
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c)
{
    if (m.size() != vars_.size()) throw Error("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const
{
    if (vars_ != o.vars_) throw Error("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_same_ring(b);
    Polynomial r(a.vars_);
    Monomial m(a.num_vars());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

BigInt Polynomial::content() const
{
    BigInt g = 0;
    for (const auto& [m, c] : terms_) g = gcd(g, c);
    return g;
}

unsigned Polynomial::degree() const noexcept
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

BigInt Polynomial::evaluate(std::span<const BigInt> point) const
{
    if (point.size() != vars_.size()) throw Error("evaluate: arity mismatch");
    BigInt sum = 0, term, pw;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), m[i]);
            term *= pw;
        }
        sum += term;
    }
    return sum;
}

ModResidue Polynomial::evaluate(std::span<const ModResidue> point) const
{
    if (point.size() != vars_.size()) throw Error("evaluate: arity mismatch");
    if (point.empty()) throw Error("modular evaluation needs at least one coordinate to fix the ring");
    const unsigned level = point[0].level();
    const PrimeSpec prime = point[0].prime();
    for (const auto& r : point)
        if (r.level() != level || !(r.prime() == prime)) throw Error("evaluate: mixed residue rings");
    BigInt mod = prime.pow(level);
    BigInt sum = 0, term, pw;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            mpz_powm_ui(pw.get_mpz_t(), point[i].value().get_mpz_t(), m[i], mod.get_mpz_t());
            term = (term * pw) % mod;
        }
        sum += term;
    }
    return ModResidue(sum, level, prime);
}

Polynomial Polynomial::partial(std::size_t var) const
{
    if (var >= vars_.size()) throw Error("partial: variable index out of range");
    Polynomial d(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        --dm[var];
        d.add_term(dm, c * m[var]);
    }
    return d;
}

std::vector<Polynomial> Polynomial::partials() const
{
    std::vector<Polynomial> out;
    out.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) out.push_back(partial(i));
    return out;
}

Polynomial Polynomial::exact_divide(const BigInt& d) const
{
    if (d == 0) throw Error("exact_divide by zero");
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw Error("exact_divide: not divisible");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.terms_.emplace(m, q);
    }
    return r;
}

Polynomial Polynomial::renamed(std::vector<std::string> variables) const
{
    if (variables.size() != vars_.size()) throw Error("renamed: arity mismatch");
    Polynomial r(std::move(variables));
    r.terms_ = terms_;
    return r;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, const std::vector<std::string>& vars, bool need_star)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (need_star) os << '*';
        os << vars[i];
        if (m[i] > 1) os << '^' << m[i];
        need_star = true;
    }
}

template <class Coeff>
std::string format_terms(const std::map<Monomial, Coeff, GrlexLess>& terms, const std::vector<std::string>& vars,
                         auto&& to_str)
{
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = to_str(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool is_one = (cs == "1");
        bool constant = total_degree(m) == 0;
        if (constant || !is_one) os << cs;
        append_monomial(os, m, vars, !constant && !is_one);
    }
    return os.str();
}

}  // namespace

std::string Polynomial::to_string() const
{
    return format_terms(terms_, vars_, [](const BigInt& c) { return c.get_str(); });
}

Polynomial substitute_affine(const Polynomial& f, std::span<const BigInt> shift, std::span<const BigInt> scale)
{
    const std::size_t n = f.num_vars();
    if (shift.size() != n || scale.size() != n) throw Error("substitute_affine: arity mismatch");
    Polynomial cur = f;
    for (std::size_t i = 0; i < n; ++i) {
        if (shift[i] == 0 && scale[i] == 1) continue;
        // binomial table up to the degree in x_i
        unsigned deg = cur.degree_in(i);
        std::vector<BigInt> spow(deg + 1), cpow(deg + 1);
        spow[0] = 1;
        cpow[0] = 1;
        for (unsigned k = 1; k <= deg; ++k) {
            spow[k] = spow[k - 1] * shift[i];
            cpow[k] = cpow[k - 1] * scale[i];
        }
        Polynomial next(f.variables());
        for (const auto& [m, c] : cur.terms()) {
            const unsigned k = m[i];
            Monomial mm = m;
            BigInt binom = 1;
            for (unsigned j = 0; j <= k; ++j) {
                // C(k,j) s^(k-j) c^j x^j
                mm[i] = j;
                next.add_term(mm, c * binom * spow[k - j] * cpow[j]);
                binom = binom * (k - j) / (j + 1);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

ShiftScaleResult extract_prime_power(const Polynomial& g, const PrimeSpec& p)
{
    if (g.is_zero()) throw Error("order of the zero polynomial is undefined");
    Valuation e = Valuation::infinity();
    for (const auto& [m, c] : g.terms()) e = min(e, p_valuation(c, p));
    std::uint64_t order = e.value();
    return {order, order == 0 ? g : g.exact_divide(p.pow(order))};
}

}  // namespace

ShiftScaleResult shift_scale(const Polynomial& f, std::span<const BigInt> point, const PrimeSpec& p)
{
    if (f.is_zero()) throw Error("shift_scale: f = 0");
    std::vector<BigInt> scale(f.num_vars(), p.big());
    return extract_prime_power(substitute_affine(f, point, scale), p);
}

ShiftScaleResult monomial_scale(const Polynomial& f, std::span<const unsigned> k, const PrimeSpec& p)
{
    if (f.is_zero()) throw Error("monomial_scale: f = 0");
    if (k.size() != f.num_vars()) throw Error("monomial_scale: arity mismatch");
    Polynomial g(f.variables());
    for (const auto& [m, c] : f.terms()) {
        unsigned long w = 0;
        for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<unsigned long>(m[i]) * k[i];
        g.add_term(m, c * p.pow(w));
    }
    return extract_prime_power(g, p);
}

FpPolynomial::FpPolynomial(std::vector<std::string> variables, std::uint64_t p) : vars_(std::move(variables)), p_(p) {}

void FpPolynomial::add_term(const Monomial& m, std::uint64_t c)
{
    if (m.size() != vars_.size()) throw Error("monomial arity mismatch");
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint64_t FpPolynomial::evaluate(std::span<const std::uint64_t> point) const
{
    if (point.size() != vars_.size()) throw Error("evaluate: arity mismatch");
    Mod64 md{p_};
    std::uint64_t sum = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = md.mul(t, md.pow(point[i], m[i]));
        sum = md.add(sum, t);
    }
    return sum;
}

FpPolynomial FpPolynomial::partial(std::size_t var) const
{
    FpPolynomial d(vars_, p_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        --dm[var];
        d.add_term(dm, static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * (m[var] % p_)) % p_));
    }
    return d;
}

std::vector<FpPolynomial> FpPolynomial::partials() const
{
    std::vector<FpPolynomial> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) out.push_back(partial(i));
    return out;
}

std::string FpPolynomial::to_string() const
{
    return format_terms(terms_, vars_, [](std::uint64_t c) { return std::to_string(c); });
}

FpPolynomial reduce_mod_p(const Polynomial& f, std::uint64_t p)
{
    FpPolynomial r(f.variables(), p);
    Mod64 md{p};
    for (const auto& [m, c] : f.terms()) r.add_term(m, md.reduce(c));
    return r;
}

FpPolynomial reduce_mod_p(const Polynomial& f, const PrimeSpec& p) { return reduce_mod_p(f, p.value()); }

Polynomial direct_sum(const Polynomial& f, const Polynomial& g)
{
    std::vector<std::string> vars = f.variables();
    for (const auto& v : g.variables()) {
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) throw Error("variable collision in f + g: " + v);
        vars.push_back(v);
    }
    return embed(f, vars) + embed(g, vars);
}

Polynomial embed(const Polynomial& f, const std::vector<std::string>& variables)
{
    std::vector<std::size_t> where(f.num_vars());
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), f.variables()[i]);
        if (it == variables.end()) throw Error("embed: missing variable " + f.variables()[i]);
        where[i] = static_cast<std::size_t>(it - variables.begin());
    }
    Polynomial r(variables);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(variables.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) mm[where[i]] = m[i];
        r.add_term(mm, c);
    }
    return r;
}

ParseError::ParseError(const std::string& msg, std::size_t position)
    : Error(msg + " at position " + std::to_string(position)), pos_(position)
{
}

namespace {

constexpr unsigned long kMaxExponent = 1000000;

struct RawTerm {
    BigInt coeff;
    std::vector<std::pair<std::string, unsigned long>> powers;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<RawTerm> parse()
    {
        std::vector<RawTerm> out;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            RawTerm t = term();
            t.coeff *= sign;
            out.push_back(std::move(t));
            skip_ws();
        }
        return out;
    }

private:
    RawTerm term()
    {
        RawTerm t{1, {}};
        bool have_factor = false;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                BigInt v = integer();
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    unsigned long e = exponent();
                    BigInt pw;
                    mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), e);
                    v = pw;
                }
                t.coeff *= v;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = identifier();
                skip_ws();
                unsigned long e = 1;
                if (!at_end() && peek() == '^') {
                    get();
                    e = exponent();
                }
                t.powers.emplace_back(std::move(name), e);
            } else {
                if (!have_factor) throw ParseError(std::string("unexpected character '") + c + "'", pos_);
                break;
            }
            have_factor = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
                if (at_end()) throw ParseError("dangling '*'", pos_);
                continue;
            }
            // implicit multiplication: "3x", "2 x y"
            if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) continue;
            break;
        }
        if (!have_factor) throw ParseError("expected a term", pos_);
        return t;
    }

    BigInt integer()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return BigInt(s_.substr(start, pos_ - start));
    }

    unsigned long exponent()
    {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        std::size_t at = pos_;
        BigInt e = integer();
        if (e > kMaxExponent) throw ParseError("exponent overflow (> 10^6)", at);
        return e.get_ui();
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm>& raw, const std::vector<std::string>& vars)
{
    Polynomial f(vars);
    for (const auto& t : raw) {
        Monomial m(vars.size(), 0);
        for (const auto& [name, e] : t.powers) {
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw Error("unknown variable: " + name);
            unsigned long total = m[it - vars.begin()] + e;
            if (total > kMaxExponent) throw Error("exponent overflow (> 10^6)");
            m[it - vars.begin()] = static_cast<unsigned>(total);
        }
        f.add_term(m, t.coeff);
    }
    return f;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text)
{
    auto raw = Parser(text).parse();
    std::vector<std::string> vars;
    for (const auto& t : raw)
        for (const auto& [name, e] : t.powers)
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    return build(raw, vars);
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables)
{
    return build(Parser(text).parse(), variables);
}

}  // namespace igusa
