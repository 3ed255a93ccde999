#include "igusa/noncrit.hpp"

#include <algorithm>
#include <optional>

#include "igusa/upoly.hpp"

namespace igusa {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::non_critical: return "non_critical";
    case Verdict::critical: return "critical";
    default: return "inconclusive";
    }
}

namespace {

// Polynomial in y with coefficients in Q[x]; index = y-degree.
using BiPoly = std::vector<UPoly>;

BiPoly to_bipoly(const Polynomial& g)
{
    BiPoly b;
    for (const auto& [m, c] : g.terms()) {
        if (b.size() <= m[1]) b.resize(m[1] + 1);
        b[m[1]] += UPoly::monomial(Rational(c), m[0]);
    }
    return b;
}

void trim(BiPoly& b)
{
    while (!b.empty() && b.back().is_zero()) b.pop_back();
}

// Removes the largest monomial factor x^i y^j.
BiPoly strip_monomial(BiPoly b)
{
    trim(b);
    if (b.empty()) return b;
    std::size_t j = 0;
    while (b[j].is_zero()) ++j;
    b.erase(b.begin(), b.begin() + static_cast<long>(j));
    std::size_t i = SIZE_MAX;
    for (const auto& c : b) {
        if (c.is_zero()) continue;
        std::size_t k = 0;
        while (c.coeffs()[k] == 0) ++k;
        i = std::min(i, k);
    }
    for (auto& c : b) {
        if (c.is_zero()) continue;
        c = UPoly(std::vector<Rational>(c.coeffs().begin() + static_cast<long>(i), c.coeffs().end()));
    }
    return b;
}

int x_degree(const BiPoly& b)
{
    int d = 0;
    for (const auto& c : b) d = std::max(d, c.degree());
    return d;
}

Rational det_rational(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<Rational> eval_at(const BiPoly& b, const Rational& x)
{
    std::vector<Rational> r;
    for (const auto& c : b) r.push_back(c.evaluate(x));
    return r;
}

// Res_y(a, b) with formal degrees, by evaluation at integer x and interpolation.
UPoly resultant_y(const BiPoly& a, const BiPoly& b)
{
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    const std::size_t size = da + db;
    const std::size_t bound = db * static_cast<std::size_t>(x_degree(a)) + da * static_cast<std::size_t>(x_degree(b));
    std::vector<Rational> xs, vs;
    for (std::size_t k = 0; k <= bound; ++k) {
        Rational x(static_cast<long>(k));
        auto ca = eval_at(a, x), cb = eval_at(b, x);
        std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size));
        for (std::size_t r = 0; r < db; ++r)
            for (std::size_t j = 0; j <= da; ++j) m[r][r + j] = ca[da - j];
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t j = 0; j <= db; ++j) m[db + r][r + j] = cb[db - j];
        xs.push_back(x);
        vs.push_back(det_rational(std::move(m)));
    }
    UPoly res;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly term = UPoly::constant(vs[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = term * UPoly(std::vector<Rational>{-xs[j], Rational(1)}) * (Rational(1) / (xs[i] - xs[j]));
        }
        res += term;
    }
    return res;
}

UPoly mod(const UPoly& a, const UPoly& r) { return divmod(a, r).second; }

// Inverse of a unit a modulo r.
UPoly inverse_mod(const UPoly& a, const UPoly& r)
{
    UPoly r0 = r, r1 = mod(a, r);
    UPoly s0, s1 = UPoly::constant(1);
    while (r1.degree() > 0) {
        auto [q, rem] = divmod(r0, r1);
        UPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw Error("inverse_mod: not a unit");
    return mod(s1 * (Rational(1) / r1.lead()), r);
}

// Reduces coefficients mod r and drops zero leads. Returns a proper factor of r when the lead is a zero divisor.
std::optional<UPoly> tidy(BiPoly& b, const UPoly& r)
{
    for (auto& c : b) c = mod(c, r);
    trim(b);
    if (b.empty()) return std::nullopt;
    UPoly g = gcd(b.back(), r);
    if (g.degree() > 0) return g;
    return std::nullopt;
}

struct TorusSearch {
    std::string xname, yname;
    std::string witness;

    // Is there alpha with r(alpha) = 0 and beta != 0 with p(alpha, beta) = q(alpha, beta) = 0?
    // r is squarefree without zero root.
    bool solve(const UPoly& r, const BiPoly& p0, const BiPoly& q0)
    {
        if (r.degree() <= 0) return false;
        auto split = [&](const UPoly& g) { return solve(g, p0, q0) || solve(divmod(r, g).first.monic(), p0, q0); };
        BiPoly p = p0, q = q0;
        if (auto g = tidy(p, r)) return split(*g);
        if (auto g = tidy(q, r)) return split(*g);
        while (!q.empty()) {
            const UPoly inv = inverse_mod(q.back(), r);
            while (p.size() >= q.size()) {
                const UPoly coef = mod(p.back() * inv, r);
                const std::size_t shift = p.size() - q.size();
                for (std::size_t j = 0; j < q.size(); ++j) p[shift + j] -= coef * q[j];
                p.back() = UPoly{};
                if (auto g = tidy(p, r)) return split(*g);
            }
            std::swap(p, q);
        }
        if (p.empty()) {
            witness = xname + " = root of " + r.to_string(xname) + ", " + yname + " arbitrary nonzero";
            return true;
        }
        // strip factors of y
        for (;;) {
            UPoly g = gcd(p.front(), r);
            if (g.degree() == r.degree()) {
                p.erase(p.begin());
                continue;
            }
            if (g.degree() > 0) return split(g);
            break;
        }
        if (p.size() <= 1) return false;
        std::string gy;
        for (std::size_t j = p.size(); j-- > 0;) {
            if (p[j].is_zero()) continue;
            if (!gy.empty()) gy += " + ";
            gy += "(" + p[j].to_string(xname) + ")" + (j ? "*" + yname + (j > 1 ? "^" + std::to_string(j) : "") : "");
        }
        witness = xname + " = root of " + r.to_string(xname) + ", " + yname + " = root of " + gy;
        return true;
    }
};

std::string upoly_root_witness(const UPoly& u, const std::string& name)
{
    return name + " = root of " + u.to_string(name);
}

FaceFinding exact_univariate(const Polynomial& g)
{
    FaceFinding r;
    r.method = "exact";
    std::vector<Rational> c(g.degree() + 1);
    for (const auto& [m, a] : g.terms()) c[m[0]] = Rational(a);
    UPoly d = UPoly(std::move(c)).derivative();
    if (d.is_zero()) {
        r.verdict = Verdict::critical;
        r.witness = g.variables()[0] + " = 1";
        return r;
    }
    UPoly s = d.strip_zero_roots();
    if (s.degree() > 0) {
        r.verdict = Verdict::critical;
        r.witness = upoly_root_witness(s.monic(), g.variables()[0]);
    } else {
        r.verdict = Verdict::non_critical;
        r.witness = "derivative vanishes only at 0";
    }
    return r;
}

FaceFinding exact_bivariate(const Polynomial& g)
{
    FaceFinding r;
    r.method = "exact";
    const auto& names = g.variables();
    BiPoly p = strip_monomial(to_bipoly(g.partial(0)));
    BiPoly q = strip_monomial(to_bipoly(g.partial(1)));
    auto is_const = [](const BiPoly& b) { return b.size() == 1 && b[0].degree() == 0; };
    if (p.empty() && q.empty()) {
        r.verdict = Verdict::critical;
        r.witness = names[0] + " = 1, " + names[1] + " = 1";
        return r;
    }
    if (is_const(p) || is_const(q)) {
        r.verdict = Verdict::non_critical;
        r.witness = "a partial is a monomial";
        return r;
    }
    if (p.empty() || q.empty()) {
        // one partial is identically zero; the other is a nonconstant polynomial without monomial factors
        r.verdict = Verdict::critical;
        r.witness = "zero set of the nonzero partial meets the torus";
        return r;
    }
    UPoly res;
    if (p.size() == 1)
        res = p[0];
    else if (q.size() == 1)
        res = q[0];
    else
        res = resultant_y(p, q);
    if (res.is_zero()) {
        // common factor of positive y-degree; specialize x to find an explicit point
        for (long x0 = 1; x0 < 1000; ++x0) {
            auto cp = eval_at(p, Rational(x0)), cq = eval_at(q, Rational(x0));
            if (cp.back() == 0 || cq.back() == 0) continue;
            UPoly h = gcd(UPoly(cp), UPoly(cq));
            if (h.degree() <= 0 || h.coeffs()[0] == 0) continue;
            r.verdict = Verdict::critical;
            r.witness = names[0] + " = " + std::to_string(x0) + ", " + upoly_root_witness(h, names[1]);
            return r;
        }
        r.verdict = Verdict::critical;
        r.witness = "partials share a common factor";
        return r;
    }
    UPoly rad = squarefree_part(res.strip_zero_roots());
    TorusSearch search{names[0], names[1], {}};
    if (search.solve(rad, p, q)) {
        r.verdict = Verdict::critical;
        r.witness = search.witness;
    } else {
        r.verdict = Verdict::non_critical;
        r.witness = "no common torus zero (resultant elimination)";
    }
    return r;
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p)
{
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = (p - det) % p;
        }
        det = det * m[c][c] % p;
        const std::uint64_t inv = inv_mod_prime(m[c][c], p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t f = m[r][c] * inv % p;
            for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - f * m[c][k] % p) % p;
        }
    }
    return det;
}

struct TorusScan {
    bool complete = true;
    bool found = false;
    bool certified = false;
    std::vector<std::uint64_t> point;
};

// Searches (F_l^x)^n for a common zero of the partials; certified if the Hessian is invertible there.
TorusScan scan_torus(const Polynomial& g, std::uint64_t l, std::uint64_t& budget, bool want_certificate)
{
    TorusScan out;
    const FpPolynomial gl = reduce_mod_p(g, l);
    const auto parts = gl.partials();
    std::vector<std::vector<FpPolynomial>> hess;
    if (want_certificate)
        for (const auto& d : parts) hess.push_back(d.partials());
    const std::size_t n = g.num_vars();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree_in(i) > 0) active.push_back(i);
    std::vector<std::uint64_t> x(n, 1);
    for (;;) {
        if (budget == 0) {
            out.complete = false;
            return out;
        }
        --budget;
        bool zero = std::all_of(parts.begin(), parts.end(), [&](const FpPolynomial& d) { return d.evaluate(x) == 0; });
        if (zero) {
            if (!out.found) {
                out.found = true;
                out.point = x;
            }
            if (!want_certificate) return out;
            const std::size_t k = active.size();
            std::vector<std::vector<std::uint64_t>> h(k, std::vector<std::uint64_t>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) h[i][j] = hess[active[i]][active[j]].evaluate(x);
            if (det_mod(h, l) != 0) {
                out.certified = true;
                out.point = x;
                return out;
            }
        }
        std::size_t k = 0;
        while (k < active.size() && x[active[k]] == l - 1) x[active[k++]] = 1;
        if (k == active.size()) return out;
        ++x[active[k]];
    }
}

std::string point_string(const std::vector<std::string>& names, const std::vector<std::uint64_t>& x)
{
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += names[i] + " = " + std::to_string(x[i]);
    }
    return s;
}

FaceFinding heuristic_face(const Polynomial& g, const NonCritParams& params, std::uint64_t& budget)
{
    FaceFinding r;
    for (const auto& d : g.partials()) {
        if (d.num_terms() == 1) {
            r.verdict = Verdict::non_critical;
            r.method = "monomial_partial";
            r.witness = "partial " + d.to_string() + " has no torus zero";
            return r;
        }
    }
    r.method = "finite_field";
    r.heuristic = true;
    bool all_clear = true;
    for (auto l : params.aux_primes) {
        TorusScan s = scan_torus(g, l, budget, true);
        if (s.certified) {
            r.verdict = Verdict::critical;
            r.heuristic = false;
            r.witness = "nondegenerate zero mod " + std::to_string(l) + " at " + point_string(g.variables(), s.point) + " lifts";
            return r;
        }
        if (s.found || !s.complete) all_clear = false;
        if (s.found && r.witness.empty())
            r.witness = "degenerate zero mod " + std::to_string(l) + " at " + point_string(g.variables(), s.point);
    }
    if (all_clear) {
        r.verdict = Verdict::non_critical;
        r.witness = "no torus zero mod any auxiliary prime";
    } else {
        r.verdict = Verdict::inconclusive;
        if (r.witness.empty()) r.witness = "search budget exhausted";
    }
    return r;
}

Verdict combine(const std::vector<Verdict>& vs)
{
    if (std::find(vs.begin(), vs.end(), Verdict::critical) != vs.end()) return Verdict::critical;
    if (std::find(vs.begin(), vs.end(), Verdict::inconclusive) != vs.end()) return Verdict::inconclusive;
    return Verdict::non_critical;
}

}  // namespace

FaceFinding torus_critical_exact(const Polynomial& g)
{
    if (g.num_vars() == 1) return exact_univariate(g);
    if (g.num_vars() == 2) return exact_bivariate(g);
    FaceFinding r;
    r.method = "exact";
    r.witness = "exact elimination only for n <= 2";
    return r;
}

NonCritReport check_noncritical(const Polynomial& f, const NonCritParams& params)
{
    const auto poly = NewtonPolyhedron::build(f);
    NonCritReport rep;
    std::uint64_t budget = params.budget;
    std::vector<Verdict> verdicts;
    const bool exact = params.mode == NonCritMode::exact_small && f.num_vars() <= 2;
    for (std::size_t i = 0; i < poly.faces().size(); ++i) {
        const Polynomial g = face_polynomial(f, poly, poly.faces()[i]);
        FaceFinding ff = exact ? torus_critical_exact(g) : heuristic_face(g, params, budget);
        ff.face = i;
        verdicts.push_back(ff.verdict);
        rep.faces.push_back(std::move(ff));
    }
    rep.verdict = combine(verdicts);
    rep.heuristic = rep.verdict != Verdict::critical &&
                    std::any_of(rep.faces.begin(), rep.faces.end(), [](const FaceFinding& ff) { return ff.heuristic; });

    for (auto p : params.residue_primes) {
        ResidueFinding rf;
        rf.p = p;
        bool complete = true;
        for (std::size_t i = 0; i < poly.faces().size(); ++i) {
            const Polynomial g = face_polynomial(f, poly, poly.faces()[i]);
            std::uint64_t local = params.budget;
            TorusScan s = scan_torus(g, p, local, false);
            if (s.found) rf.critical_faces.push_back(i);
            if (!s.complete) complete = false;
        }
        if (!rf.critical_faces.empty())
            rf.verdict = Verdict::critical;
        else
            rf.verdict = complete ? Verdict::non_critical : Verdict::inconclusive;
        rf.disagrees = rep.verdict != Verdict::inconclusive && rf.verdict != Verdict::inconclusive && rf.verdict != rep.verdict;
        rep.residue.push_back(std::move(rf));
    }
    return rep;
}

}  // namespace igusa
