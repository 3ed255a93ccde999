#include "igusa/linalg.hpp"

#include <algorithm>

namespace igusa::linalg {

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMat& rows)
{
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (auto x : r) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    return m;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<Rational>>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const IntMat& rows)
{
    if (rows.empty()) return 0;
    auto m = to_rational(rows);
    return echelon(m, rows[0].size()).size();
}

BigInt determinant(const IntMat& a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<BigInt> cofactor_normal(const IntMat& rows)
{
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    if (rows.size() + 1 != n) throw Error("cofactor_normal needs n-1 vectors in dimension n");
    std::vector<BigInt> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMat minor;
        minor.reserve(rows.size());
        for (const auto& r : rows) {
            IntVec row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) row.push_back(r[j]);
            minor.push_back(std::move(row));
        }
        BigInt d = determinant(minor);
        a[i] = (i % 2 == 0) ? d : BigInt(-d);
    }
    return a;
}

std::optional<std::vector<Rational>> coordinates(const IntMat& basis, const IntVec& v)
{
    const std::size_t d = basis.size();
    const std::size_t n = v.size();
    // n equations, d unknowns: column j is basis[j]
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = static_cast<long>(basis[j][i]);
        m[i][d] = static_cast<long>(v[i]);
    }
    auto piv = echelon(m, d);
    if (piv.size() != d) throw Error("coordinates: basis is dependent");
    for (std::size_t i = d; i < n; ++i)
        if (m[i][d] != 0) return std::nullopt;
    std::vector<Rational> x(d);
    for (std::size_t r = 0; r < d; ++r) x[piv[r]] = m[r][d] / m[r][piv[r]];
    return x;
}

std::int64_t dot(const IntVec& a, const IntVec& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt maximal_minor_gcd(const IntMat& rows)
{
    const std::size_t d = rows.size();
    if (d == 0) return 1;
    const std::size_t n = rows[0].size();
    BigInt g = 0;
    std::vector<std::size_t> cols(d);
    for (std::size_t i = 0; i < d; ++i) cols[i] = i;
    for (;;) {
        IntMat minor(d, IntVec(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) minor[i][j] = rows[i][cols[j]];
        g = igusa::gcd(g, determinant(minor));
        // next combination
        std::size_t k = d;
        while (k > 0 && cols[k - 1] == n - d + k - 1) --k;
        if (k == 0) break;
        ++cols[k - 1];
        for (std::size_t j = k; j < d; ++j) cols[j] = cols[j - 1] + 1;
    }
    return abs(g);
}

}  // namespace igusa::linalg
