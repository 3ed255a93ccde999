#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igusa/numeric.hpp"

namespace igusa::linalg {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major, rows are vectors

/// Rank of a set of integer row vectors, exact.
std::size_t rank(const IntMat& rows);

/// Determinant of a square integer matrix (Bareiss, exact).
BigInt determinant(const IntMat& m);

/// The generalized cross product of n-1 vectors in Z^n: a_i = (-1)^i det(M without column i).
/// Zero iff the rows are dependent.
std::vector<BigInt> cofactor_normal(const IntMat& rows);

/// Coordinates of v in the basis `basis` (linearly independent rows), or nullopt if v is outside their span.
std::optional<std::vector<Rational>> coordinates(const IntMat& basis, const IntVec& v);

std::int64_t dot(const IntVec& a, const IntVec& b);

/// gcd of all maximal minors of the rows (rows independent).
BigInt maximal_minor_gcd(const IntMat& rows);

}  // namespace igusa::linalg
