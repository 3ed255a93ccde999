#pragma once

// Slow, independent reference computations used as test oracles.

#include <cstdint>
#include <vector>

#include "igusa/mpoly.hpp"
#include "igusa/newton.hpp"

namespace ref {

using igusa::BigInt;
using igusa::Polynomial;
using igusa::Rational;

/// #{x mod p^m : f(x) = 0 mod p^m} by enumerating every residue.
BigInt naive_count(const Polynomial& f, std::uint64_t p, unsigned m);

/// Coefficients 0..depth-1 of sum_m vol{v(f) = m} t^m from naive counts.
std::vector<Rational> naive_series(const Polynomial& f, std::uint64_t p, unsigned depth);

/// Primitive normals of all facets, found by scanning weight vectors in [0, bound]^n.
std::vector<std::vector<std::int64_t>> scan_facet_normals(const Polynomial& f, std::int64_t bound);

/// Face index with the same meet set and rays as the minimizers of a (a != 0).
std::vector<std::size_t> minimizers(const igusa::NewtonPolyhedron& poly, const std::vector<std::int64_t>& a);

/// Direct minimization of min v(grad f(x)) or with f over x mod p^k.
std::uint64_t brute_sup(const Polynomial& f, std::uint64_t p, unsigned k, bool with_f);

/// Deterministic pseudo-random polynomials with small support and f(0) = 0.
std::vector<Polynomial> random_corpus(std::size_t count, std::size_t nvars, unsigned seed);

}  // namespace ref
