#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igusa/mpoly.hpp"
#include "igusa/newton.hpp"

namespace igusa {

enum class Verdict { non_critical, critical, inconclusive };
enum class NonCritMode { exact_small, heuristic };

std::string to_string(Verdict v);

struct NonCritParams {
    NonCritMode mode = NonCritMode::exact_small;
    std::vector<std::uint64_t> aux_primes{101, 103, 107};
    std::uint64_t budget = 5'000'000;  // torus point evaluations for the finite-field search
    std::vector<std::uint64_t> residue_primes;  // optional mod-p comparison
};

struct FaceFinding {
    std::size_t face = 0;  // index into NewtonPolyhedron::faces()
    Verdict verdict = Verdict::inconclusive;
    std::string method;   // "exact" or "finite_field"
    std::string witness;  // counterexample point or certificate
    bool heuristic = false;
};

/// Verdict of the same test over the torus of F_p.
struct ResidueFinding {
    std::uint64_t p = 0;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::size_t> critical_faces;
    bool disagrees = false;
};

struct NonCritReport {
    Verdict verdict = Verdict::inconclusive;
    bool heuristic = false;
    std::vector<FaceFinding> faces;
    std::vector<ResidueFinding> residue;
};

NonCritReport check_noncritical(const Polynomial& f, const NonCritParams& params = {});

/// Characteristic-0 test of one polynomial: do all partials vanish at a point with nonzero coordinates?
FaceFinding torus_critical_exact(const Polynomial& g);

}  // namespace igusa
