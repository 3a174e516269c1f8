#pragma once

#include <vector>

#include "fricke/characters.hpp"
#include "fricke/rational.hpp"

namespace fricke {

/// Gamma0(N)-cusp representative a/c with parabolic width datum h.
struct CuspRep {
    long long a = 0;
    long long c = 1;
    long long h = 1;  // N / gcd(N, c^2)

    friend bool operator==(const CuspRep&, const CuspRep&) = default;
};

/// Representatives a/c, c | N, a mod gcd(c, N/c) with gcd(a, c, N/c) = 1;
/// deterministic order (c ascending, then a).
std::vector<CuspRep> cusp_reps(long long N);

/// Regular-cusp count: sum of phi(gcd(c, N/c)) over c | N with
/// gcd(c, N/c) | N/f, f the conductor.
long long nu_inf(const QuadChar& chi);

/// Fricke-group cusp term; half-integral for N = 4 with odd character.
Rational nu_inf_plus(const ExtChar& chi_plus);

/// Number of cusps of Gamma0+(N).
long long cusp_count_plus(long long N);

}  // namespace fricke
