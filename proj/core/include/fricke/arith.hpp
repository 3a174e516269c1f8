#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fricke {

/// Canonical prime factorization of a positive 64-bit integer.
struct Factorization {
    long long n = 1;
    std::vector<std::pair<long long, int>> factors;  // primes ascending

    friend bool operator==(const Factorization&, const Factorization&) = default;

    int omega() const { return static_cast<int>(factors.size()); }
    long long phi() const;
    bool is_squarefree() const;
    int valuation(long long p) const;

    /// All positive divisors, ascending.
    std::vector<long long> divisors() const;
    /// Divisors e with gcd(e, n/e) = 1, ascending (includes 1 and n).
    std::vector<long long> hall_divisors() const;
};

/// Trial division up to 2^20, then Miller-Rabin / Pollard rho for the rest.
/// Throws std::invalid_argument for n < 1.
Factorization factorize(long long n);

bool is_prime(long long n);

/// Full Kronecker symbol (a|n), defined for every pair of integers.
int kronecker(long long a, long long n);

long long pow_mod(long long base, long long exp, long long mod);
long long inv_mod(long long a, long long m);  // throws if gcd(a,m) != 1
long long mul_mod(long long a, long long b, long long m);

/// All r in [0,m) with r^2 = d (mod m), sorted. Empty when unsolvable.
std::vector<long long> sqrt_mod(long long d, long long m);

}  // namespace fricke
