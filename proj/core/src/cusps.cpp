#include "fricke/cusps.hpp"

#include <numeric>
#include <stdexcept>

namespace fricke {

std::vector<CuspRep> cusp_reps(long long N) {
    if (N < 1) throw std::invalid_argument("cusp_reps: N must be positive");
    std::vector<CuspRep> out;
    for (long long c : factorize(N).divisors()) {
        long long g = std::gcd(c, N / c);
        long long h = N / std::gcd(N, c * c);
        for (long long a = 1; a <= g; ++a)
            if (std::gcd(a, g) == 1) out.push_back({a, c, h});
    }
    return out;
}

long long nu_inf(const QuadChar& chi) {
    long long N = chi.level();
    long long f = chi.conductor();
    long long total = 0;
    auto fac = factorize(N);
    for (long long c : fac.divisors()) {
        long long g = std::gcd(c, N / c);
        if ((N / f) % g != 0) continue;
        total += factorize(g).phi();
    }
    return total;
}

Rational nu_inf_plus(const ExtChar& chi_plus) {
    if (chi_plus.kind() != GroupKind::Gamma0Plus)
        throw std::invalid_argument("nu_inf_plus: needs a Gamma0Plus character");
    long long N = chi_plus.level();
    if (N != 4) return Rational(nu_inf(chi_plus.base()), 2);
    GaussInt eps = chi_plus.sign_at(4);
    if (chi_plus.base().is_trivial())
        return (eps == kOne) ? Rational(2) : Rational(1);
    if (eps == kI) return Rational(3, 2);
    if (eps == kMinusI) return Rational(1, 2);
    // even nontrivial character mod 4 does not exist; eps = -1 with trivial
    // chi is covered above, so reaching here means eps = -1, chi nontrivial
    throw std::logic_error("nu_inf_plus: impossible N=4 character/sign combination");
}

long long cusp_count_plus(long long N) {
    if (N < 2) throw std::invalid_argument("cusp_count_plus: N must exceed 1");
    if (N == 4) return 2;
    QuadChar triv(N, {}, TwoPart::None);
    return nu_inf(triv) / 2;
}

}  // namespace fricke
