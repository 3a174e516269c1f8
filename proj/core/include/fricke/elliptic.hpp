#pragma once

#include <utility>
#include <vector>

#include "fricke/characters.hpp"
#include "fricke/qforms.hpp"

namespace fricke {

/// Roots of s^2 + 1 = 0 (mod N), sorted.
std::vector<long long> a4_set(long long N);
/// Roots of s^2 + s + 1 = 0 (mod N), sorted.
std::vector<long long> a3_set(long long N);
/// Size-2 orbits of s ~ -1-s on a3_set(N); the involution-fixed orbit at
/// N = 3 is excluded (its point has order 6 upstairs).
std::vector<std::pair<long long, long long>> a3_orbits(long long N);

long long nu2(const QuadChar& chi);
long long nu3(const QuadChar& chi);

long long nu3_plus(const ExtChar& chi_plus);

/// Order-2 point count of Gamma0+(N) coming from the W_N coset, N >= 4:
/// h(-4N), plus h(-N) when N = 3 (mod 4).
long long extra_count_plus(long long N);

/// Closed form (Prop.-style case list; trivial character via the count
/// formula) and the independent class-enumeration oracle.
GaussInt nu2_plus(const ExtChar& chi_plus);
GaussInt nu2_plus_oracle(const ExtChar& chi_plus);

/// One Gamma0(N)-class of trace-zero elements of W_e Gamma0(N).  Primitive
/// classes (and, at odd N, half classes) are keyed by the Gross-Zagier
/// invariants (rho, reduced class); at even N the half classes with odd
/// halved leading coefficient carry no congruence invariant and are separated
/// by an exact Gamma0(N)-equivalence test instead.
struct EllipticClassStar {
    enum class Subfamily { Primitive, Half };

    long long e = 1;
    long long rho = 0;  // middle coefficient mod 2N (odd halved leading
                        // coefficient at even N: mod N)
    Subfamily subfamily = Subfamily::Primitive;
    QForm cls;     // reduced, discriminant -4e (Primitive) or -e (Half)
    ALMatrix gen;  // canonical trace-zero representative, c > 0

    friend bool operator==(const EllipticClassStar&, const EllipticClassStar&) = default;
};

/// All classes for a Hall divisor e > 1 of square-free N; enumeration runs
/// until the class-number-predicted count is reached.
std::vector<EllipticClassStar> star_elliptic_classes(long long N, long long e);

/// Inner character sum over star_elliptic_classes(N, e): chi evaluated on the
/// Gamma0(N) part of each canonical representative; S_e = chi*(W_e) times this.
long long star_class_sum(const QuadChar& chi, long long e);

GaussInt star_Se(const ExtChar& chi_star, long long e);

GaussInt nu2_star(const ExtChar& chi_star);

int nu3_star(long long N);
int delta8_star(long long N);
int delta12_star(long long N);

/// An elliptic generator of PSL-order n (4 or 6) in the W_2 / W_3 coset,
/// oriented so the derivative at its fixed point is e^{+2 pi i / n}.
/// Requires 2 | N (n = 4) or 3 | N (n = 6); such an element must exist.
ALMatrix elliptic_generator(long long N, int n);

}  // namespace fricke
