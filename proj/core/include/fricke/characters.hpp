#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fricke/arith.hpp"

namespace fricke {

/// Gaussian integer; character values and elliptic character sums live in
/// Z[i] with units {1, -1, i, -i}.
struct GaussInt {
    long long re = 0, im = 0;

    friend GaussInt operator+(GaussInt x, GaussInt y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussInt operator-(GaussInt x, GaussInt y) { return {x.re - y.re, x.im - y.im}; }
    friend GaussInt operator*(GaussInt x, GaussInt y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussInt operator*(long long s, GaussInt y) { return {s * y.re, s * y.im}; }
    friend bool operator==(GaussInt, GaussInt) = default;

    GaussInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline constexpr GaussInt kOne{1, 0};
inline constexpr GaussInt kMinusOne{-1, 0};
inline constexpr GaussInt kI{0, 1};
inline constexpr GaussInt kMinusI{0, -1};

std::string unit_to_string(GaussInt u);            // "+1", "-1", "+i", "-i"
GaussInt unit_from_string(std::string_view s);     // throws on bad token

/// Local 2-adic component of a quadratic character.
enum class TwoPart { None, M4, P8, M8 };

/// Trivial-or-quadratic Dirichlet character mod N, stored structurally as a
/// product of local Kronecker symbols.
class QuadChar {
  public:
    QuadChar() = default;  // trivial character mod 1
    /// Throws std::invalid_argument when a component prime does not divide N
    /// or the 2-part is incompatible with v2(N).
    QuadChar(long long N, std::vector<long long> odd_primes, TwoPart two);

    long long level() const { return level_; }
    const Factorization& level_factorization() const { return fac_; }
    const std::vector<long long>& odd_part() const { return odd_primes_; }
    TwoPart two_part() const { return two_; }
    long long conductor() const { return conductor_; }
    int parity() const { return parity_; }  // chi(-1)
    bool is_trivial() const { return conductor_ == 1; }

    int operator()(long long n) const;

    /// Local component at p as a standalone character (identity level p-power).
    bool has_odd_component(long long p) const;

    std::string spec_string() const;  // "triv" or e.g. "m4,p3,p13"

    friend bool operator==(const QuadChar&, const QuadChar&) = default;

  private:
    long long level_ = 1;
    Factorization fac_ = factorize(1);
    std::vector<long long> odd_primes_;  // ascending
    TwoPart two_ = TwoPart::None;
    long long conductor_ = 1;
    int parity_ = 1;
};

/// Parse the character spec grammar: comma-separated tokens `p<odd prime>`,
/// `m4`, `p8`, `m8`; empty or "triv" means the trivial character.
QuadChar parse_char(long long N, std::string_view spec);

/// All trivial-or-quadratic characters mod N, trivial first, deterministic.
std::vector<QuadChar> list_chars(long long N);

/// Element of the Atkin-Lehner coset union, stored exactly: represents
/// [[a*sqrt(e), b/sqrt(e)], [c*N/sqrt(e), d*sqrt(e)]] with a d e - b c N/e = 1.
struct ALMatrix {
    long long level = 1;
    long long e = 1;
    long long a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const ALMatrix&, const ALMatrix&) = default;
};

/// Canonical W_e: b = d = 1 with 0 <= a < N/e for 1 < e < N; identity for
/// e = 1; the (0,-1;1,0) pattern for e = N. Throws unless e || N.
ALMatrix atkin_lehner(long long N, long long e);

ALMatrix al_mul(const ALMatrix& m1, const ALMatrix& m2);
ALMatrix al_inverse(const ALMatrix& m);

enum class GroupKind { Gamma0, Gamma0Plus, Gamma0Star };

std::string group_to_string(GroupKind g);
GroupKind group_from_string(std::string_view s);

/// A character of Gamma0(N), Gamma0+(N) or Gamma0*(N): a QuadChar plus sign
/// values on the Atkin-Lehner involutions.
class ExtChar {
  public:
    /// For Gamma0Plus, `signs` maps N to the single unit; for Gamma0Star one
    /// unit per prime p | N (requires square-free N); for Gamma0 it is empty.
    ExtChar(QuadChar base, GroupKind kind, std::map<long long, GaussInt> signs);

    const QuadChar& base() const { return base_; }
    GroupKind kind() const { return kind_; }
    long long level() const { return base_.level(); }
    const std::map<long long, GaussInt>& signs() const { return signs_; }

    /// Value on the canonical W_e, composite e derived through the coset
    /// group law with the exact Gamma0(N) correction factor.
    GaussInt sign_at(long long e) const;

    /// Evaluate at any ALMatrix of the right level; {0,0} when the lower
    /// right Gamma0(N)-entry is not coprime to the conductor.
    GaussInt eval(const ALMatrix& m) const;

    /// Trivial restriction and all signs +1.
    bool is_trivial() const;

    std::string signs_string() const;  // "-1" or "13:+1,17:-1"

    friend bool operator==(const ExtChar&, const ExtChar&) = default;

  private:
    QuadChar base_;
    GroupKind kind_ = GroupKind::Gamma0;
    std::map<long long, GaussInt> signs_;
};

/// The 1 (Gamma0), 2 (Gamma0Plus) or 2^omega(N) (Gamma0Star) extensions of
/// chi, deterministic order. Gamma0Star throws for non-square-free N.
std::vector<ExtChar> extensions(const QuadChar& chi, GroupKind kind);

ExtChar conjugate(const ExtChar& c);

/// True when no character of Gamma0*(N) restricts to chi: the coset cocycle
/// chi(W_p W_q (W_pq)^{-1}) is asymmetric for some prime pair p, q | N, which
/// happens exactly when chi_p(q) chi_q(p) = -1.  The Atkin-Lehner involutions
/// then anticommute on the chi-eigenspace and no joint eigenspace
/// decomposition (hence no star dimension) exists.  Sign assignments are
/// still valid coset data (ExtChar::eval stays well defined on cosets).
bool star_obstructed(const QuadChar& chi);

}  // namespace fricke
