#pragma once

#include <string>
#include <vector>

#include "fricke/characters.hpp"
#include "fricke/cusps.hpp"
#include "fricke/elliptic.hpp"
#include "fricke/rational.hpp"

namespace fricke {

/// Exact coefficient tables. Orders 3 and 4 ignore the sign; order 8 requires
/// a real sign and even k, order 12 requires real sign <-> even k and
/// imaginary sign <-> odd k (the populated table cells). Empty cells throw
/// std::invalid_argument.
GaussRat gamma_coeff(int order, long long k, GaussInt sign = kOne);

/// Index term nu_0 of the group: N prod(1 + 1/p), its half, or its
/// 2^{-omega} fraction. Star requires square-free N.
Rational index_nu0(GroupKind kind, long long N);

/// Exact term breakdown of the dimension identity
/// dim S_k(chi) - dim M_{2-k}(conj chi) = sum of the six terms.
struct DimTerms {
    Rational index, e2, e3, d8, d12, cusp;

    Rational total() const { return index + e2 + e3 + d8 + d12 + cusp; }
};

/// Requires matching parity chi(-1) = (-1)^k; throws std::invalid_argument
/// otherwise. Imaginary parts of the elliptic terms must cancel exactly
/// (std::logic_error if not).
DimTerms dim_terms(const ExtChar& chi, long long k);

Rational dim_diff(const ExtChar& chi, long long k);

/// k = 1 throws std::domain_error everywhere below.
long long dim_cusp(const ExtChar& chi, long long k);        // 0 for k <= 0
long long dim_modular(const ExtChar& chi, long long k);     // defined for k != 1
long long dim_eisenstein(const ExtChar& chi, long long k);  // k >= 2

/// Genus of X_0^+(N), N > 1.
long long genus_plus(long long N);

/// dim of weight-k forms vanishing on a cuspidal divisor complement:
/// dim_cusp + deg D. Requires k > 2.
long long riemann_roch_dim(const ExtChar& chi, long long k, long long degD);

struct PowerRelationReport {
    struct Relation {
        std::string name;  // "sum-extensions-plus", "sum-extensions-star",
                           // "halving", "two-power"
        bool applicable = false;
        bool passed = true;  // skipped relations count as passed
        std::string detail;
    };
    long long level = 0;
    long long weight = 0;
    std::string chi_spec;
    std::vector<Relation> relations;

    bool all_passed() const;
};

/// Checks the sum-over-extensions identity (both groups), the N = 1 (mod 4)
/// halving relation, and the 2^{-omega} relation, where applicable.
PowerRelationReport verify_power_relations(long long N, const QuadChar& chi, long long k);

/// Full per-query result consumed by the CLI and the JSON layer.
struct DimReport {
    GroupKind group = GroupKind::Gamma0;
    long long level = 1;
    long long weight = 0;
    std::string chi_spec;
    std::string signs_spec;

    DimTerms terms;  // zeroed when dims are undefined or the space vanishes

    bool dims_defined = false;
    long long dim_cusp = 0;
    long long dim_modular = 0;
    long long dim_eisenstein = 0;

    bool parity_vanishing = false;
    bool weight_unsupported = false;
    bool star_obstruction = false;  // Gamma0Star with a non-extending chi
};

DimReport compute_report(const ExtChar& chi, long long k);

}  // namespace fricke
