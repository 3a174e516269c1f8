#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fricke/arith.hpp"

namespace fricke {

/// Integral binary quadratic form Ax^2 + Bxy + Cy^2.
struct QForm {
    long long a = 0, b = 0, c = 0;

    long long disc() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool is_positive_definite() const { return disc() < 0 && a > 0; }

    auto operator<=>(const QForm&) const = default;
};

/// Gauss reduction to the unique reduced representative:
/// |B| <= A <= C, with B >= 0 when |B| = A or A = C.
/// Throws std::invalid_argument unless the form is positive definite.
QForm reduce(QForm q);

bool is_reduced(const QForm& q);

/// All primitive reduced forms of discriminant disc < 0, ordered by (A, B).
/// Throws std::invalid_argument unless disc = 0 or 1 (mod 4).
std::vector<QForm> reduced_forms(long long disc);

/// h(disc), memoized.
long long class_number(long long disc);

/// disc = fund * l^2 with fund a fundamental discriminant.
std::pair<long long, long long> fundamental_part(long long disc);

/// One generic character of a discriminant: a Kronecker local symbol.
/// Either (.|p) for an odd prime p, or one of the 2-adic symbols
/// (-1|.), (2|.), (-2|.).
struct GenericChar {
    enum class Kind { OddPrime, M4, P8, M8 };
    Kind kind = Kind::OddPrime;
    long long p = 0;  // set for Kind::OddPrime

    int eval(long long r) const;
    std::string label() const;
};

/// Generic characters of disc = -4N, ordered: odd primes ascending,
/// then the 2-adic symbols in order (-1|.), (2|.), (-2|.).
std::vector<GenericChar> generic_characters(long long N);

/// Same, keyed by the discriminant itself (handles odd disc = 1 mod 4).
std::vector<GenericChar> generic_characters_for_disc(long long disc);

/// Smallest positive value of Q coprime to `coprime_to`.
long long represented_value(const QForm& q, long long coprime_to);

struct GenusTable {
    struct Genus {
        std::vector<int> signs;  // one per character, +1 / -1
        std::vector<QForm> classes;
    };
    long long disc = 0;
    std::vector<GenericChar> characters;
    std::vector<Genus> genera;  // ordered by sign vector
};

/// Partition the form classes of disc into genera by generic-character values.
GenusTable genus_partition(long long disc);

}  // namespace fricke
