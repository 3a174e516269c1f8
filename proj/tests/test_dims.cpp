#include <doctest.h>

#include <algorithm>

#include "fricke/dims.hpp"

using namespace fricke;

namespace {

ExtChar g0(const QuadChar& chi) { return ExtChar(chi, GroupKind::Gamma0, {}); }

ExtChar plus(const QuadChar& chi, GaussInt eps) {
    return ExtChar(chi, GroupKind::Gamma0Plus, {{chi.level(), eps}});
}

}  // namespace

TEST_CASE("gamma coefficient tables") {
    CHECK(gamma_coeff(3, 12) == GaussRat(Rational(1, 3)));
    CHECK(gamma_coeff(3, 7) == GaussRat(Rational(0)));
    CHECK(gamma_coeff(3, 2) == GaussRat(Rational(-1, 3)));
    CHECK(gamma_coeff(4, 6) == GaussRat(Rational(-1, 4)));
    CHECK(gamma_coeff(4, 12) == GaussRat(Rational(1, 4)));
    CHECK(gamma_coeff(4, 5) == GaussRat(Rational(0), Rational(1, 4)));
    CHECK(gamma_coeff(4, 7) == GaussRat(Rational(0), Rational(-1, 4)));
    CHECK(gamma_coeff(8, 6, kOne) == GaussRat(Rational(1, 8)));
    CHECK(gamma_coeff(12, 5, kMinusI) == GaussRat(Rational(-5, 12)));
    CHECK(gamma_coeff(12, 2, kOne) == GaussRat(Rational(-5, 12)));
    CHECK_THROWS(gamma_coeff(8, 5, kOne));       // odd k not in the order-8 table
    CHECK_THROWS(gamma_coeff(8, 6, kI));         // imaginary sign not in the table
    CHECK_THROWS(gamma_coeff(12, 6, kI));        // parity/sign mismatch
    CHECK_THROWS(gamma_coeff(12, 5, kMinusOne));
    CHECK_THROWS(gamma_coeff(5, 4, kOne));
}

TEST_CASE("gamma reflection antisymmetry") {
    for (long long k = -10; k <= 14; k += 2)
        for (GaussInt sign : {kOne, kMinusOne})
            for (int order : {3, 4, 8, 12}) {
                GaussRat a = gamma_coeff(order, k, sign);
                GaussRat b = gamma_coeff(order, 2 - k, sign);
                CHECK(a + b == GaussRat(Rational(0)));
            }
}

TEST_CASE("index term") {
    CHECK(index_nu0(GroupKind::Gamma0, 221) == Rational(252));
    CHECK(index_nu0(GroupKind::Gamma0Plus, 221) == Rational(126));
    CHECK(index_nu0(GroupKind::Gamma0Star, 221) == Rational(63));
    CHECK(index_nu0(GroupKind::Gamma0, 1) == Rational(1));
    CHECK(index_nu0(GroupKind::Gamma0Plus, 2) == Rational(3, 2));
    CHECK_THROWS(index_nu0(GroupKind::Gamma0Star, 12));
}

TEST_CASE("dim_diff worked values") {
    QuadChar triv3(3, {}, TwoPart::None);
    CHECK(dim_diff(plus(triv3, kOne), 2) == Rational(-1));
    QuadChar chi = parse_char(221, "p13,p17");
    CHECK(dim_diff(plus(chi, kMinusOne), 6) == Rational(52));
    ExtChar star(chi, GroupKind::Gamma0Star, {{13, kMinusOne}, {17, kMinusOne}});
    CHECK(dim_diff(star, 6) == Rational(26));
    CHECK_THROWS(dim_diff(g0(chi), 5));  // parity mismatch
}

TEST_CASE("classical level-1 and small-level dimensions") {
    QuadChar triv1(1, {}, TwoPart::None);
    ExtChar e1 = g0(triv1);
    // dim S_k(SL_2(Z)) and dim M_k for k = 2, 4, ..., 26
    const long long cusp[] = {0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1};
    // note M_2(SL_2(Z)) = 0: there is no weight-2 level-1 Eisenstein series
    const long long mod[] = {0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2};
    for (int i = 0; i <= 12; ++i) {
        CHECK(dim_cusp(e1, 2 + 2 * i) == cusp[i]);
        CHECK(dim_modular(e1, 2 + 2 * i) == mod[i]);
    }
    CHECK(dim_modular(e1, 0) == 1);
    CHECK(dim_modular(e1, -4) == 0);

    // genus of X_0(N) = dim S_2(Gamma0(N))
    const std::pair<long long, long long> genus[] = {
        {11, 1}, {14, 1}, {15, 1}, {17, 1}, {20, 1}, {23, 2},
        {30, 3}, {37, 2}, {49, 1}, {50, 2}, {71, 6}, {100, 7}};
    for (auto [N, g] : genus)
        CHECK(dim_cusp(g0(QuadChar(N, {}, TwoPart::None)), 2) == g);

    CHECK(dim_cusp(g0(QuadChar(2, {}, TwoPart::None)), 8) == 1);
    CHECK(dim_cusp(g0(QuadChar(5, {}, TwoPart::None)), 4) == 1);
    CHECK(dim_modular(g0(QuadChar(2, {}, TwoPart::None)), 4) == 2);
}

TEST_CASE("headline dimensions") {
    QuadChar chi = parse_char(221, "p13,p17");
    CHECK(dim_cusp(g0(chi), 6) == 104);
    CHECK(dim_cusp(plus(chi, kMinusOne), 6) == 52);
    CHECK(dim_cusp(plus(chi, kOne), 6) == 52);
    ExtChar star(chi, GroupKind::Gamma0Star, {{13, kMinusOne}, {17, kMinusOne}});
    CHECK(dim_cusp(star, 6) == 26);
    CHECK(dim_eisenstein(plus(chi, kMinusOne), 6) == 2);
    CHECK(dim_modular(plus(chi, kMinusOne), 6) == 54);
    CHECK(dim_eisenstein(star, 6) == 1);
}

TEST_CASE("weight edge cases") {
    QuadChar triv(5, {}, TwoPart::None);
    CHECK_THROWS_AS(dim_cusp(g0(triv), 1), std::domain_error);
    CHECK_THROWS_AS(dim_modular(g0(triv), 1), std::domain_error);
    CHECK_THROWS_AS(dim_eisenstein(g0(triv), 1), std::domain_error);
    CHECK(dim_cusp(g0(triv), 0) == 0);
    CHECK(dim_cusp(g0(triv), -2) == 0);
    // parity vanishing
    QuadChar odd = parse_char(3, "p3");
    CHECK(dim_cusp(g0(odd), 4) == 0);
    CHECK(dim_modular(g0(odd), 4) == 0);
}

TEST_CASE("genus_plus known values") {
    const long long zero_levels[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};
    for (long long N : zero_levels) CHECK(genus_plus(N) == 0);
    CHECK(genus_plus(37) == 1);
    CHECK(genus_plus(4) == 0);
    // genus equals dim S_2 of the trivial extension
    for (long long N = 2; N <= 150; ++N) {
        QuadChar triv(N, {}, TwoPart::None);
        CHECK(genus_plus(N) == dim_cusp(plus(triv, kOne), 2));
    }
}

TEST_CASE("eisenstein dimensions") {
    for (long long N = 2; N <= 100; ++N) {
        for (const QuadChar& chi : list_chars(N)) {
            for (GroupKind kind : {GroupKind::Gamma0, GroupKind::Gamma0Plus}) {
                for (const ExtChar& xc : extensions(chi, kind)) {
                    for (long long k = 2; k <= 9; ++k) {
                        long long s = dim_cusp(xc, k);
                        long long m = dim_modular(xc, k);
                        long long e = dim_eisenstein(xc, k);
                        CHECK(m == s + e);
                        CHECK(e >= 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("star equals plus at prime levels") {
    for (long long N : {2LL, 3LL, 5LL, 7LL, 13LL, 17LL, 37LL}) {
        for (const QuadChar& chi : list_chars(N)) {
            for (long long k = 2; k <= 9; ++k) {
                if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
                std::vector<long long> from_plus, from_star;
                for (const ExtChar& xc : extensions(chi, GroupKind::Gamma0Plus))
                    from_plus.push_back(dim_cusp(xc, k));
                for (const ExtChar& xc : extensions(chi, GroupKind::Gamma0Star))
                    from_star.push_back(dim_cusp(xc, k));
                std::sort(from_plus.begin(), from_plus.end());
                std::sort(from_star.begin(), from_star.end());
                CHECK(from_plus == from_star);
            }
        }
    }
}

TEST_CASE("riemann_roch_dim") {
    QuadChar chi = parse_char(221, "p13,p17");
    CHECK(riemann_roch_dim(plus(chi, kMinusOne), 6, 0) == 52);
    CHECK(riemann_roch_dim(plus(chi, kMinusOne), 6, 3) == 55);
    CHECK(riemann_roch_dim(g0(chi), 6, 1) == 105);
    CHECK_THROWS_AS(riemann_roch_dim(g0(chi), 2, 0), std::domain_error);
}

TEST_CASE("verify_power_relations at the headline level") {
    auto rep = verify_power_relations(221, parse_char(221, "p13,p17"), 6);
    CHECK(rep.all_passed());
    for (const auto& r : rep.relations) CHECK(r.applicable);
    auto rep5 = verify_power_relations(5, QuadChar(5, {}, TwoPart::None), 4);
    CHECK(rep5.all_passed());
    bool halving_skipped = false;
    for (const auto& r : rep5.relations)
        if (r.name == "halving" && !r.applicable) halving_skipped = true;
    CHECK(halving_skipped);
}

TEST_CASE("monotonicity regression alarm") {
    // Gamma0 only: S_k grows with k because multiplying by level-1 Eisenstein
    // series embeds S_k into S_{k+4}.  The Fricke eigenspaces are genuinely
    // non-monotone (E_4 | W_N = N^2 E_4(N tau) does not preserve the
    // eigenvalue); e.g. dim S_8(Gamma0+(2)) = 1 but dim S_10(Gamma0+(2)) = 0.
    for (long long N = 2; N <= 60; ++N) {
        QuadChar triv(N, {}, TwoPart::None);
        ExtChar xc(triv, GroupKind::Gamma0, {});
        long long prev = 0;
        for (long long k = 2; k <= 12; k += 2) {
            long long cur = dim_cusp(xc, k);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("obstructed star characters have no dimensions") {
    // chi = (.|3) at N = 6: chi_3(2) chi_2(3) = (2|3) = -1, so W_2 and W_3
    // anticommute on the chi-eigenspace and no joint eigenspaces exist.
    QuadChar chi6 = parse_char(6, "p3");
    CHECK(star_obstructed(chi6));
    for (const ExtChar& xc : extensions(chi6, GroupKind::Gamma0Star))
        CHECK_THROWS_AS(dim_cusp(xc, 5), std::domain_error);
    DimReport rep = compute_report(extensions(chi6, GroupKind::Gamma0Star).front(), 5);
    CHECK(rep.star_obstruction);
    CHECK(!rep.dims_defined);
    // unobstructed: full-conductor character at N = 65 (both primes 1 mod 4)
    CHECK(!star_obstructed(parse_char(65, "p5,p13")));
    // obstructed: a single odd component at N = 65
    CHECK(star_obstructed(parse_char(65, "p5")));
}

TEST_CASE("compute_report flags") {
    QuadChar odd = parse_char(3, "p3");
    DimReport vanish = compute_report(g0(odd), 4);
    CHECK(vanish.parity_vanishing);
    CHECK(vanish.dims_defined);
    CHECK(vanish.dim_cusp == 0);
    DimReport w1 = compute_report(g0(odd), 1);
    CHECK(w1.weight_unsupported);
    CHECK(!w1.dims_defined);
    QuadChar chi = parse_char(221, "p13,p17");
    DimReport rep = compute_report(plus(chi, kMinusOne), 6);
    CHECK(rep.dim_cusp == 52);
    CHECK(rep.terms.total() == Rational(52));
}
