#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

#include "fricke/characters.hpp"

namespace fricke {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Exact Gaussian rational; elliptic terms live here until their imaginary
/// parts cancel.
struct GaussRat {
    Rational re{0}, im{0};

    GaussRat() = default;
    GaussRat(Rational real, Rational imag = Rational(0)) : re(real), im(imag) {}
    GaussRat(GaussInt z) : re(z.re), im(z.im) {}

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussRat&, const GaussRat&) = default;

    bool is_real() const { return im == Rational(0); }

    /// The exact real value; throws if an imaginary residue survived.
    Rational real_checked() const {
        if (!is_real()) throw std::logic_error("imaginary part failed to cancel");
        return re;
    }
};

}  // namespace fricke
