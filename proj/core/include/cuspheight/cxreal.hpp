#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

namespace cuspheight {

template <unsigned Digits>
using MpfrFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                                boost::multiprecision::et_off>;

/// Dynamic-precision float for storage of certified centers.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

/// Minimal complex type usable with both double and MPFR reals.
template <class Real>
struct Cx {
    Real re{}, im{};

    Cx() = default;
    Cx(Real r) : re(std::move(r)), im(Real(0)) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const Real& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
};

template <class Real>
Real cx_abs(const Cx<Real>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

template <class Real>
Cx<Real> cx_conj(const Cx<Real>& z) {
    return {z.re, -z.im};
}

template <class Real>
Cx<Real> cx_inv(const Cx<Real>& z) {
    Real d = z.re * z.re + z.im * z.im;
    return {z.re / d, -z.im / d};
}

using Cxd = Cx<double>;

} // namespace cuspheight
