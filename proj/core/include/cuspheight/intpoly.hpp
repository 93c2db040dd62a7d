#pragma once

#include "cuspheight/numeric.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace cuspheight::exactnum {

/// Univariate polynomial over Z, coefficients low degree to high.
/// Invariant: no trailing zero coefficient (the zero polynomial has empty coeffs).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c) { return IntPoly({std::move(c)}); }
    /// c * X^k
    static IntPoly monomial(Int c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Int& lead() const;
    const Int& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat eval(const Rat& x) const;
    Int eval(const Int& x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;

    IntPoly derivative() const;
    /// Coefficient reversal X^deg * f(1/X); minimal polynomial of inverse roots.
    IntPoly reversed() const;
    /// f(c*X) for integer c (used for sign flips via c = -1).
    IntPoly scale_arg(const Int& c) const;

    std::string str(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// content * primitive == f; gcd of primitive's coefficients is 1,
/// primitive leading coefficient > 0, content carries the sign.
std::pair<Int, IntPoly> content_primitive(const IntPoly& f);

/// Exact quotient; throws input_error if g does not divide f exactly over Z.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

/// gcd over Z[X], primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// f / gcd(f, f'), primitive: same roots, all simple.
IntPoly squarefree_part(const IntPoly& f);

/// Yun decomposition: list of (squarefree factor, multiplicity), product reproduces
/// f up to the returned content unit.
struct SquarefreeDecomposition {
    Int content; // signed
    std::vector<std::pair<IntPoly, int>> factors;
};
SquarefreeDecomposition squarefree_decompose(const IntPoly& f);

/// Resultant of two univariate integer polynomials (subresultant PRS).
Int resultant(const IntPoly& f, const IntPoly& g);

/// Res_t(f(t), t^2 - e t + 1) via reduction mod the monic quadratic.
Int resultant_monic_quadratic(const IntPoly& f, const Int& e);

/// A polynomial in t whose coefficients are integer polynomials in a second
/// variable w; index = power of t.
using BivariatePoly = std::vector<IntPoly>;

/// Res_t(f(t), g(t, w)) computed exactly by evaluation/interpolation over w.
/// Requires deg_t g >= 1; evaluation points with vanishing t-leading
/// coefficient are skipped.
IntPoly resultant_eliminate(const IntPoly& f, const BivariatePoly& g);

/// p(q(X)) by Horner over Z[X].
IntPoly compose(const IntPoly& p, const IntPoly& q);

/// The m-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(int m);

/// Divides out every cyclotomic factor Phi_m for m in `orders` (repeatedly);
/// returns the stripped polynomial and the multiset of removed orders.
std::pair<IntPoly, std::vector<int>> strip_cyclotomic(IntPoly f, const std::vector<int>& orders);

/// Lagrange interpolation through (x_i, y_i) with exact rational arithmetic;
/// asserts the result has integer coefficients.
IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys);

} // namespace cuspheight::exactnum
