#pragma once

#include "cuspheight/intpoly.hpp"
#include "cuspheight/roots.hpp"

#include <vector>

namespace cuspheight::heights {

using exactnum::IntPoly;
using roots::RootBox;

/// L(f): sum of absolute values of the integer coefficients.
Int length(const IntPoly& f);

/// Certified [lower, upper] interval for a height or Mahler measure.
/// `exact` marks an interval obtained from a certified-irreducible minimal
/// polynomial at the requested tolerance.
struct HeightBound {
    double lower = 1.0;
    double upper = 1.0;
    bool exact = false;
};

/// Interval containing M(f) = |lead| * prod max(|root|, 1), relative width <= tol
/// when certifiable; on precision exhaustion the best interval is returned with
/// exact = false (never thrown).
HeightBound mahler_measure(const IntPoly& f, double tol = 1e-10);

struct Factor {
    IntPoly poly;
    int multiplicity = 1;
    bool irreducible = false; // certified by exhausted subset reconstruction
};

struct Factorization {
    Int content = 1;
    std::vector<Factor> factors;
    bool complete = true; // false: some factor only known possibly-reducible
};

/// Rational-root extraction, squarefree split, then subset-product
/// reconstruction from certified roots validated by exact division. Squarefree
/// factors of degree > degree_cap are searched only for factors of degree <= 6
/// and the remainder is flagged possibly-reducible.
Factorization factor_smalldeg(const IntPoly& f, int degree_cap = 24);

/// Minimal polynomial (primitive; irreducible when certification succeeded)
/// plus the certified box selecting which root.
struct AlgebraicNumber {
    IntPoly minpoly;
    RootBox box;
    bool irreducible = false;
    int excluded_degree = 1; // all proper factors of degree <= this are excluded
};

/// Packages the root in `box` (certified for `squarefree`) with the factor of
/// `squarefree` that vanishes at it.
AlgebraicNumber algebraic_from_root(const IntPoly& squarefree, const RootBox& box,
                                    int degree_cap = 24);

/// H(alpha): exact interval M(minpoly)^(1/deg) when irreducible; otherwise the
/// conservative interval [max(1, M^(1/deg f)), M^(1/(excluded_degree+1))] with
/// exact = false.
HeightBound height_of(const AlgebraicNumber& a, double tol = 1e-10);

/// Bounds for the height of a tuple: [max component lower, product of uppers].
HeightBound tuple_height_bounds(const std::vector<AlgebraicNumber>& as, double tol = 1e-10);

struct TraceTransform {
    AlgebraicNumber w; // w = t + 1/t
    AlgebraicNumber s; // s^2 = w + 2, branch with nonnegative real part
};

/// Two-stage minimal-polynomial transform for the core trace: resultant with
/// t^2 - w t + 1, then substitution w = s^2 - 2; factor selection is certified
/// against the tracked root box. Throws verification_failure on persistent
/// factor-selection ambiguity.
TraceTransform minpoly_trace_transform(const IntPoly& f, const RootBox& which_root,
                                       int degree_cap = 24);

/// Resultant-based candidates containing the minimal polynomial of a sum or
/// product of two algebraic numbers (used by the property suites).
IntPoly sum_minpoly_candidate(const IntPoly& f, const IntPoly& g);
IntPoly product_minpoly_candidate(const IntPoly& f, const IntPoly& g);

/// Candidate orders of roots of unity among the roots of a squarefree
/// polynomial, guessed from numeric arguments (verification is exact trial
/// division by callers).
std::vector<int> guess_unity_orders(const IntPoly& squarefree, int max_order);

/// Strips all cyclotomic factors exactly (orders guessed numerically, divisions
/// exact). Returns stripped polynomial and removed orders.
std::pair<IntPoly, std::vector<int>> remove_unity_roots(const IntPoly& squarefree);

} // namespace cuspheight::heights
