#pragma once

#include "cuspheight/cxreal.hpp"
#include "cuspheight/intpoly.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace cuspheight::roots {

using exactnum::IntPoly;

/// Certified isolating disk: the closed disk |z - center| <= radius contains
/// exactly one root of the source polynomial, and disks of one isolation run
/// are pairwise disjoint.
struct RootBox {
    BigFloat re, im;
    double radius = 0.0;
    std::uint64_t poly_id = 0;

    std::complex<double> center() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

enum class CircleVerdict { inside_unit, outside_unit, undecidable_at_precision };

struct PrecisionPolicy {
    int max_bits = 4096; // hard cap of the doubling ladder
};

struct IsolationResult {
    std::vector<RootBox> boxes;
    bool reached_target = true; // false: certified isolation only to `achieved`
    double achieved = 0.0;      // largest certified radius
};

std::uint64_t poly_fingerprint(const IntPoly& f);

/// Certified isolation of all complex roots of a squarefree polynomial.
/// Boxes are sorted by (re, im) of the center for determinism. Throws
/// precision_exhausted only if no certificate exists at the cap; if the
/// certificate exists but radii exceed target_radius, returns them with
/// reached_target = false.
IsolationResult find_roots(const IntPoly& f, double target_radius,
                           const PrecisionPolicy& policy = {});

CircleVerdict unit_circle_test(const RootBox& box);

/// Same root, radius <= new_radius (Newton re-isolation with re-certification).
/// Throws precision_exhausted if the ladder cap is reached, and input_error if
/// the refined root cannot be matched unambiguously to the input box.
RootBox refine(const IntPoly& f, const RootBox& box, double new_radius,
               const PrecisionPolicy& policy = {});

/// Modulus interval [lo, hi] of the boxed root.
std::pair<double, double> modulus_interval(const RootBox& box);

} // namespace cuspheight::roots
