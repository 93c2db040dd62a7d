#include <doctest.h>

#include "cuspheight/heights.hpp"

#include <cmath>
#include <random>

using namespace cuspheight;
using namespace cuspheight::exactnum;
using namespace cuspheight::heights;

namespace {
IntPoly P(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

AlgebraicNumber make_alg(const IntPoly& f, std::complex<double> near) {
    IntPoly sf = squarefree_part(f);
    auto iso = roots::find_roots(sf, 1e-12);
    for (const auto& b : iso.boxes)
        if (std::abs(b.center() - near) < 1e-6) return algebraic_from_root(sf, b);
    REQUIRE(false);
    return {};
}
} // namespace

TEST_CASE("length") {
    CHECK(length(P({-1, -1, 1})) == 3);
    CHECK(length(P({3, 2})) == 5);
    CHECK(length(P({1, 0, -2, 0, 1})) == 4);
}

TEST_CASE("mahler measure: basic values") {
    auto m1 = mahler_measure(P({-2, 1}));
    CHECK(m1.lower <= 2.0);
    CHECK(m1.upper >= 2.0);
    CHECK(m1.upper - m1.lower < 1e-9);
    auto m2 = mahler_measure(P({1, 1, 1})); // roots on unit circle
    CHECK(m2.lower == 1.0);
    CHECK(m2.upper < 1.0 + 1e-9);
    auto m3 = mahler_measure(P({-1, -1, 1})); // golden ratio
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(m3.lower <= phi);
    CHECK(m3.upper >= phi);
    CHECK(m3.upper / m3.lower - 1 < 1e-9);
}

TEST_CASE("mahler measure: plastic number frozen oracle") {
    auto m = mahler_measure(P({-1, -1, 0, 1}));
    CHECK(m.lower <= 1.3247179572447461);
    CHECK(m.upper >= 1.3247179572447459);
}

TEST_CASE("mahler multiplicativity and length domination randomized") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dc(-10, 10), dd(1, 8);
    int done = 0;
    for (int trial = 0; trial < 500 && done < 160; ++trial) {
        int da = dd(rng), db = dd(rng);
        std::vector<Int> va(static_cast<size_t>(da) + 1), vb(static_cast<size_t>(db) + 1);
        for (auto& c : va) c = dc(rng);
        for (auto& c : vb) c = dc(rng);
        IntPoly a(std::move(va)), b(std::move(vb));
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        auto ma = mahler_measure(a, 1e-10), mb = mahler_measure(b, 1e-10);
        auto mab = mahler_measure(a * b, 1e-10);
        CHECK(mab.lower <= ma.upper * mb.upper * (1 + 1e-9));
        CHECK(mab.upper >= ma.lower * mb.lower * (1 - 1e-9));
        CHECK(ma.lower <= length(a).convert_to<double>() * (1 + 1e-12));
    }
    CHECK(done >= 100);
}

TEST_CASE("factor_smalldeg: spec examples") {
    auto f1 = factor_smalldeg(P({-1, 0, 1})); // X^2-1 = (X-1)(X+1)
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.complete);
    auto f2 = factor_smalldeg(P({-1, 0, 0, 0, 1})); // X^4-1
    REQUIRE(f2.factors.size() == 3);
    int deg2 = 0;
    for (auto& fc : f2.factors) {
        CHECK(fc.irreducible);
        if (fc.poly.degree() == 2) {
            CHECK(fc.poly == P({1, 0, 1}));
            ++deg2;
        }
    }
    CHECK(deg2 == 1);
    auto f3 = factor_smalldeg(P({-1, -1, 1}));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].irreducible);
    CHECK(f3.factors[0].poly == P({-1, -1, 1}));
}

TEST_CASE("factorization soundness: product reassembles, randomized") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> dc(-6, 6);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 60; ++trial) {
        std::vector<Int> va(4), vb(4), vcc(3);
        for (auto& c : va) c = dc(rng);
        for (auto& c : vb) c = dc(rng);
        for (auto& c : vcc) c = dc(rng);
        IntPoly a(std::move(va)), b(std::move(vb)), c(std::move(vcc));
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        IntPoly f = a * b * c;
        ++done;
        auto fac = factor_smalldeg(f);
        IntPoly prod = IntPoly::constant(fac.content);
        for (auto& fc : fac.factors)
            for (int i = 0; i < fc.multiplicity; ++i) prod = prod * fc.poly;
        CHECK(prod == f);
        CHECK(fac.complete);
    }
    CHECK(done >= 40);
}

TEST_CASE("height: integers, inverses, golden ratio") {
    auto a2 = make_alg(P({-2, 1}), {2.0, 0.0});
    auto h2 = height_of(a2);
    CHECK(h2.exact);
    CHECK(h2.lower <= 2.0);
    CHECK(h2.upper >= 2.0);
    CHECK(h2.upper / h2.lower < 1 + 1e-9);

    auto ahalf = make_alg(P({-1, 2}), {0.5, 0.0});
    auto hhalf = height_of(ahalf);
    CHECK(hhalf.lower <= 2.0);
    CHECK(hhalf.upper >= 2.0);

    auto phi = make_alg(P({-1, -1, 1}), {1.6180339887, 0.0});
    auto hphi = height_of(phi);
    double expect = std::sqrt((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(hphi.lower <= expect);
    CHECK(hphi.upper >= expect);
    CHECK(hphi.upper / hphi.lower < 1 + 1e-9);
    CHECK(std::abs(expect - 1.2720196495) < 1e-9);
}

TEST_CASE("inversion: H(a) = H(1/a) via reversed minpoly") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> dc(-8, 8);
    int done = 0;
    for (int trial = 0; trial < 100 && done < 30; ++trial) {
        std::vector<Int> v(4);
        for (auto& c : v) c = dc(rng);
        IntPoly f(std::move(v));
        if (f.degree() < 2 || f[0] == 0) continue;
        IntPoly sf = squarefree_part(f);
        if (sf.degree() < 1) continue;
        ++done;
        auto mf = mahler_measure(sf, 1e-11);
        auto mr = mahler_measure(sf.reversed(), 1e-11);
        CHECK(mf.lower <= mr.upper * (1 + 1e-9));
        CHECK(mr.lower <= mf.upper * (1 + 1e-9));
    }
    CHECK(done >= 20);
}

TEST_CASE("tuple height bounds") {
    auto a2 = make_alg(P({-2, 1}), {2.0, 0.0});
    auto ahalf = make_alg(P({-1, 2}), {0.5, 0.0});
    auto t1 = tuple_height_bounds({a2});
    CHECK(t1.lower <= 2.0);
    CHECK(t1.upper >= 2.0);
    auto t2 = tuple_height_bounds({a2, ahalf});
    CHECK(t2.lower >= 2.0 - 1e-9);
    CHECK(t2.upper <= 4.0 + 1e-8);
    CHECK(t2.upper >= 4.0 - 1e-8);
    auto one = make_alg(P({-1, 1}), {1.0, 0.0});
    auto t3 = tuple_height_bounds({one, one});
    CHECK(t3.lower == 1.0);
    CHECK(t3.upper <= 1.0 + 1e-9);
}

TEST_CASE("trace transform: t = 2") {
    auto iso = roots::find_roots(P({-2, 1}), 1e-12);
    auto tt = minpoly_trace_transform(P({-2, 1}), iso.boxes[0]);
    // w = 5/2 -> minpoly 2w - 5
    CHECK(tt.w.minpoly == P({-5, 2}));
    // s^2 = 9/2 -> minpoly 2s^2 - 9
    CHECK(tt.s.minpoly == P({-9, 0, 2}));
    CHECK(tt.s.irreducible);
    CHECK(std::abs(tt.s.box.center().real() - std::sqrt(4.5)) < 1e-9);
}

TEST_CASE("trace transform: t = 1 parabolic degenerate") {
    auto iso = roots::find_roots(P({-1, 1}), 1e-12);
    auto tt = minpoly_trace_transform(P({-1, 1}), iso.boxes[0]);
    CHECK(tt.w.minpoly == P({-2, 1}));
    CHECK(tt.s.minpoly == P({-2, 1})); // s = +2 branch
}

TEST_CASE("trace transform: reciprocal quadratic t^2 - 3t + 1") {
    auto iso = roots::find_roots(P({1, -3, 1}), 1e-12);
    auto tt = minpoly_trace_transform(P({1, -3, 1}), iso.boxes[1]);
    // w = t + 1/t = 3 exactly (t * (1/t) = 1)
    CHECK(tt.w.minpoly == P({-3, 1}));
    CHECK(tt.s.minpoly == P({-5, 0, 1})); // s^2 = 5
}

TEST_CASE("core trace height pattern: H(s) <= 2 H(t)^2 randomized") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> dc(-5, 5);
    int done = 0;
    for (int trial = 0; trial < 120 && done < 25; ++trial) {
        std::vector<Int> v(4);
        for (auto& c : v) c = dc(rng);
        IntPoly f(std::move(v));
        if (f.degree() < 2 || f[0] == 0) continue;
        IntPoly sf = squarefree_part(f);
        if (sf.degree() < 2) continue;
        auto iso = roots::find_roots(sf, 1e-12);
        auto fac = factor_smalldeg(sf);
        ++done;
        for (const auto& b : iso.boxes) {
            double mod = std::abs(b.center());
            if (mod < 0.05) continue; // keep the w-disk well conditioned
            auto t = algebraic_from_root(sf, b);
            auto tt = minpoly_trace_transform(t.minpoly, t.box);
            auto ht = height_of(t);
            auto hs = height_of(tt.s);
            CHECK(hs.lower <= 2.0 * ht.upper * ht.upper * (1 + 1e-9));
        }
    }
    CHECK(done >= 15);
}

TEST_CASE("sum and product height inequalities via exact resultant minpolys") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> dc(-4, 4);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 25; ++trial) {
        std::vector<Int> va(3), vb(3);
        for (auto& c : va) c = dc(rng);
        for (auto& c : vb) c = dc(rng);
        IntPoly fa(std::move(va)), fb(std::move(vb));
        if (fa.degree() != 2 || fb.degree() != 2) continue;
        IntPoly sfa = squarefree_part(fa), sfb = squarefree_part(fb);
        if (sfa.degree() < 1 || sfb.degree() < 1) continue;
        auto ia = roots::find_roots(sfa, 1e-13);
        auto ib = roots::find_roots(sfb, 1e-13);
        auto a = algebraic_from_root(sfa, ia.boxes[0]);
        auto b = algebraic_from_root(sfb, ib.boxes[0]);
        auto ha = height_of(a), hb = height_of(b);

        IntPoly sum_cand = sum_minpoly_candidate(a.minpoly, b.minpoly);
        if (sum_cand.is_zero()) continue;
        ++done;
        IntPoly sum_sf = squarefree_part(sum_cand);
        std::complex<double> target = a.box.center() + b.box.center();
        auto isum = roots::find_roots(sum_sf, 1e-12);
        const roots::RootBox* bx = nullptr;
        for (const auto& bb : isum.boxes)
            if (std::abs(bb.center() - target) <= 1e-6) bx = &bb;
        REQUIRE(bx != nullptr);
        auto s = algebraic_from_root(sum_sf, *bx);
        auto hs = height_of(s);
        CHECK(hs.lower <= 2.0 * ha.upper * hb.upper * (1 + 1e-9));

        std::complex<double> ptarget = a.box.center() * b.box.center();
        if (std::abs(ptarget) < 1e-9 || a.minpoly[0] == 0 || b.minpoly[0] == 0) continue;
        IntPoly prod_cand = product_minpoly_candidate(a.minpoly, b.minpoly);
        if (prod_cand.is_zero()) continue;
        IntPoly prod_sf = squarefree_part(prod_cand);
        auto iprod = roots::find_roots(prod_sf, 1e-12);
        const roots::RootBox* px = nullptr;
        for (const auto& bb : iprod.boxes)
            if (std::abs(bb.center() - ptarget) <= 1e-6) px = &bb;
        REQUIRE(px != nullptr);
        auto p = algebraic_from_root(prod_sf, *px);
        auto hp = height_of(p);
        CHECK(hp.lower <= ha.upper * hb.upper * (1 + 1e-9));
    }
    CHECK(done >= 15);
}

TEST_CASE("sum minpoly frozen oracle: sqrt2 + golden ratio") {
    IntPoly cand = sum_minpoly_candidate(P({-2, 0, 1}), P({-1, -1, 1}));
    IntPoly expect = P({-1, 6, -5, -2, 1});
    CHECK((cand == expect || cand == -expect));
    IntPoly prod = product_minpoly_candidate(P({-2, 0, 1}), P({-1, -1, 1}));
    IntPoly pexpect = P({4, 0, -6, 0, 1});
    CHECK((prod == pexpect || prod == -pexpect));
}

TEST_CASE("roots of unity have height exactly 1") {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
        const IntPoly& phi = cyclotomic(m);
        auto iso = roots::find_roots(phi, 1e-12);
        auto a = algebraic_from_root(phi, iso.boxes[0]);
        auto h = height_of(a);
        CHECK(h.lower == 1.0);
        CHECK(h.upper <= 1.0 + 1e-9);
    }
}

TEST_CASE("possibly-reducible heights are conservative, never M^(1/1)") {
    // degree-30 polynomial beyond the default cap: flagged, upper uses excluded degree
    std::vector<Int> v(31, Int(0));
    v[0] = -3;
    v[1] = -1;
    v[30] = 1;
    IntPoly f{std::move(v)};
    IntPoly sf = squarefree_part(f);
    REQUIRE(sf.degree() == 30);
    auto iso = roots::find_roots(sf, 1e-12);
    auto a = algebraic_from_root(sf, iso.boxes[0]);
    if (!a.irreducible) {
        auto h = height_of(a);
        CHECK(!h.exact);
        auto m = mahler_measure(sf);
        CHECK(h.upper <= std::pow(m.upper, 1.0 / 2.0) * (1 + 1e-9));
    }
}
