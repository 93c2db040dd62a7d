#include "cuspheight/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <limits>
#include <optional>

namespace cuspheight::roots {

namespace {

using exactnum::IntPoly;

double log2_abs(const Int& x) {
    if (x == 0) return -1e9;
    Int a = abs(x);
    auto bits = boost::multiprecision::msb(a); // floor(log2)
    if (bits <= 500) return std::log2(a.convert_to<double>());
    Int shifted = a >> (bits - 40);
    return std::log2(shifted.convert_to<double>()) + static_cast<double>(bits - 40);
}

int max_coeff_bits(const IntPoly& f) {
    int mb = 0;
    for (const Int& c : f.coeffs())
        if (c != 0) mb = std::max(mb, static_cast<int>(boost::multiprecision::msb(abs(c))) + 1);
    return mb;
}

double round_up(double x) { return std::nextafter(std::nextafter(x, DBL_MAX), DBL_MAX); }

template <class Real>
struct Candidate {
    Cx<Real> z;
    Real radius;
};

template <class Real>
Real to_real(const Int& x) {
    return Real(x.template convert_to<std::string>()); // exact decimal, rounded once on parse
}

template <>
double to_real<double>(const Int& x) {
    return x.convert_to<double>();
}

/// One ladder rung: Aberth iteration plus an a-posteriori certificate.
/// The certificate: with Weierstrass corrections W_j = f(w_j)/(a_n prod(w_j - w_k)),
/// the disks D(w_j, n|W_j|) cover all roots, a pairwise-disjoint family isolating
/// one root per disk. All quantities carry explicit rounding inflation.
template <class Real>
std::optional<std::vector<Candidate<Real>>> isolate_attempt(const IntPoly& f) {
    const int n = f.degree();
    const Real u = std::numeric_limits<Real>::epsilon();
    std::vector<Real> a(static_cast<size_t>(n) + 1), aa(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        a[static_cast<size_t>(i)] = to_real<Real>(f[i]);
        aa[static_cast<size_t>(i)] = abs(a[static_cast<size_t>(i)]);
    }
    using std::abs;

    // Fujiwara-style enclosing radius, computed in the log domain.
    double lan = log2_abs(f.lead());
    double lr = -1e9;
    for (int k = 1; k <= n; ++k) {
        if (f[n - k] == 0) continue;
        double lb = (log2_abs(f[n - k]) - lan - (k == n ? 1.0 : 0.0)) / k;
        lr = std::max(lr, lb);
    }
    double r0d = std::exp2(std::clamp(lr, -400.0, 400.0)) * 2.0;
    Real r0 = Real(r0d);

    std::vector<Cx<Real>> z(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double frac = j * 0.6180339887498949;
        frac -= std::floor(frac);
        double rad = r0d * (0.85 + 0.3 * frac);
        double ang = 2.0 * 3.14159265358979323846 * (j + 0.37) / n + 0.5 / n;
        z[static_cast<size_t>(j)] = Cx<Real>(Real(rad * std::cos(ang)), Real(rad * std::sin(ang)));
    }
    (void)r0;

    auto horner = [&](const Cx<Real>& x, Cx<Real>& val, Cx<Real>& der, Real& asum) {
        val = Cx<Real>(a[static_cast<size_t>(n)]);
        der = Cx<Real>(Real(0));
        Real ax = cx_abs(x);
        asum = aa[static_cast<size_t>(n)];
        for (int i = n - 1; i >= 0; --i) {
            der = der * x + val;
            val = val * x + Cx<Real>(a[static_cast<size_t>(i)]);
            asum = asum * ax + aa[static_cast<size_t>(i)];
        }
    };

    const int maxit = 80 + 6 * n;
    const Real tolstep = 8 * u;
    for (int it = 0; it < maxit; ++it) {
        Real worst = Real(0);
        for (int j = 0; j < n; ++j) {
            Cx<Real> val, der;
            Real asum;
            horner(z[static_cast<size_t>(j)], val, der, asum);
            if (val.re == 0 && val.im == 0) continue;
            Cx<Real> N;
            if (der.re == 0 && der.im == 0) {
                N = Cx<Real>(Real(1e-3) * (1 + cx_abs(z[static_cast<size_t>(j)])));
            } else {
                N = val / der;
            }
            Cx<Real> S(Real(0));
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                Cx<Real> d = z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
                if (d.re == 0 && d.im == 0) d = Cx<Real>(Real(1e-20));
                S += cx_inv(d);
            }
            Cx<Real> denom = Cx<Real>(Real(1)) - N * S;
            Cx<Real> w = (denom.re == 0 && denom.im == 0) ? N : N / denom;
            z[static_cast<size_t>(j)] -= w;
            Real rel = cx_abs(w) / (Real(1) + cx_abs(z[static_cast<size_t>(j)]));
            if (rel > worst) worst = rel;
        }
        if (worst <= tolstep) break;
    }

    // Certificate.
    const Real cume = Real(6 * (n + 2)) * u;
    std::vector<Real> fup(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Cx<Real> val, der;
        Real asum;
        horner(z[static_cast<size_t>(j)], val, der, asum);
        fup[static_cast<size_t>(j)] = (cx_abs(val) + cume * asum) * (1 + 8 * u);
    }
    Real an_low = aa[static_cast<size_t>(n)] * (1 - 2 * u);
    std::vector<Candidate<Real>> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Real prod = Real(1);
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            prod *= cx_abs(z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)]);
        }
        prod *= (1 - Real(5 * n) * u);
        if (prod <= 0) return std::nullopt;
        Real r = Real(n) * fup[static_cast<size_t>(j)] / (an_low * prod) * (1 + 8 * u);
        out[static_cast<size_t>(j)] = Candidate<Real>{z[static_cast<size_t>(j)], r};
    }
    // pairwise disjoint?
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Real d = cx_abs(z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)]) * (1 - 4 * u);
            if (!(d > out[static_cast<size_t>(j)].radius + out[static_cast<size_t>(k)].radius))
                return std::nullopt;
        }
    return out;
}

struct Rung {
    int bits;
    int digits10;
};

constexpr Rung kLadder[] = {{53, 15}, {116, 35}, {232, 70}, {498, 150}, {996, 300}, {1992, 600}, {4152, 1250}};

template <class Real>
bool run_rung(const IntPoly& f, double target, std::uint64_t id, int digits10,
              IsolationResult& best, bool& have_best) {
    auto cand = isolate_attempt<Real>(f);
    if (!cand) return false;
    IsolationResult res;
    res.boxes.reserve(cand->size());
    double worst = 0.0;
    for (const auto& c : *cand) {
        RootBox b;
        b.re = BigFloat(c.z.re, static_cast<unsigned>(digits10));
        b.im = BigFloat(c.z.im, static_cast<unsigned>(digits10));
        double r = round_up(c.radius.template convert_to<double>());
        if (r <= 0) r = 1e-320;
        b.radius = r;
        b.poly_id = id;
        worst = std::max(worst, r);
        res.boxes.push_back(std::move(b));
    }
    std::sort(res.boxes.begin(), res.boxes.end(), [](const RootBox& x, const RootBox& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    res.achieved = worst;
    res.reached_target = (worst <= target);
    best = std::move(res);
    have_best = true;
    return best.reached_target;
}

template <>
bool run_rung<double>(const IntPoly& f, double target, std::uint64_t id, int digits10,
                      IsolationResult& best, bool& have_best) {
    if (max_coeff_bits(f) > 900) return false; // double cannot hold the coefficients
    auto cand = isolate_attempt<double>(f);
    if (!cand) return false;
    IsolationResult res;
    double worst = 0.0;
    for (const auto& c : *cand) {
        RootBox b;
        b.re = BigFloat(c.z.re, static_cast<unsigned>(digits10));
        b.im = BigFloat(c.z.im, static_cast<unsigned>(digits10));
        double r = round_up(c.radius);
        b.radius = r;
        b.poly_id = id;
        worst = std::max(worst, r);
        res.boxes.push_back(std::move(b));
    }
    std::sort(res.boxes.begin(), res.boxes.end(), [](const RootBox& x, const RootBox& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    res.achieved = worst;
    res.reached_target = (worst <= target);
    best = std::move(res);
    have_best = true;
    return best.reached_target;
}

} // namespace

std::uint64_t poly_fingerprint(const IntPoly& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.degree() + 1));
    for (const Int& c : f.coeffs()) {
        mix(c < 0 ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull);
        Int a = abs(c);
        while (a > 0) {
            mix(static_cast<std::uint64_t>(a & 0xffffffffffffffffull));
            a >>= 64;
        }
    }
    return h;
}

IsolationResult find_roots(const IntPoly& f, double target_radius, const PrecisionPolicy& policy) {
    if (f.is_zero() || f.degree() < 1) throw input_error("find_roots: degree must be >= 1");
    {
        IntPoly g = exactnum::poly_gcd(f, f.derivative());
        if (g.degree() > 0) throw input_error("find_roots: polynomial is not squarefree");
    }
    std::uint64_t id = poly_fingerprint(f);
    IsolationResult best;
    bool have_best = false;
    for (const Rung& rung : kLadder) {
        if (rung.bits > policy.max_bits && !have_best) {
            // allow one rung past the cap only if nothing certified yet? No: hard cap.
            break;
        }
        if (rung.bits > policy.max_bits) break;
        bool done = false;
        switch (rung.bits) {
            case 53: done = run_rung<double>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 116: done = run_rung<MpfrFloat<35>>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 232: done = run_rung<MpfrFloat<70>>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 498: done = run_rung<MpfrFloat<150>>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 996: done = run_rung<MpfrFloat<300>>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 1992: done = run_rung<MpfrFloat<600>>(f, target_radius, id, rung.digits10, best, have_best); break;
            case 4152: done = run_rung<MpfrFloat<1250>>(f, target_radius, id, rung.digits10, best, have_best); break;
            default: break;
        }
        if (done) return best;
    }
    if (have_best) return best; // certified, radii larger than requested
    throw precision_exhausted("find_roots: no isolation certificate below the precision cap");
}

CircleVerdict unit_circle_test(const RootBox& box) {
    BigFloat m2 = box.re * box.re + box.im * box.im;
    double m = sqrt(m2).convert_to<double>();
    double slack = 1e-13 * (m + 1.0) + box.radius;
    if (m + slack < 1.0) return CircleVerdict::inside_unit;
    if (m - slack > 1.0) return CircleVerdict::outside_unit;
    return CircleVerdict::undecidable_at_precision;
}

RootBox refine(const IntPoly& f, const RootBox& box, double new_radius, const PrecisionPolicy& policy) {
    if (box.radius <= new_radius) return box;
    IsolationResult res = find_roots(f, new_radius, policy);
    if (!res.reached_target)
        throw precision_exhausted("refine: requested radius not certifiable below the precision cap");
    const RootBox* match = nullptr;
    int count = 0;
    for (const auto& b : res.boxes) {
        BigFloat dr = b.re - box.re, di = b.im - box.im;
        double d = sqrt(dr * dr + di * di).convert_to<double>();
        if (d <= box.radius + b.radius + 1e-300) {
            ++count;
            match = &b;
        }
    }
    if (count != 1 || match == nullptr)
        throw input_error("refine: refined roots do not match the input box unambiguously");
    return *match;
}

std::pair<double, double> modulus_interval(const RootBox& box) {
    BigFloat m2 = box.re * box.re + box.im * box.im;
    double m = sqrt(m2).convert_to<double>();
    double slack = 1e-13 * (m + 1.0);
    double lo = m - slack - box.radius;
    double hi = m + slack + box.radius;
    if (lo < 0) lo = 0;
    return {lo, round_up(hi)};
}

} // namespace cuspheight::roots
