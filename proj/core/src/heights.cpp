#include "cuspheight/heights.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>

namespace cuspheight::heights {

using exactnum::content_primitive;
using exactnum::divide_exact;
using exactnum::divides;
using exactnum::squarefree_decompose;
using exactnum::squarefree_part;
using roots::find_roots;
using roots::IsolationResult;

Int length(const IntPoly& f) {
    if (f.is_zero()) throw input_error("length of zero polynomial");
    Int s = 0;
    for (const Int& c : f.coeffs()) s += abs(c);
    return s;
}

namespace {

struct Disk {
    std::complex<double> c;
    double r = 0.0;
};

Disk disk_add(const Disk& a, const Disk& b) {
    Disk out{a.c + b.c, a.r + b.r};
    out.r += 4e-16 * (std::abs(out.c) + out.r);
    return out;
}

Disk disk_mul(const Disk& a, const Disk& b) {
    Disk out;
    out.c = a.c * b.c;
    out.r = std::abs(a.c) * b.r + std::abs(b.c) * a.r + a.r * b.r;
    out.r += 4e-16 * (std::abs(out.c) + out.r);
    return out;
}

Disk box_disk(const RootBox& b) {
    return Disk{b.center(), b.radius + 1e-15 * (std::abs(b.center()) + 1)};
}

struct RealIv {
    double c = 0.0, r = 0.0;
};

RealIv iv_mul(const RealIv& a, const RealIv& b) {
    RealIv out;
    out.c = a.c * b.c;
    out.r = std::abs(a.c) * b.r + std::abs(b.c) * a.r + a.r * b.r + 4e-16 * std::abs(a.c * b.c);
    return out;
}

RealIv iv_add(const RealIv& a, const RealIv& b) {
    return RealIv{a.c + b.c, a.r + b.r + 4e-16 * (std::abs(a.c + b.c) + 1e-300)};
}

/// Conjugate-closed orbit: a near-real root or a conjugate pair, carried as the
/// real interval coefficients of its monic factor.
struct Orbit {
    std::vector<size_t> idx;
    std::vector<RealIv> monic;
    int deg = 0;
};

std::optional<std::vector<Orbit>> make_orbits(const std::vector<RootBox>& boxes) {
    std::vector<Orbit> orbits;
    std::vector<bool> used(boxes.size(), false);
    for (size_t i = 0; i < boxes.size(); ++i) {
        if (used[i]) continue;
        Disk d = box_disk(boxes[i]);
        if (std::abs(d.c.imag()) <= d.r) {
            orbits.push_back(Orbit{{i}, {RealIv{-d.c.real(), d.r}, RealIv{1.0, 0.0}}, 1});
            used[i] = true;
            continue;
        }
        size_t partner = boxes.size();
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            if (used[j]) continue;
            Disk e = box_disk(boxes[j]);
            if (std::abs(e.c - std::conj(d.c)) <= d.r + e.r + 1e-14 * (1 + std::abs(d.c))) {
                partner = j;
                break;
            }
        }
        if (partner == boxes.size()) return std::nullopt;
        Disk e = box_disk(boxes[partner]);
        Disk prod = disk_mul(d, e);
        orbits.push_back(Orbit{{i, partner},
                               {RealIv{prod.c.real(), prod.r + std::abs(prod.c.imag())},
                                RealIv{-(d.c.real() + e.c.real()), d.r + e.r},
                                RealIv{1.0, 0.0}},
                               2});
        used[i] = used[partner] = true;
    }
    return orbits;
}

std::vector<RealIv> poly_mul_iv(const std::vector<RealIv>& a, const std::vector<RealIv>& b) {
    std::vector<RealIv> out(a.size() + b.size() - 1, RealIv{0.0, 0.0});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = iv_add(out[i + j], iv_mul(a[i], b[j]));
    return out;
}

/// lead * prod(selected monic factors) read off as an integer polynomial.
/// nullopt with wide=false: certified, no integer candidate exists.
/// nullopt with wide=true: intervals too wide to decide.
std::optional<IntPoly> candidate_from_orbits(const std::vector<const Orbit*>& sel, const Int& lead,
                                             bool& wide) {
    std::vector<RealIv> acc{RealIv{1.0, 0.0}};
    for (const Orbit* o : sel) acc = poly_mul_iv(acc, o->monic);
    double leadd = lead.convert_to<double>();
    std::vector<Int> coeffs(acc.size());
    wide = false;
    for (size_t i = 0; i < acc.size(); ++i) {
        double c = acc[i].c * leadd;
        double r = acc[i].r * std::abs(leadd) + 1e-15 * std::abs(c);
        if (r >= 0.45) {
            wide = true;
            return std::nullopt;
        }
        double k = std::nearbyint(c);
        if (std::abs(c - k) > r) return std::nullopt;
        coeffs[i] = Int(static_cast<long long>(k));
    }
    return IntPoly(std::move(coeffs));
}

struct SubsetSearchResult {
    std::vector<Factor> factors;
    IntPoly remainder;
    bool remainder_irreducible = false;
    int excluded_degree = 1;
};

void subset_search(const IntPoly& h, int degree_cap, SubsetSearchResult& out);

bool subset_search_round(const IntPoly& h, int degree_cap, double radius, SubsetSearchResult& out) {
    IsolationResult iso = find_roots(h, radius);
    if (!iso.reached_target) return false;
    auto orbits_opt = make_orbits(iso.boxes);
    if (!orbits_opt) return false;
    std::vector<Orbit>& orbits = *orbits_opt;
    const int half = h.degree() / 2;
    const bool bounded = h.degree() > degree_cap;
    const int max_total = bounded ? std::min(6, half) : half;
    const size_t m = orbits.size();

    bool widened = false;
    std::optional<IntPoly> found;
    std::vector<size_t> sel;
    for (int dtot = 1; dtot <= max_total && !found; ++dtot) {
        std::function<void(size_t, int)> rec = [&](size_t start, int deg_needed) {
            if (found) return;
            if (deg_needed == 0) {
                std::vector<const Orbit*> ptrs;
                ptrs.reserve(sel.size());
                for (size_t s : sel) ptrs.push_back(&orbits[s]);
                bool wide = false;
                auto cand = candidate_from_orbits(ptrs, h.lead(), wide);
                widened = widened || wide;
                if (cand) {
                    auto prim = content_primitive(*cand).second;
                    if (prim.degree() == dtot && divides(prim, h)) found = prim;
                }
                return;
            }
            for (size_t i = start; i < m && !found; ++i) {
                if (orbits[i].deg > deg_needed) continue;
                sel.push_back(i);
                rec(i + 1, deg_needed - orbits[i].deg);
                sel.pop_back();
            }
        };
        rec(0, dtot);
    }

    if (found) {
        IntPoly quotient = content_primitive(divide_exact(h, *found)).second;
        SubsetSearchResult sub1;
        subset_search(*found, degree_cap, sub1);
        for (auto& fc : sub1.factors) out.factors.push_back(fc);
        if (sub1.remainder.degree() > 0)
            out.factors.push_back(Factor{sub1.remainder, 1, sub1.remainder_irreducible});
        SubsetSearchResult sub2;
        subset_search(quotient, degree_cap, sub2);
        for (auto& fc : sub2.factors) out.factors.push_back(fc);
        out.remainder = sub2.remainder;
        out.remainder_irreducible = sub2.remainder_irreducible;
        out.excluded_degree = sub2.excluded_degree;
        return true;
    }
    if (widened) return false;
    out.remainder = h;
    out.remainder_irreducible = !bounded;
    out.excluded_degree = bounded ? max_total : half;
    return true;
}

void subset_search(const IntPoly& h, int degree_cap, SubsetSearchResult& out) {
    out = SubsetSearchResult{};
    if (h.degree() <= 0) {
        out.remainder = IntPoly();
        return;
    }
    if (h.degree() == 1) {
        out.remainder = h;
        out.remainder_irreducible = true;
        out.excluded_degree = 0;
        return;
    }
    double radius = 1e-13;
    for (int attempt = 0; attempt < 4; ++attempt) {
        SubsetSearchResult trial;
        if (subset_search_round(h, degree_cap, radius, trial)) {
            out = std::move(trial);
            return;
        }
        radius *= 1e-8;
    }
    out.remainder = h;
    out.remainder_irreducible = false;
    out.excluded_degree = 1;
}

} // namespace

std::vector<int> guess_unity_orders(const IntPoly& squarefree, int max_order) {
    std::vector<int> orders;
    if (squarefree.degree() < 1) return orders;
    IsolationResult iso = find_roots(squarefree, 1e-10);
    for (const auto& b : iso.boxes) {
        auto [lo, hi] = roots::modulus_interval(b);
        if (lo > 1.0 || hi < 1.0) continue;
        std::complex<double> z = b.center();
        double frac = std::atan2(z.imag(), z.real()) / (2.0 * M_PI);
        if (frac < 0) frac += 1.0;
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double x = frac;
        for (int it = 0; it < 40; ++it) {
            double a = std::floor(x);
            long long ai = static_cast<long long>(a);
            long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
            if (q2 > max_order || q2 <= 0) break;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            double denom = x - a;
            if (std::abs(denom) < 1e-12) break;
            x = 1.0 / denom;
        }
        if (q1 >= 1 && q1 <= max_order) {
            std::complex<double> zz{1.0, 0.0};
            std::complex<double> base = z;
            long long e = q1;
            while (e > 0) {
                if (e & 1) zz *= base;
                base *= base;
                e >>= 1;
            }
            if (std::abs(zz - std::complex<double>{1.0, 0.0}) < 1e-4)
                orders.push_back(static_cast<int>(q1));
        }
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

std::pair<IntPoly, std::vector<int>> remove_unity_roots(const IntPoly& squarefree) {
    if (squarefree.degree() < 1) return {squarefree, {}};
    long long cap_ll = 2LL * squarefree.degree() * squarefree.degree();
    int cap = static_cast<int>(std::min<long long>(cap_ll, 1000000));
    auto orders = guess_unity_orders(squarefree, cap);
    return exactnum::strip_cyclotomic(squarefree, orders);
}

HeightBound mahler_measure(const IntPoly& f, double tol) {
    if (f.is_zero()) throw input_error("Mahler measure of zero polynomial");
    auto dec = squarefree_decompose(f);
    double lo = std::abs(dec.content.convert_to<double>()) * (1 - 4e-16);
    double hi = std::abs(dec.content.convert_to<double>()) * (1 + 4e-16);
    bool sharp = true;
    for (auto& [q, mult] : dec.factors) {
        auto [h, removed] = remove_unity_roots(q);
        (void)removed;
        double al = std::abs(h.lead().convert_to<double>());
        double flo = al * (1 - 4e-16);
        double fhi = al * (1 + 4e-16);
        if (h.degree() >= 1) {
            int n = h.degree();
            double target = std::max(1e-300, tol / (8.0 * n));
            IsolationResult iso = find_roots(h, target);
            if (!iso.reached_target) sharp = false;
            for (const auto& b : iso.boxes) {
                auto [mlo, mhi] = roots::modulus_interval(b);
                flo *= std::max(1.0, mlo) * (1 - 4e-16);
                fhi *= std::max(1.0, mhi) * (1 + 4e-16);
            }
        }
        for (int i = 0; i < mult; ++i) {
            lo *= flo;
            hi *= fhi;
        }
    }
    HeightBound out;
    out.lower = std::max(1.0, lo * (1 - 1e-14));
    out.upper = std::max(out.lower, hi * (1 + 1e-14));
    out.exact = sharp && (out.upper <= out.lower * (1 + tol) + 1e-300);
    return out;
}

Factorization factor_smalldeg(const IntPoly& f, int degree_cap) {
    if (f.is_zero()) throw input_error("factorization of zero polynomial");
    Factorization out;
    auto dec = squarefree_decompose(f);
    out.content = dec.content;
    for (auto& [q, mult] : dec.factors) {
        auto [h, removed] = remove_unity_roots(q);
        for (int m : removed) out.factors.push_back(Factor{exactnum::cyclotomic(m), mult, true});
        if (h.degree() == 0) continue;
        SubsetSearchResult res;
        subset_search(h, degree_cap, res);
        for (auto& fc : res.factors) out.factors.push_back(Factor{fc.poly, mult, fc.irreducible});
        if (res.remainder.degree() > 0) {
            out.factors.push_back(Factor{res.remainder, mult, res.remainder_irreducible});
            if (!res.remainder_irreducible) out.complete = false;
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });
    return out;
}

namespace {

AlgebraicNumber pack(const Factor& fc, const RootBox& box) {
    AlgebraicNumber a;
    a.minpoly = fc.poly;
    a.box = box;
    a.irreducible = fc.irreducible;
    a.excluded_degree =
        fc.irreducible ? fc.poly.degree() : std::max(1, std::min(6, fc.poly.degree() / 2));
    return a;
}

std::optional<AlgebraicNumber> select_by_disk(const Factorization& fac, const Disk& target,
                                              double root_radius) {
    const Factor* hit = nullptr;
    std::optional<RootBox> hit_box;
    int nhit = 0;
    for (const auto& fc : fac.factors) {
        if (fc.poly.degree() < 1) continue;
        IsolationResult iso = find_roots(fc.poly, root_radius);
        for (const auto& b : iso.boxes) {
            if (std::abs(b.center() - target.c) <= b.radius + target.r + 1e-300) {
                ++nhit;
                hit = &fc;
                hit_box = b;
            }
        }
    }
    if (nhit != 1 || hit == nullptr) return std::nullopt;
    return pack(*hit, *hit_box);
}

} // namespace

AlgebraicNumber algebraic_from_root(const IntPoly& squarefree, const RootBox& box, int degree_cap) {
    Factorization fac = factor_smalldeg(squarefree, degree_cap);
    RootBox tracked = box;
    for (int attempt = 0; attempt < 5; ++attempt) {
        auto got = select_by_disk(fac, box_disk(tracked), std::max(1e-14, tracked.radius));
        if (got) return *got;
        tracked = roots::refine(squarefree, tracked, std::max(tracked.radius * 1e-6, 1e-290));
    }
    throw verification_failure("factor selection ambiguity persists after refinement");
}

HeightBound height_of(const AlgebraicNumber& a, double tol) {
    int d = a.minpoly.degree();
    if (d < 1) throw input_error("height of malformed algebraic number");
    HeightBound m = mahler_measure(a.minpoly, tol * std::max(1, d) / 2);
    HeightBound out;
    if (a.irreducible) {
        out.lower = std::max(1.0, std::pow(m.lower, 1.0 / d) * (1 - 4e-16));
        out.upper = std::max(out.lower, std::pow(m.upper, 1.0 / d) * (1 + 4e-16));
        out.exact = m.exact;
        return out;
    }
    int mindeg = std::max(2, a.excluded_degree + 1);
    out.lower = std::max(1.0, std::pow(m.lower, 1.0 / d) * (1 - 4e-16));
    out.upper = std::max(out.lower, std::pow(m.upper, 1.0 / mindeg) * (1 + 4e-16));
    out.exact = false;
    return out;
}

HeightBound tuple_height_bounds(const std::vector<AlgebraicNumber>& as, double tol) {
    if (as.empty()) throw input_error("tuple height of empty sequence");
    HeightBound out;
    for (const auto& a : as) {
        HeightBound h = height_of(a, tol);
        out.lower = std::max(out.lower, h.lower);
        out.upper *= h.upper;
    }
    out.upper = std::max(out.upper, out.lower);
    out.exact = false;
    return out;
}

namespace {

Disk disk_add_inv(const Disk& d) {
    double mod = std::abs(d.c);
    if (mod <= d.r * 1.5 + 1e-300) throw precision_exhausted("trace transform: root box touches 0");
    std::complex<double> inv = 1.0 / d.c;
    double inv_r = d.r / (mod * (mod - d.r));
    Disk out{d.c + inv, d.r + inv_r};
    out.r += 4e-16 * (std::abs(out.c) + 1);
    return out;
}

Disk disk_sqrt(const Disk& d) {
    double mod = std::abs(d.c);
    if (mod <= 2 * d.r + 1e-300) throw precision_exhausted("trace transform: sqrt disk touches 0");
    std::complex<double> s = std::sqrt(d.c);
    double sr = d.r / (2.0 * std::sqrt(mod - d.r)) * 1.1 + 4e-16 * (std::abs(s) + 1);
    return Disk{s, sr};
}

} // namespace

TraceTransform minpoly_trace_transform(const IntPoly& f, const RootBox& which_root, int degree_cap) {
    if (f.degree() < 1) throw input_error("trace transform needs positive degree");
    exactnum::BivariatePoly quad{IntPoly{Int(1)}, IntPoly{Int(0), Int(-1)}, IntPoly{Int(1)}};
    IntPoly r = exactnum::resultant_eliminate(f, quad);
    if (r.is_zero()) throw verification_failure("trace transform: resultant vanished identically");
    IntPoly rs = squarefree_part(r);
    Factorization fw = factor_smalldeg(rs, degree_cap);

    RootBox tb = which_root;
    std::optional<AlgebraicNumber> w;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Disk wd = disk_add_inv(box_disk(tb));
        w = select_by_disk(fw, wd, std::min(1e-10, std::max(1e-14, wd.r)));
        if (w) break;
        tb = roots::refine(f, tb, std::max(tb.radius * 1e-8, 1e-290));
    }
    if (!w) throw verification_failure("trace transform: factor-selection ambiguity for w");

    // w = -2 means s = 0 exactly (t = -1, a root of unity)
    if (w->minpoly == IntPoly{Int(2), Int(1)}) {
        AlgebraicNumber s0;
        s0.minpoly = IntPoly{Int(0), Int(1)};
        s0.box.re = BigFloat(0.0, 20u);
        s0.box.im = BigFloat(0.0, 20u);
        s0.box.radius = 1e-300;
        s0.box.poly_id = roots::poly_fingerprint(s0.minpoly);
        s0.irreducible = true;
        s0.excluded_degree = 0;
        return TraceTransform{*w, s0};
    }

    IntPoly sub{Int(-2), Int(0), Int(1)};
    IntPoly spoly = exactnum::compose(w->minpoly, sub);
    IntPoly ss = squarefree_part(spoly);
    Factorization fs = factor_smalldeg(ss, degree_cap);

    std::optional<AlgebraicNumber> s;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Disk wd = disk_add_inv(box_disk(tb));
        Disk s2 = disk_add(wd, Disk{{2.0, 0.0}, 0.0});
        if (std::abs(s2.c) <= 2 * s2.r + 1e-300) {
            // squeeze the box until the sqrt disk is well conditioned
            tb = roots::refine(f, tb, std::max(tb.radius * 1e-8, 1e-290));
            continue;
        }
        Disk sd = disk_sqrt(s2);
        if (sd.c.real() < 0 || (sd.c.real() == 0 && sd.c.imag() < 0)) sd.c = -sd.c;
        s = select_by_disk(fs, sd, std::min(1e-10, std::max(1e-14, sd.r)));
        if (s) break;
        tb = roots::refine(f, tb, std::max(tb.radius * 1e-8, 1e-290));
    }
    if (!s) throw verification_failure("trace transform: factor-selection ambiguity for s");
    return TraceTransform{*w, *s};
}

IntPoly sum_minpoly_candidate(const IntPoly& f, const IntPoly& g) {
    int m = g.degree();
    exactnum::BivariatePoly biv(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<Int> cx(static_cast<size_t>(m - j) + 1, Int(0));
        for (int k = j; k <= m; ++k) {
            Int b = 1;
            for (int i = 0; i < j; ++i) b = b * Int(k - i) / Int(i + 1);
            Int term = g[k] * b;
            if (j % 2 == 1) term = -term;
            cx[static_cast<size_t>(k - j)] = term;
        }
        biv[static_cast<size_t>(j)] = IntPoly(std::move(cx));
    }
    return exactnum::resultant_eliminate(f, biv);
}

IntPoly product_minpoly_candidate(const IntPoly& f, const IntPoly& g) {
    int m = g.degree();
    exactnum::BivariatePoly biv(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) biv[static_cast<size_t>(j)] = IntPoly::monomial(g[m - j], m - j);
    return exactnum::resultant_eliminate(f, biv);
}

} // namespace cuspheight::heights
