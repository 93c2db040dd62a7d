#include "cuspheight/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cuspheight::exactnum {

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(Int c, int k) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::lead() const {
    if (is_zero()) throw input_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Int> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_arg(const Int& c) const {
    std::vector<Int> v(coeffs_);
    Int p = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] *= p;
        p *= c;
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Int, IntPoly> content_primitive(const IntPoly& f) {
    if (f.is_zero()) throw input_error("content of zero polynomial");
    Int g = 0;
    for (const Int& c : f.coeffs()) g = gcd_int(g, c);
    if (f.lead() < 0) g = -g;
    std::vector<Int> v(f.coeffs());
    for (auto& c : v) c /= g;
    return {g, IntPoly(std::move(v))};
}

// Division over Q; succeeds iff the remainder is zero and the quotient integral.
static bool try_divide(const IntPoly& f, const IntPoly& g, IntPoly* out) {
    if (g.is_zero()) return false;
    if (f.is_zero()) {
        if (out) *out = IntPoly();
        return true;
    }
    if (f.degree() < g.degree()) return false;
    std::vector<Rat> rem(f.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(f.coeffs()[i]);
    int dg = g.degree();
    Rat glead(g.lead());
    std::vector<Rat> q(static_cast<size_t>(f.degree() - dg) + 1);
    for (int i = f.degree(); i >= dg; --i) {
        Rat c = rem[static_cast<size_t>(i)] / glead;
        q[static_cast<size_t>(i - dg)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[static_cast<size_t>(i - dg + j)] -= c * Rat(g[j]);
    }
    for (int i = 0; i < dg; ++i)
        if (rem[static_cast<size_t>(i)] != 0) return false;
    std::vector<Int> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (denominator(q[i]) != 1) return false;
        qi[i] = numerator(q[i]);
    }
    if (out) *out = IntPoly(std::move(qi));
    return true;
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
    IntPoly q;
    if (!try_divide(f, g, &q)) throw input_error("polynomial division is not exact");
    return q;
}

bool divides(const IntPoly& g, const IntPoly& f) { return try_divide(f, g, nullptr); }

static Int int_pow(const Int& x, int n) {
    Int r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Canonical pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + R.
static IntPoly pseudo_rem(IntPoly f, const IntPoly& g) {
    int dg = g.degree();
    const Int& gl = g.lead();
    int e = f.degree() - dg + 1;
    while (!f.is_zero() && f.degree() >= dg) {
        int k = f.degree() - dg;
        Int fl = f.lead();
        std::vector<Int> v(f.coeffs());
        for (auto& c : v) c *= gl;
        for (int j = 0; j <= dg; ++j) v[static_cast<size_t>(k + j)] -= fl * g[j];
        f = IntPoly(std::move(v));
        --e;
    }
    if (e > 0) {
        Int scale = int_pow(gl, e);
        std::vector<Int> v(f.coeffs());
        for (auto& c : v) c *= scale;
        f = IntPoly(std::move(v));
    }
    return f;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw input_error("gcd(0,0)");
    if (f.is_zero()) return content_primitive(g).second;
    if (g.is_zero()) return content_primitive(f).second;
    IntPoly a = content_primitive(f).second;
    IntPoly b = content_primitive(g).second;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : content_primitive(r).second;
    }
    Int cf = gcd_int(content_primitive(f).first, content_primitive(g).first);
    return IntPoly::constant(abs(cf)) * a;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw input_error("squarefree part of zero polynomial");
    if (f.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly q = divide_exact(f, g);
    return content_primitive(q).second;
}

SquarefreeDecomposition squarefree_decompose(const IntPoly& f) {
    if (f.is_zero()) throw input_error("squarefree decomposition of zero polynomial");
    SquarefreeDecomposition out;
    auto [cont, p] = content_primitive(f);
    out.content = cont;
    if (p.degree() == 0) return out;
    // Yun
    IntPoly d = p.derivative();
    IntPoly a = poly_gcd(p, d);
    IntPoly b = divide_exact(p, a);
    IntPoly c = divide_exact(d, a);
    int i = 1;
    while (b.degree() > 0) {
        IntPoly z = c - b.derivative();
        if (z.is_zero()) {
            out.factors.emplace_back(content_primitive(b).second, i);
            break;
        }
        IntPoly g = poly_gcd(b, z);
        if (g.degree() > 0) out.factors.emplace_back(content_primitive(g).second, i);
        b = divide_exact(b, g);
        c = divide_exact(z, g);
        ++i;
    }
    return out;
}

// Subresultant PRS resultant.
Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) return int_pow(f.lead(), g.degree());
    if (g.degree() == 0) return int_pow(g.lead(), f.degree());
    IntPoly a = f, b = g;
    Int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) sign = -sign;
        std::swap(a, b);
    }
    auto [ca, pa] = content_primitive(a);
    auto [cb, pb] = content_primitive(b);
    Int cont = int_pow(ca, b.degree()) * int_pow(cb, a.degree());
    a = pa;
    b = pb;
    Int gc = 1, h = 1, s = 1;
    while (true) {
        int d = a.degree() - b.degree();
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) s = -s;
        IntPoly r = pseudo_rem(a, b);
        a = b;
        Int divisor = gc * int_pow(h, d);
        if (r.is_zero()) return 0; // positive-degree common factor
        {
            std::vector<Int> v(r.coeffs());
            for (auto& c : v) {
                if (c % divisor != 0) throw std::logic_error("subresultant PRS: inexact division");
                c /= divisor;
            }
            b = IntPoly(std::move(v));
        }
        gc = a.lead();
        if (d > 0) {
            Int gp = int_pow(gc, d);
            Int hp = int_pow(h, d - 1);
            if (gp % hp != 0) throw std::logic_error("subresultant PRS: h update inexact");
            h = gp / hp;
        }
        if (b.degree() == 0) {
            Int num = int_pow(b.lead(), a.degree());
            Int den = int_pow(h, a.degree() - 1);
            if (num % den != 0) throw std::logic_error("subresultant PRS: final division inexact");
            return sign * cont * s * (num / den);
        }
    }
}

Int resultant_monic_quadratic(const IntPoly& f, const Int& e) {
    // f mod (t^2 - e t + 1) = c t + d; Res = c^2 + c d e + d^2.
    if (f.is_zero()) return 0;
    Int c = 0, d = 0;
    for (int i = f.degree(); i >= 0; --i) {
        Int nc = c * e + d;
        Int nd = f[i] - c;
        c = std::move(nc);
        d = std::move(nd);
    }
    return c * c + c * d * e + d * d;
}

IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw input_error("interpolation: bad point count");
    std::vector<Rat> coef(n);
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
    coef[0] = dd[0];
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = 0; i + j < n; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / Rat(xs[i + j] - xs[i]);
        coef[j] = dd[0];
    }
    std::vector<Rat> poly{coef[n - 1]};
    for (size_t j = n - 1; j-- > 0;) {
        std::vector<Rat> np(poly.size() + 1, Rat(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            np[i + 1] += poly[i];
            np[i] -= poly[i] * Rat(xs[j]);
        }
        np[0] += coef[j];
        poly = std::move(np);
    }
    std::vector<Int> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (denominator(poly[i]) != 1)
            throw std::logic_error("interpolation produced a non-integer coefficient");
        out[i] = numerator(poly[i]);
    }
    return IntPoly(std::move(out));
}

IntPoly resultant_eliminate(const IntPoly& f, const BivariatePoly& g) {
    if (f.is_zero()) throw input_error("resultant_eliminate: zero polynomial");
    int dt = static_cast<int>(g.size()) - 1;
    while (dt >= 0 && g[static_cast<size_t>(dt)].is_zero()) --dt;
    if (dt <= 0) throw input_error("resultant_eliminate: elimination variable has degree 0");
    int dw = 0;
    for (int j = 0; j <= dt; ++j) dw = std::max(dw, g[static_cast<size_t>(j)].degree());
    const IntPoly& lc = g[static_cast<size_t>(dt)];
    int target = f.degree() * dw;
    bool fast = (dt == 2 && g[2] == IntPoly::constant(1) && g[0] == IntPoly::constant(1) &&
                 g[1].degree() == 1 && g[1][0] == 0 && g[1][1] == -1);
    std::vector<Int> xs, ys;
    xs.reserve(static_cast<size_t>(target) + 1);
    Int e = 0;
    while (static_cast<int>(xs.size()) < target + 1) {
        if (lc.eval(e) != 0) {
            Int val;
            if (fast) {
                val = resultant_monic_quadratic(f, e);
            } else {
                std::vector<Int> spec(static_cast<size_t>(dt) + 1);
                for (int j = 0; j <= dt; ++j)
                    spec[static_cast<size_t>(j)] = g[static_cast<size_t>(j)].eval(e);
                val = resultant(f, IntPoly(std::move(spec)));
            }
            xs.push_back(e);
            ys.push_back(val);
        }
        e = (e > 0) ? Int(-e) : Int(1 - e); // 0, 1, -1, 2, -2, ...
    }
    return interpolate_integer(xs, ys);
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + IntPoly::constant(p[i]);
    return acc;
}

const IntPoly& cyclotomic(int m) {
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<int> divisors;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (cache.count(d)) continue;
        std::vector<Int> xm(static_cast<size_t>(d) + 1, Int(0));
        xm[0] = -1;
        xm.back() = 1;
        IntPoly p{std::move(xm)};
        for (int d2 : divisors) {
            if (d2 >= d || d % d2 != 0) continue;
            p = divide_exact(p, cache.at(d2));
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(m);
}

std::pair<IntPoly, std::vector<int>> strip_cyclotomic(IntPoly f, const std::vector<int>& orders) {
    std::vector<int> removed;
    for (int m : orders) {
        if (m <= 0) continue;
        const IntPoly& phi = cyclotomic(m);
        while (f.degree() >= phi.degree() && divides(phi, f)) {
            f = divide_exact(f, phi);
            removed.push_back(m);
        }
    }
    return {std::move(f), std::move(removed)};
}

} // namespace cuspheight::exactnum
