#include "cuspheight/subgroups.hpp"

#include <algorithm>
#include <cmath>

namespace cuspheight::subgroups {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void row_sub(IMat& M, size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}

void col_sub(IMat& M, size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < M.size(); ++i) M[i][dst] -= q * M[i][src];
}

void row_neg(IMat& M, size_t r) {
    for (auto& x : M[r]) x = -x;
}

} // namespace

IMat identity(int n) {
    IMat I(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return I;
}

IMat mat_mul(const IMat& A, const IMat& B) {
    size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B[0].size();
    IMat C(m, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

Int det(const IMat& A) {
    size_t n = A.size();
    if (n == 0) return 1;
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = n;
        for (size_t r = c; r < n; ++r)
            if (M[r][c] != 0) {
                p = r;
                break;
            }
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            d = -d;
        }
        d *= M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            Rat f = M[r][c] / M[c][c];
            for (size_t j = c; j < n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    if (denominator(d) != 1) throw std::logic_error("integer determinant not integral");
    return numerator(d);
}

IMat unimodular_inverse(const IMat& A) {
    size_t n = A.size();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
        M[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = n;
        for (size_t r = c; r < n; ++r)
            if (M[r][c] != 0) {
                p = r;
                break;
            }
        if (p == n) throw input_error("matrix is singular");
        std::swap(M[p], M[c]);
        Rat piv = M[c][c];
        for (auto& x : M[c]) x /= piv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (size_t j = 0; j < 2 * n; ++j) M[r][j] -= f * M[c][j];
        }
    }
    IMat out(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (denominator(M[i][n + j]) != 1) throw input_error("matrix inverse is not integral");
            out[i][j] = numerator(M[i][n + j]);
        }
    return out;
}

IMat hnf(IMat rows) {
    if (rows.empty()) return rows;
    size_t m = rows.size(), n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        // gcd the column entries below r into row r
        while (true) {
            size_t piv = m;
            for (size_t i = r; i < m; ++i)
                if (rows[i][c] != 0 && (piv == m || abs(rows[i][c]) < abs(rows[piv][c]))) piv = i;
            if (piv == m) break;
            std::swap(rows[r], rows[piv]);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                row_sub(rows, i, r, q);
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) row_neg(rows, r);
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0) row_sub(rows, i, r, q);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

SnfResult snf(const IMat& A) {
    SnfResult out;
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    out.D = A;
    out.U = identity(static_cast<int>(m));
    out.V = identity(static_cast<int>(n));
    IMat& D = out.D;
    IMat& U = out.U;
    IMat& V = out.V;

    auto urow_sub = [&](size_t dst, size_t src, const Int& q) {
        row_sub(D, dst, src, q);
        row_sub(U, dst, src, q);
    };
    auto ucol_sub = [&](size_t dst, size_t src, const Int& q) {
        col_sub(D, dst, src, q);
        col_sub(V, dst, src, q);
    };
    auto urow_swap = [&](size_t a, size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto ucol_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
        for (size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    };

    size_t t = 0;
    while (t < m && t < n) {
        // smallest nonzero |entry| in the trailing block
        size_t bi = m, bj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (bi == m || abs(D[i][j]) < abs(D[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m) break; // trailing block is zero
        if (bi != t) urow_swap(t, bi);
        if (bj != t) ucol_swap(t, bj);

        bool dirty = false;
        for (size_t i = t + 1; i < m; ++i) {
            if (D[i][t] == 0) continue;
            Int q = D[i][t] / D[t][t];
            urow_sub(i, t, q);
            if (D[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (D[t][j] == 0) continue;
            Int q = D[t][j] / D[t][t];
            ucol_sub(j, t, q);
            if (D[t][j] != 0) dirty = true;
        }
        if (dirty) continue;

        // divisibility fix-up: every trailing entry must be divisible by D[t][t]
        bool fixed = true;
        for (size_t i = t + 1; i < m && fixed; ++i)
            for (size_t j = t + 1; j < n && fixed; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    urow_sub(t, i, Int(-1)); // add row i to row t
                    fixed = false;
                }
        if (!fixed) continue;
        ++t;
    }
    for (size_t i = 0; i < std::min(m, n); ++i)
        if (D[i][i] < 0) {
            row_neg(D, i);
            row_neg(U, i);
        }
    return out;
}

Lattice::Lattice(int ambient_dim, IMat generators) : ambient_(ambient_dim) {
    for (const auto& row : generators)
        if (row.size() != static_cast<size_t>(ambient_dim))
            throw input_error("lattice generator has wrong length");
    rows_ = hnf(std::move(generators));
}

bool Lattice::operator<(const Lattice& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    return rows_ < o.rows_;
}

Lattice Lattice::saturation() const {
    if (rows_.empty()) return *this;
    SnfResult s = snf(rows_);
    IMat B = unimodular_inverse(s.V);
    IMat sat(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) sat[i] = B[i];
    return Lattice(ambient_, std::move(sat));
}

TorusSplit torus_split(const AlgebraicSubgroup& H) {
    TorusSplit out;
    const Lattice& L = H.lattice;
    int n = L.ambient_dim();
    int r = L.rank();
    if (r == 0) {
        out.phi.matrix = identity(n);
        out.torus_rank = n;
        return out;
    }
    SnfResult s = snf(L.rows());
    out.phi.matrix = unimodular_inverse(s.V);
    for (int i = 0; i < r; ++i) {
        Int d = s.D[static_cast<size_t>(i)][static_cast<size_t>(i)];
        out.torsion_orders.push_back(d);
    }
    out.torus_rank = n - r;
    return out;
}

bool is_restricted(const AlgebraicSubgroup& H, int n, int t) {
    if (n + t != H.lattice.ambient_dim()) throw input_error("is_restricted: n + t != ambient dimension");
    for (const auto& row : H.lattice.rows())
        for (int j = n; j < n + t; ++j)
            if (row[static_cast<size_t>(j)] != 0) return false;
    return true;
}

AlgebraicSubgroup dehn_subgroup(const std::vector<std::pair<Int, Int>>& coeffs, int k) {
    if (static_cast<int>(coeffs.size()) != k) throw input_error("dehn_subgroup: need one pair per cusp");
    IMat rows;
    for (int i = 0; i < k; ++i) {
        const auto& [p, q] = coeffs[static_cast<size_t>(i)];
        if (gcd_int(p, q) != 1) throw input_error("dehn_subgroup: coefficients not coprime");
        std::vector<Int> row(static_cast<size_t>(2 * k), Int(0));
        row[static_cast<size_t>(i)] = p;
        row[static_cast<size_t>(k + i)] = q;
        rows.push_back(std::move(row));
    }
    return AlgebraicSubgroup{Lattice(2 * k, std::move(rows))};
}

namespace {

exactnum::FieldElement fe_pow(const exactnum::FieldElement& x, const Int& e) {
    using exactnum::FieldElement;
    FieldElement base = (e < 0) ? x.inverse() : x;
    Int k = abs(e);
    FieldElement acc = FieldElement::one(x.field());
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::complex<double> cpow(std::complex<double> x, const Int& e, double& relerr) {
    std::complex<double> base = (e < 0) ? 1.0 / x : x;
    Int k = abs(e);
    std::complex<double> acc{1.0, 0.0};
    while (k > 0) {
        if ((k & 1) != 0) {
            acc *= base;
            relerr += 3e-16;
        }
        base *= base;
        relerr += 3e-16;
        k >>= 1;
    }
    return acc;
}

} // namespace

MemberVerdict member(const ExactPoint& pt, const Coset& K) {
    const Lattice& L = K.subgroup.lattice;
    if (pt.size() != static_cast<size_t>(L.ambient_dim())) throw input_error("member: point arity mismatch");
    for (const auto& x : pt)
        if (x.is_zero()) throw input_error("member: point has a zero coordinate");
    for (const auto& row : L.rows()) {
        auto f = pt[0].field();
        exactnum::FieldElement lhs = exactnum::FieldElement::one(f);
        for (size_t i = 0; i < pt.size(); ++i)
            if (row[i] != 0) lhs = lhs * fe_pow(pt[i], row[i]);
        exactnum::FieldElement rhs = exactnum::FieldElement::one(f);
        if (K.translate_exact) {
            const ExactPoint& g = *K.translate_exact;
            for (size_t i = 0; i < g.size(); ++i)
                if (row[i] != 0) rhs = rhs * fe_pow(g[i], row[i]);
        }
        if (!(lhs == rhs)) return MemberVerdict::no;
    }
    return MemberVerdict::yes;
}

MemberVerdict member(const NumericPoint& pt, const Coset& K, double tol) {
    const Lattice& L = K.subgroup.lattice;
    if (pt.size() != static_cast<size_t>(L.ambient_dim())) throw input_error("member: point arity mismatch");
    for (const auto& x : pt)
        if (std::abs(x) == 0.0) throw input_error("member: point has a zero coordinate");
    bool all_yes = true;
    for (const auto& row : L.rows()) {
        double err = 0.0;
        std::complex<double> lhs{1.0, 0.0};
        for (size_t i = 0; i < pt.size(); ++i)
            if (row[i] != 0) {
                lhs *= cpow(pt[i], row[i], err);
                err += 3e-16;
            }
        std::complex<double> rhs{1.0, 0.0};
        if (K.translate_numeric) {
            const NumericPoint& g = *K.translate_numeric;
            for (size_t i = 0; i < g.size(); ++i)
                if (row[i] != 0) {
                    rhs *= cpow(g[i], row[i], err);
                    err += 3e-16;
                }
        }
        double dist = std::abs(lhs - rhs);
        double pad = err * (std::abs(lhs) + std::abs(rhs) + 1.0);
        if (dist - pad > tol) return MemberVerdict::no;
        if (!(dist + pad < tol)) all_yes = false;
    }
    return all_yes ? MemberVerdict::yes : MemberVerdict::undecidable;
}

NumericPoint apply_monoidal(const MonoidalMap& phi, const NumericPoint& pt) {
    size_t n = pt.size();
    if (phi.matrix.size() != n) throw input_error("monoidal map arity mismatch");
    NumericPoint out(n);
    for (size_t j = 0; j < n; ++j) {
        double err = 0.0;
        std::complex<double> acc{1.0, 0.0};
        for (size_t i = 0; i < n; ++i)
            if (phi.matrix[j][i] != 0) acc *= cpow(pt[i], phi.matrix[j][i], err);
        out[j] = acc;
    }
    return out;
}

AlgebraicSubgroup apply_monoidal(const MonoidalMap& phi, const AlgebraicSubgroup& H) {
    IMat Binv = unimodular_inverse(phi.matrix);
    IMat rows = mat_mul(H.lattice.rows(), Binv);
    return AlgebraicSubgroup{Lattice(H.lattice.ambient_dim(), std::move(rows))};
}

} // namespace cuspheight::subgroups
