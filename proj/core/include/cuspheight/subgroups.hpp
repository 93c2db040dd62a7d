#pragma once

#include "cuspheight/numberfield.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace cuspheight::subgroups {

using IMat = std::vector<std::vector<Int>>;

/// Row-style Hermite normal form; zero rows dropped, pivots positive, entries
/// above a pivot reduced into [0, pivot).
IMat hnf(IMat rows);

struct SnfResult {
    IMat U, D, V; // U * A * V = D, U and V unimodular, D diagonal with divisor chain
};

/// Smith normal form with transformation tracking (pivot: smallest nonzero
/// absolute value, explicit row/column operations).
SnfResult snf(const IMat& A);

Int det(const IMat& A);
IMat mat_mul(const IMat& A, const IMat& B);
IMat identity(int n);
/// Exact inverse of a unimodular integer matrix.
IMat unimodular_inverse(const IMat& A);

/// Integer lattice spanned by rows, canonicalized by HNF at construction.
class Lattice {
public:
    Lattice(int ambient_dim, IMat generators);

    int ambient_dim() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const IMat& rows() const { return rows_; }
    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
    bool operator<(const Lattice& o) const;

    /// Smallest primitive lattice containing this one (same rational span).
    Lattice saturation() const;

private:
    int ambient_;
    IMat rows_; // HNF
};

/// H_Lambda: common zero set of x^v = 1 for v in the lattice.
struct AlgebraicSubgroup {
    Lattice lattice;

    int dim() const { return lattice.ambient_dim() - lattice.rank(); }
    /// A torus iff the lattice is saturated.
    bool is_torus() const { return lattice == lattice.saturation(); }
};

/// Multiplicative change of coordinates y_j = prod_i x_i^(A[j][i]) (row
/// convention); unimodular when used for splitting.
struct MonoidalMap {
    IMat matrix;
};

struct TorusSplit {
    MonoidalMap phi;
    std::vector<Int> torsion_orders; // lattice-rank many elementary divisors
    int torus_rank = 0;
};

/// Coordinates in which the subgroup reads x_1^(l_1) = ... = x_m^(l_m) = 1.
TorusSplit torus_split(const AlgebraicSubgroup& H);

/// True iff {1}^n x G_m^t is contained in H (all generators supported on the
/// first n coordinates).
bool is_restricted(const AlgebraicSubgroup& H, int n, int t);

/// Lattice of the Dehn surgery equations M_i^(p_i) L_i^(q_i) = 1 in coordinates
/// (M_1..M_k, L_1..L_k).
AlgebraicSubgroup dehn_subgroup(const std::vector<std::pair<Int, Int>>& coeffs, int k);

enum class MemberVerdict { yes, no, undecidable };

using ExactPoint = std::vector<exactnum::FieldElement>;
using NumericPoint = std::vector<std::complex<double>>;

struct Coset {
    AlgebraicSubgroup subgroup;
    std::optional<ExactPoint> translate_exact;   // identity translate when absent
    std::optional<NumericPoint> translate_numeric;
};

MemberVerdict member(const ExactPoint& pt, const Coset& K);
MemberVerdict member(const NumericPoint& pt, const Coset& K, double tol);

/// Image of a point under a monoidal map (numeric path).
NumericPoint apply_monoidal(const MonoidalMap& phi, const NumericPoint& pt);
/// Transformed subgroup: relations v become v * inverse(A) ... computed so that
/// member(pt, H) == member(phi(pt), transform(phi, H)).
AlgebraicSubgroup apply_monoidal(const MonoidalMap& phi, const AlgebraicSubgroup& H);

} // namespace cuspheight::subgroups
