#pragma once

#include "cuspheight/numeric.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace cuspheight::exactnum {

/// A number field presented by structure constants: products of basis elements
/// expressed back in the basis. Basis element 0 is the multiplicative identity.
/// Commutativity, associativity and embedding consistency are checked eagerly
/// at construction so later arithmetic can assume a valid field.
class NumberFieldSpec {
public:
    NumberFieldSpec(int dim,
                    std::vector<std::string> basis_names,
                    std::vector<std::vector<std::vector<Rat>>> mul_table,
                    std::vector<std::complex<double>> embedding);

    int dim() const { return dim_; }
    const std::string& basis_name(int i) const { return basis_names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    /// coordinates of e_i * e_j
    const std::vector<Rat>& product(int i, int j) const {
        return mul_table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const std::vector<std::vector<std::vector<Rat>>>& mul_table() const { return mul_table_; }
    std::complex<double> embed_basis(int i) const { return embedding_[static_cast<size_t>(i)]; }

    /// Built-in fields.
    static std::shared_ptr<const NumberFieldSpec> rationals();
    static std::shared_ptr<const NumberFieldSpec> gaussian();          // Q(i), basis {1, i}
    static std::shared_ptr<const NumberFieldSpec> gaussian_sqrt2();    // Q(i, sqrt2), basis {1, i, sqrt2, i*sqrt2}

private:
    int dim_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<std::vector<Rat>>> mul_table_;
    std::vector<std::complex<double>> embedding_;
};

using FieldPtr = std::shared_ptr<const NumberFieldSpec>;

/// Element of a NumberFieldSpec, given by rational coordinates in the basis.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rat> coords);

    static FieldElement zero(const FieldPtr& f);
    static FieldElement one(const FieldPtr& f);
    static FieldElement from_rat(const FieldPtr& f, const Rat& r);
    /// basis element i
    static FieldElement basis(const FieldPtr& f, int i);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const;

    std::complex<double> embed() const;
    std::string str() const;

private:
    void check_same(const FieldElement& o) const;
    FieldPtr field_;
    std::vector<Rat> coords_;
};

/// Q-rank of the span of the given elements' coordinate vectors.
int rank_of_set(const std::vector<FieldElement>& elems);

/// Exact rank of a rational matrix (rows of coordinates), by Gaussian elimination.
int rational_matrix_rank(std::vector<std::vector<Rat>> m);

} // namespace cuspheight::exactnum
