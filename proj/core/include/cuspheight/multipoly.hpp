#pragma once

#include "cuspheight/numberfield.hpp"

#include <map>
#include <vector>

namespace cuspheight::exactnum {

using Exponents = std::vector<int>;

/// Graded-lexicographic order on exponent tuples (canonical term order).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Multivariate polynomial with FieldElement coefficients; zero coefficients
/// are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElement, GradedLex>;

    MultiPoly() = default;
    MultiPoly(int nvars, FieldPtr field);

    static MultiPoly constant(int nvars, const FieldElement& c);
    static MultiPoly variable(int nvars, const FieldPtr& f, int which);

    int nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    void set_term(const Exponents& e, const FieldElement& c);
    FieldElement coeff(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly derivative(int var) const;
    /// Drop all terms of total degree > maxdeg.
    MultiPoly truncated(int maxdeg) const;
    /// Substitute: variable `var` ->  value (a constant), reducing arity by
    /// keeping exponent slots (exponent of var forced to 0).
    MultiPoly eval_var(int var, const FieldElement& value) const;
    /// Lift to a larger variable space: old variable i becomes variable map[i].
    MultiPoly relabel(int new_nvars, const std::vector<int>& map) const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    void check_compatible(const MultiPoly& o) const;
    int nvars_ = 0;
    FieldPtr field_;
    TermMap terms_;
};

} // namespace cuspheight::exactnum
