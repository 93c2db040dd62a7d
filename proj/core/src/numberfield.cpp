#include "cuspheight/numberfield.hpp"

#include <cmath>
#include <sstream>

namespace cuspheight::exactnum {

namespace {

std::vector<Rat> mul_coords(const NumberFieldSpec& f, const std::vector<Rat>& a,
                            const std::vector<Rat>& b) {
    int d = f.dim();
    std::vector<Rat> out(static_cast<size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            Rat c = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            const auto& prod = f.product(i, j);
            for (int k = 0; k < d; ++k) out[static_cast<size_t>(k)] += c * prod[static_cast<size_t>(k)];
        }
    }
    return out;
}

} // namespace

NumberFieldSpec::NumberFieldSpec(int dim, std::vector<std::string> basis_names,
                                 std::vector<std::vector<std::vector<Rat>>> mul_table,
                                 std::vector<std::complex<double>> embedding)
    : dim_(dim),
      basis_names_(std::move(basis_names)),
      mul_table_(std::move(mul_table)),
      embedding_(std::move(embedding)) {
    if (dim_ <= 0) throw input_error("number field: non-positive dimension");
    auto dd = static_cast<size_t>(dim_);
    if (basis_names_.size() != dd || mul_table_.size() != dd || embedding_.size() != dd)
        throw input_error("number field: inconsistent table sizes");
    for (const auto& row : mul_table_) {
        if (row.size() != dd) throw input_error("number field: mul_table not square");
        for (const auto& v : row)
            if (v.size() != dd) throw input_error("number field: mul_table entry has wrong length");
    }
    // e_0 is the identity
    for (int j = 0; j < dim_; ++j) {
        const auto& p = product(0, j);
        for (int k = 0; k < dim_; ++k)
            if (p[static_cast<size_t>(k)] != Rat(k == j ? 1 : 0))
                throw input_error("number field: basis element 0 is not the identity");
    }
    // commutativity
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (product(i, j) != product(j, i))
                throw input_error("number field: mul_table is not commutative");
    // associativity on basis triples: (e_i e_j) e_k == e_i (e_j e_k)
    auto basis_coords = [&](int i) {
        std::vector<Rat> v(dd, Rat(0));
        v[static_cast<size_t>(i)] = 1;
        return v;
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                auto lhs = mul_coords(*this, product(i, j), basis_coords(k));
                auto rhs = mul_coords(*this, basis_coords(i), product(j, k));
                if (lhs != rhs) throw input_error("number field: mul_table is not associative");
            }
    // embedding consistency
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            std::complex<double> direct = embedding_[static_cast<size_t>(i)] * embedding_[static_cast<size_t>(j)];
            std::complex<double> viatable{0.0, 0.0};
            for (int k = 0; k < dim_; ++k)
                viatable += static_cast<double>(product(i, j)[static_cast<size_t>(k)].convert_to<double>()) *
                            embedding_[static_cast<size_t>(k)];
            if (std::abs(direct - viatable) > 1e-9 * (1.0 + std::abs(direct)))
                throw input_error("number field: embedding inconsistent with mul_table");
        }
}

static std::vector<std::vector<std::vector<Rat>>> table_from_int(
    const std::vector<std::vector<std::vector<int>>>& t) {
    std::vector<std::vector<std::vector<Rat>>> out(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        out[i].resize(t[i].size());
        for (size_t j = 0; j < t[i].size(); ++j) {
            out[i][j].reserve(t[i][j].size());
            for (int x : t[i][j]) out[i][j].emplace_back(x);
        }
    }
    return out;
}

std::shared_ptr<const NumberFieldSpec> NumberFieldSpec::rationals() {
    static auto f = std::make_shared<const NumberFieldSpec>(
        1, std::vector<std::string>{"1"}, table_from_int({{{1}}}),
        std::vector<std::complex<double>>{{1.0, 0.0}});
    return f;
}

std::shared_ptr<const NumberFieldSpec> NumberFieldSpec::gaussian() {
    static auto f = std::make_shared<const NumberFieldSpec>(
        2, std::vector<std::string>{"1", "i"},
        table_from_int({{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}}),
        std::vector<std::complex<double>>{{1.0, 0.0}, {0.0, 1.0}});
    return f;
}

std::shared_ptr<const NumberFieldSpec> NumberFieldSpec::gaussian_sqrt2() {
    // basis {1, i, s, is} with s = sqrt(2)
    // products: i*i=-1; i*s=is; i*is=-s; s*s=2; s*is=2i; is*is=-2
    std::vector<std::vector<std::vector<int>>> t(4, std::vector<std::vector<int>>(4));
    auto set = [&](int i, int j, std::vector<int> v) {
        t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        t[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    };
    set(0, 0, {1, 0, 0, 0});
    set(0, 1, {0, 1, 0, 0});
    set(0, 2, {0, 0, 1, 0});
    set(0, 3, {0, 0, 0, 1});
    set(1, 1, {-1, 0, 0, 0});
    set(1, 2, {0, 0, 0, 1});
    set(1, 3, {0, 0, -1, 0});
    set(2, 2, {2, 0, 0, 0});
    set(2, 3, {0, 2, 0, 0});
    set(3, 3, {-2, 0, 0, 0});
    const double s2 = std::sqrt(2.0);
    static auto f = std::make_shared<const NumberFieldSpec>(
        4, std::vector<std::string>{"1", "i", "sqrt2", "i*sqrt2"}, table_from_int(t),
        std::vector<std::complex<double>>{{1.0, 0.0}, {0.0, 1.0}, {s2, 0.0}, {0.0, s2}});
    return f;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw input_error("field element without a field");
    if (coords_.size() != static_cast<size_t>(field_->dim()))
        throw input_error("field element coordinate count mismatch");
}

FieldElement FieldElement::zero(const FieldPtr& f) {
    return FieldElement(f, std::vector<Rat>(static_cast<size_t>(f->dim()), Rat(0)));
}

FieldElement FieldElement::one(const FieldPtr& f) { return basis(f, 0); }

FieldElement FieldElement::from_rat(const FieldPtr& f, const Rat& r) {
    std::vector<Rat> v(static_cast<size_t>(f->dim()), Rat(0));
    v[0] = r;
    return FieldElement(f, std::move(v));
}

FieldElement FieldElement::basis(const FieldPtr& f, int i) {
    std::vector<Rat> v(static_cast<size_t>(f->dim()), Rat(0));
    v[static_cast<size_t>(i)] = 1;
    return FieldElement(f, std::move(v));
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) {
        // identical structure behind distinct pointers is accepted
        if (!field_ || !o.field_ || field_->mul_table() != o.field_->mul_table())
            throw input_error("field mismatch between operands");
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    std::vector<Rat> v(coords_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    std::vector<Rat> v(coords_);
    for (auto& c : v) c = -c;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, mul_coords(*field_, coords_, o.coords_));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw input_error("inverse of zero field element");
    int d = field_->dim();
    // solve (mult-by-x) y = e_0 as a d x d rational linear system
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                    std::vector<Rat>(static_cast<size_t>(d) + 1, Rat(0)));
    // column j of mult-by-x = coords of x * e_j
    for (int j = 0; j < d; ++j) {
        std::vector<Rat> ej(static_cast<size_t>(d), Rat(0));
        ej[static_cast<size_t>(j)] = 1;
        auto col = mul_coords(*field_, coords_, ej);
        for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    m[0][static_cast<size_t>(d)] = 1;
    // Gaussian elimination
    for (int c = 0, r = 0; c < d && r < d; ++c) {
        int p = -1;
        for (int i = r; i < d; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw input_error("malformed NumberFieldSpec: multiplication map is singular");
        std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(r)]);
        Rat piv = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (auto& x : m[static_cast<size_t>(r)]) x /= piv;
        for (int i = 0; i < d; ++i) {
            if (i == r) continue;
            Rat f2 = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f2 == 0) continue;
            for (int j = c; j <= d; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f2 * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        ++r;
    }
    std::vector<Rat> y(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) y[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(d)];
    return FieldElement(field_, std::move(y));
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return coords_ == o.coords_;
}

std::complex<double> FieldElement::embed() const {
    std::complex<double> z{0.0, 0.0};
    for (int i = 0; i < field_->dim(); ++i)
        z += coords_[static_cast<size_t>(i)].convert_to<double>() * field_->embed_basis(i);
    return z;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < field_->dim(); ++i) {
        const Rat& c = coords_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(c);
        if (i > 0) os << "*" << field_->basis_name(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int rational_matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t p = rows;
        for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p == rows) continue;
        std::swap(m[p], m[static_cast<size_t>(rank)]);
        const Rat piv = m[static_cast<size_t>(rank)][c];
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
            Rat f = m[r][c] / piv;
            for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

int rank_of_set(const std::vector<FieldElement>& elems) {
    if (elems.empty()) return 0;
    std::vector<std::vector<Rat>> m;
    m.reserve(elems.size());
    for (const auto& e : elems) m.push_back(e.coords());
    return rational_matrix_rank(std::move(m));
}

} // namespace cuspheight::exactnum
