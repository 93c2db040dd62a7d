#include "cuspheight/multipoly.hpp"

#include <sstream>

namespace cuspheight::exactnum {

MultiPoly::MultiPoly(int nvars, FieldPtr field) : nvars_(nvars), field_(std::move(field)) {
    if (nvars_ <= 0) throw input_error("MultiPoly: non-positive variable count");
    if (!field_) throw input_error("MultiPoly: missing coefficient field");
}

MultiPoly MultiPoly::constant(int nvars, const FieldElement& c) {
    MultiPoly p(nvars, c.field());
    p.set_term(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, const FieldPtr& f, int which) {
    MultiPoly p(nvars, f);
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(which)] = 1;
    p.set_term(e, FieldElement::one(f));
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s > d) d = s;
    }
    return d;
}

void MultiPoly::set_term(const Exponents& e, const FieldElement& c) {
    if (e.size() != static_cast<size_t>(nvars_)) throw input_error("MultiPoly: exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw input_error("MultiPoly: negative exponent");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement::zero(field_);
    return it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw input_error("MultiPoly: variable count mismatch");
    if (field_ != o.field_ && field_->mul_table() != o.field_->mul_table())
        throw input_error("field mismatch between MultiPoly operands");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.set_term(e, r.coeff(e) + c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(nvars_, field_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.set_term(e, r.coeff(e) + ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(nvars_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exponents e2(e);
        e2[static_cast<size_t>(var)] -= 1;
        r.set_term(e2, r.coeff(e2) + c * FieldElement::from_rat(field_, Rat(k)));
    }
    return r;
}

MultiPoly MultiPoly::truncated(int maxdeg) const {
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::eval_var(int var, const FieldElement& value) const {
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        FieldElement f = c;
        for (int i = 0; i < k; ++i) f = f * value;
        Exponents e2(e);
        e2[static_cast<size_t>(var)] = 0;
        r.set_term(e2, r.coeff(e2) + f);
    }
    return r;
}

MultiPoly MultiPoly::relabel(int new_nvars, const std::vector<int>& map) const {
    if (map.size() != static_cast<size_t>(nvars_)) throw input_error("relabel: bad variable map");
    MultiPoly r(new_nvars, field_);
    for (const auto& [e, c] : terms_) {
        Exponents e2(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < e.size(); ++i) e2[static_cast<size_t>(map[i])] += e[i];
        r.set_term(e2, r.coeff(e2) + c);
    }
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            int k = it->first[i];
            if (k == 0) continue;
            os << "*" << var_names[i];
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace cuspheight::exactnum
