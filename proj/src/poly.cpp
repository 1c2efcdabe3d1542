#include "ratint/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ratint {

Poly Poly::constant(std::size_t arity, const Scalar& c) {
    Poly p(arity, c.mode());
    p.add_term(Monomial(arity), c);
    return p;
}

Poly Poly::var(std::size_t arity, std::size_t i, FieldMode mode) {
    Poly p(arity, mode);
    p.add_term(Monomial::unit(arity, i), Scalar::one(mode));
    return p;
}

Poly Poly::linear(std::size_t arity, std::size_t var, const Scalar& c) {
    Poly p(arity, c.mode());
    p.add_term(Monomial::unit(arity, var), Scalar::one(c.mode()));
    p.add_term(Monomial(arity), c);
    return p;
}

int Poly::total_deg() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg()));
    return d;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.arity() != arity_) throw ScalarError("monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_shape(const Poly& o) const {
    if (arity_ != o.arity_ || mode_ != o.mode_) throw ScalarError("polynomial shape mismatch");
}

Poly Poly::operator+(const Poly& o) const {
    require_same_shape(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_shape(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(arity_, mode_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_shape(o);
    Poly r(arity_, mode_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(arity_, mode_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

namespace {

Scalar power(const Scalar& base, std::uint32_t e) {
    Scalar r = Scalar::one(base.mode());
    for (std::uint32_t i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace

Scalar Poly::eval(const Point& y) const {
    if (y.size() != arity_) throw ScalarError("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(mode_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < arity_; ++i) t = t * power(y[i], m[i]);
        acc = acc + t;
    }
    return acc;
}

double Poly::eval_abs(const Point& y) const {
    if (y.size() != arity_) throw ScalarError("evaluation point arity mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = std::fabs(c.to_double());
        for (std::size_t i = 0; i < arity_; ++i) t *= std::pow(std::fabs(y[i].to_double()), m[i]);
        acc += t;
    }
    return acc;
}

Poly Poly::shift(const Point& y) const {
    if (y.size() != arity_) throw ScalarError("shift point arity mismatch");
    Poly r(arity_, mode_);
    for (const auto& [m, c] : terms_) {
        // c * prod_i (x_i + y_i)^{e_i}
        Poly t = Poly::constant(arity_, c);
        for (std::size_t i = 0; i < arity_; ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) t = t * Poly::linear(arity_, i, y[i]);
        r = r + t;
    }
    return r;
}

Scalar Poly::taylor_coeff(const Point& y, const Monomial& alpha) const {
    if (alpha.arity() != arity_) throw ScalarError("taylor order arity mismatch");
    return shift(y).coeff(alpha);
}

double Poly::taylor_scale(const Point& y, const Monomial& alpha) const {
    // same expansion with every contribution taken in absolute value
    Poly abs_p(arity_, FieldMode::Float64);
    for (const auto& [m, c] : terms_) abs_p.add_term(m, Scalar::fp(std::fabs(c.to_double())));
    Point abs_y;
    for (const auto& v : y) abs_y.push_back(Scalar::fp(std::fabs(v.to_double())));
    return abs_p.taylor_coeff(abs_y, alpha).to_double();
}

Poly Poly::normalized(const ZeroTest& zt) const {
    Poly r(arity_, mode_);
    for (const auto& [m, c] : terms_)
        if (!scalar_is_zero(c, 0.0, zt)) r.terms_.emplace(m, c);
    return r;
}

std::string Poly::str(const std::vector<std::string>& varnames) const {
    if (terms_.empty()) return "0";
    // render highest degree first
    std::vector<const std::pair<const Monomial, Scalar>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::reverse(order.begin(), order.end());
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        if (!first) out << " + ";
        first = false;
        out << t->second.str();
        for (std::size_t i = 0; i < arity_; ++i) {
            if (t->first[i] == 0) continue;
            out << "*" << varnames[i];
            if (t->first[i] > 1) out << "^" << t->first[i];
        }
    }
    return out.str();
}

}  // namespace ratint
