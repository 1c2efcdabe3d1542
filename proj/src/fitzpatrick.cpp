#include "ratint/fitzpatrick.hpp"

#include <algorithm>
#include <cmath>

namespace ratint {

BasisState initial_state(const Problem& p, const ZeroTest& zt) {
    const std::size_t n = p.arity();
    BasisState st;
    st.ord = p.ord;
    st.mode = p.mode;
    st.zt = zt;
    PairElement e1{Poly::constant(n, Scalar::one(p.mode)), Poly::zero(n, p.mode)};
    PairElement e2{Poly::zero(n, p.mode), Poly::constant(n, Scalar::one(p.mode))};
    st.basis = minimalize({e1, e2}, st.ord);
    return st;
}

Scalar residue(const PairElement& e, const Node& node, const Constraint& c, const Poly& h) {
    return (e.b * h - e.a).taylor_coeff(node.point, c.alpha);
}

namespace {

struct ResidueInfo {
    Scalar nu;
    bool zero;
};

ResidueInfo classify_residue(const PairElement& e, const Node& node, const Constraint& c,
                             const Poly& h, const BasisState& st, int& warnings) {
    Poly defect = e.b * h - e.a;
    Scalar nu = defect.taylor_coeff(node.point, c.alpha);
    if (st.mode == FieldMode::Exact) return {nu, nu.is_zero()};
    const double scale = defect.taylor_scale(node.point, c.alpha);
    const double tol = st.zt.threshold(scale);
    const double mag = std::fabs(nu.to_double());
    if (mag <= tol) return {nu, true};
    if (mag <= 10.0 * tol) ++warnings;  // ambiguous: treated nonzero, flagged
    return {nu, false};
}

}  // namespace

void update_basis(BasisState& st, const Node& node, const Constraint& c, const Poly& h) {
    const std::size_t m = st.basis.size();
    std::vector<ResidueInfo> res;
    res.reserve(m);
    for (const auto& e : st.basis)
        res.push_back(classify_residue(e, node, c, h, st, st.conditioning_warnings));

    std::size_t pivot = m;
    for (std::size_t t = 0; t < m; ++t)
        if (!res[t].zero) {
            pivot = t;
            break;
        }
    if (pivot == m) {
        ++st.consumed;
        return;
    }

    const PairElement piv = st.basis[pivot];
    const Scalar& nu_piv = res[pivot].nu;
    std::vector<PairElement> next(st.basis.begin(), st.basis.begin() + pivot);
    for (std::size_t s : st.ord.varorder) {
        Poly lin = Poly::linear(st.basis[pivot].a.arity(), s, -node.point[s]);
        next.push_back(piv.times(lin));
    }
    for (std::size_t t = pivot + 1; t < m; ++t) {
        PairElement e = st.basis[t] - piv.scaled(res[t].nu / nu_piv);
        if (st.mode == FieldMode::Float64)
            e = {e.a.normalized(st.zt), e.b.normalized(st.zt)};
        next.push_back(std::move(e));
    }
    st.basis = minimalize(std::move(next), st.ord);
    ++st.consumed;
}

BasisState solve(const Problem& p, const ZeroTest& zt, const StepObserver& observe) {
    p.validate();
    BasisState st = initial_state(p, zt);
    std::vector<Poly> hs;
    hs.reserve(p.nodes.size());
    for (const auto& node : p.nodes) hs.push_back(build_h(node, p.arity(), p.mode));
    for (const auto& c : constraints(p)) {
        update_basis(st, p.nodes[c.node_index], c, hs[c.node_index]);
        if (observe) observe(st, c);
    }
    return st;
}

bool verify_weak(const PairElement& e, const Problem& p, const ZeroTest& zt) {
    for (const auto& node : p.nodes) {
        Poly h = build_h(node, p.arity(), p.mode);
        Poly defect = e.b * h - e.a;
        for (const auto& alpha : node.mult.elems) {
            Scalar nu = defect.taylor_coeff(node.point, alpha);
            if (p.mode == FieldMode::Exact) {
                if (!nu.is_zero()) return false;
            } else if (!scalar_is_zero(nu, defect.taylor_scale(node.point, alpha), zt)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// b must clear the zero test at y against the magnitude of the whole pair,
// so a denominator that is mere roundoff next to the numerator is rejected
bool denominator_nonzero(const PairElement& e, const Point& y, FieldMode mode, const ZeroTest& zt) {
    Scalar v = e.b.eval(y);
    if (mode == FieldMode::Exact) return !v.is_zero();
    return !scalar_is_zero(v, std::max(e.a.eval_abs(y), e.b.eval_abs(y)), zt);
}

bool nonzero_everywhere(const PairElement& e, const Problem& p, const std::optional<Point>& y0,
                        const ZeroTest& zt) {
    for (const auto& node : p.nodes)
        if (!denominator_nonzero(e, node.point, p.mode, zt)) return false;
    if (y0 && !denominator_nonzero(e, *y0, p.mode, zt)) return false;
    return true;
}

}  // namespace

std::optional<Representative> pick_representative(const BasisState& st, const Problem& p,
                                                  const std::optional<Point>& y0) {
    for (std::size_t i = 0; i < st.basis.size(); ++i)
        if (nonzero_everywhere(st.basis[i], p, y0, st.zt)) return Representative{st.basis[i], {i}};
    for (std::size_t i = 0; i < st.basis.size(); ++i)
        for (std::size_t j = i + 1; j < st.basis.size(); ++j) {
            PairElement sum = st.basis[i] + st.basis[j];
            if (nonzero_everywhere(sum, p, y0, st.zt)) return Representative{sum, {i, j}};
        }
    return std::nullopt;
}

}  // namespace ratint
