#include "ratint/neville.hpp"

#include <algorithm>
#include <cmath>

namespace ratint {

double WRow::residue_scale() const {
    double s = 0.0;
    for (const auto& r : residues) s = std::max(s, std::fabs(r.to_double()));
    return s;
}

NevilleState init_state(std::vector<Point> points, std::vector<Scalar> values, Point y0,
                        const OrderXi& ord, FieldMode mode, const ZeroTest& zt) {
    if (points.empty()) throw ProblemError("no interpolation points");
    if (points.size() != values.size()) throw ProblemError("points/values size mismatch");
    const std::size_t n = points[0].size();
    if (y0.size() != n) throw ProblemError("query point arity mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw ProblemError("duplicate interpolation points");

    NevilleState st;
    st.points = std::move(points);
    st.values = std::move(values);
    st.y0 = std::move(y0);
    st.ord = ord;
    st.mode = mode;
    st.zt = zt;

    const std::size_t L = st.points.size();
    WRow r1{std::vector<Scalar>(L, -Scalar::one(mode)), Scalar::one(mode), Scalar::zero(mode),
            {Monomial(n), Component::First}};
    WRow r2{st.values, Scalar::zero(mode), Scalar::one(mode), {Monomial(n), Component::Second}};
    st.rows = {std::move(r1), std::move(r2)};
    std::sort(st.rows.begin(), st.rows.end(),
              [&](const WRow& a, const WRow& b) { return modterm_less(a.lt, b.lt, st.ord); });
    return st;
}

namespace {

bool residue_nonzero(const NevilleState& st, const WRow& row, std::size_t col, int& warnings) {
    const Scalar& v = row.residues[col];
    if (st.mode == FieldMode::Exact) return !v.is_zero();
    const double tol = st.zt.threshold(row.residue_scale());
    const double mag = std::fabs(v.to_double());
    if (mag <= tol) return false;
    if (mag <= 10.0 * tol) ++warnings;
    return true;
}

}  // namespace

void step(NevilleState& st) {
    if (st.k >= st.points.size()) throw ProblemError("all points already consumed");
    const std::size_t k = st.k;  // 0-based column being annihilated
    const std::size_t L = st.points.size();

    std::sort(st.rows.begin(), st.rows.end(),
              [&](const WRow& a, const WRow& b) { return modterm_less(a.lt, b.lt, st.ord); });

    std::size_t pivot = st.rows.size();
    for (std::size_t i = 0; i < st.rows.size(); ++i)
        if (residue_nonzero(st, st.rows[i], k, st.conditioning_warnings)) {
            pivot = i;
            break;
        }
    if (pivot == st.rows.size()) {
        ++st.k;
        return;
    }

    const WRow piv = st.rows[pivot];
    for (std::size_t i = pivot + 1; i < st.rows.size(); ++i) {
        WRow& row = st.rows[i];
        Scalar f = row.residues[k] / piv.residues[k];
        for (std::size_t j = 0; j < L; ++j)
            row.residues[j] = row.residues[j] - f * piv.residues[j];
        row.a0 = row.a0 - f * piv.a0;
        row.b0 = row.b0 - f * piv.b0;
        // lt unchanged: the subtrahend's leading term is strictly smaller
    }

    std::vector<WRow> next(st.rows.begin(), st.rows.begin() + pivot);
    next.insert(next.end(), st.rows.begin() + pivot + 1, st.rows.end());
    for (std::size_t s : st.ord.varorder) {
        WRow spawned;
        spawned.residues.reserve(L);
        for (std::size_t j = 0; j < L; ++j)
            spawned.residues.push_back(piv.residues[j] * (st.points[j][s] - st.points[k][s]));
        Scalar f0 = st.y0[s] - st.points[k][s];
        spawned.a0 = piv.a0 * f0;
        spawned.b0 = piv.b0 * f0;
        spawned.lt = {piv.lt.mono.times_var(s), piv.lt.comp};
        next.push_back(std::move(spawned));
    }

    std::stable_sort(next.begin(), next.end(),
                     [&](const WRow& a, const WRow& b) { return modterm_less(a.lt, b.lt, st.ord); });
    std::vector<WRow> kept;
    for (auto& row : next) {
        bool redundant = false;
        for (const auto& kr : kept)
            if (modterm_divides(kr.lt, row.lt)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(row));
    }
    st.rows = std::move(kept);
    ++st.k;
}

Estimate estimate(const NevilleState& st) {
    if (st.rows.empty()) throw ProblemError("estimate on an empty state");
    Estimate out;
    Scalar num = Scalar::zero(st.mode);
    Scalar den = Scalar::zero(st.mode);
    double den_scale = 0.0;
    for (const auto& row : st.rows) {
        const bool positive = st.mode == FieldMode::Exact ? row.b0.cmp(Scalar::zero(st.mode)) > 0
                                                          : row.b0.to_double() > 0.0;
        const Scalar s = positive ? Scalar::one(st.mode) : -Scalar::one(st.mode);
        num = num + s * row.a0;
        den = den + s * row.b0;
        den_scale += std::fabs(row.b0.to_double());

        Estimate::RowEval ev{row.a0, row.b0, std::nullopt};
        const double pair_scale =
            std::max(std::fabs(row.a0.to_double()), std::fabs(row.b0.to_double()));
        if (!scalar_is_zero(row.b0, pair_scale, st.zt)) ev.ratio = row.a0 / row.b0;
        out.per_row.push_back(std::move(ev));
    }
    if (scalar_is_zero(den, den_scale, st.zt))
        throw DegenerateDenominator("sign-weighted denominator fails the nonzero test");
    out.value = num / den;
    return out;
}

std::vector<Estimate> run(std::vector<Point> points, std::vector<Scalar> values, Point y0,
                          const OrderXi& ord, FieldMode mode, const ZeroTest& zt,
                          const NevilleObserver& observe) {
    NevilleState st = init_state(std::move(points), std::move(values), std::move(y0), ord, mode, zt);
    std::vector<Estimate> out;
    const std::size_t L = st.points.size();
    for (std::size_t k = 0; k < L; ++k) {
        step(st);
        if (observe) observe(st);
        out.push_back(estimate(st));
    }
    return out;
}

NevilleState init_state(const Problem& p, const Point& y0, const ZeroTest& zt) {
    p.validate();
    if (!p.is_cauchy())
        throw ProblemError("the evaluator handles simple (value-only) data; "
                           "derivative data goes through solve");
    std::vector<Point> pts;
    std::vector<Scalar> vals;
    for (const auto& node : p.nodes) {
        pts.push_back(node.point);
        vals.push_back(node.data.at(Monomial(p.arity())));
    }
    return init_state(std::move(pts), std::move(vals), y0, p.ord, p.mode, zt);
}

}  // namespace ratint
