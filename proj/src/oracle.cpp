#include "ratint/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace ratint {

std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(arity, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos == arity) {
            out.push_back(Monomial(cur));
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());  // storage order, deterministic
    return out;
}

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

// reduced row echelon form; returns pivot column of each pivot row
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = Scalar::one(m[r][c].mode()) / m[r][c];
        for (auto& v : m[r]) v = v * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

struct CoeffSpace {
    std::vector<Monomial> amons, bmons;
    std::map<Monomial, std::size_t> aindex, bindex;
    std::size_t dim() const { return amons.size() + bmons.size(); }

    CoeffSpace(std::size_t arity, const DegreeBox& box) {
        amons = monomials_up_to(arity, box.max_deg_a);
        bmons = monomials_up_to(arity, box.max_deg_b);
        for (std::size_t i = 0; i < amons.size(); ++i) aindex[amons[i]] = i;
        for (std::size_t i = 0; i < bmons.size(); ++i) bindex[bmons[i]] = amons.size() + i;
    }

    // fails (returns false) when the element does not fit the box
    bool to_vector(const PairElement& e, std::vector<Scalar>& out) const {
        out.assign(dim(), Scalar::zero(FieldMode::Exact));
        for (const auto& [m, c] : e.a.terms()) {
            auto it = aindex.find(m);
            if (it == aindex.end()) return false;
            out[it->second] = c;
        }
        for (const auto& [m, c] : e.b.terms()) {
            auto it = bindex.find(m);
            if (it == bindex.end()) return false;
            out[it->second] = c;
        }
        return true;
    }
};

// one row per prescribed Taylor coefficient of b*h - a
Matrix constraint_matrix(const Problem& p, const CoeffSpace& space) {
    Matrix rows;
    const std::size_t arity = p.arity();
    for (const auto& node : p.nodes) {
        Poly h = build_h(node, arity, p.mode);
        for (const auto& alpha : node.mult.elems) {
            std::vector<Scalar> row(space.dim(), Scalar::zero(FieldMode::Exact));
            for (std::size_t i = 0; i < space.amons.size(); ++i) {
                Poly mono(arity, p.mode);
                mono.add_term(space.amons[i], Scalar::one(p.mode));
                row[i] = -mono.taylor_coeff(node.point, alpha);
            }
            for (std::size_t i = 0; i < space.bmons.size(); ++i) {
                Poly mono(arity, p.mode);
                mono.add_term(space.bmons[i], Scalar::one(p.mode));
                row[space.amons.size() + i] = (mono * h).taylor_coeff(node.point, alpha);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

std::vector<PairElement> brute_solutions(const Problem& p, const DegreeBox& box) {
    if (p.mode != FieldMode::Exact) throw ProblemError("brute_solutions runs in exact mode only");
    const CoeffSpace space(p.arity(), box);
    if (space.dim() > 200) throw ProblemError("degree box too large for dense solving");

    Matrix m = constraint_matrix(p, space);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(space.dim(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<PairElement> out;
    for (std::size_t free = 0; free < space.dim(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(space.dim(), Scalar::zero(FieldMode::Exact));
        v[free] = Scalar::one(FieldMode::Exact);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        PairElement e{Poly::zero(p.arity(), p.mode), Poly::zero(p.arity(), p.mode)};
        for (std::size_t i = 0; i < space.amons.size(); ++i) e.a.add_term(space.amons[i], v[i]);
        for (std::size_t i = 0; i < space.bmons.size(); ++i)
            e.b.add_term(space.bmons[i], v[space.amons.size() + i]);
        out.push_back(std::move(e));
    }
    return out;
}

bool dims_match(const Problem& p, const BasisState& st, const DegreeBox& box) {
    if (p.mode != FieldMode::Exact) throw ProblemError("dims_match runs in exact mode only");
    const CoeffSpace space(p.arity(), box);
    if (space.dim() > 200) throw ProblemError("degree box too large for dense solving");

    Matrix constraints_m = constraint_matrix(p, space);
    const std::size_t brute_dim = space.dim() - rank(constraints_m);

    Matrix multiples;
    for (const auto& g : st.basis) {
        const int da = g.a.total_deg();
        const int db = g.b.total_deg();
        int room = std::numeric_limits<int>::max();
        if (da >= 0) room = std::min(room, static_cast<int>(box.max_deg_a) - da);
        if (db >= 0) room = std::min(room, static_cast<int>(box.max_deg_b) - db);
        if (room < 0) continue;
        for (const auto& u : monomials_up_to(p.arity(), static_cast<std::uint32_t>(room))) {
            Poly up(p.arity(), p.mode);
            up.add_term(u, Scalar::one(p.mode));
            std::vector<Scalar> v;
            if (!space.to_vector(g.times(up), v)) return false;
            // the multiple must itself satisfy every constraint
            for (const auto& row : constraints_m) {
                Scalar dot = Scalar::zero(FieldMode::Exact);
                for (std::size_t j = 0; j < v.size(); ++j) dot = dot + row[j] * v[j];
                if (!dot.is_zero()) return false;
            }
            multiples.push_back(std::move(v));
        }
    }
    return rank(std::move(multiples)) == brute_dim;
}

}  // namespace ratint
