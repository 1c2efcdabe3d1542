#include "ratint/problem.hpp"

#include <algorithm>
#include <set>

namespace ratint {

bool LowerSet::contains(const Monomial& m) const {
    return std::find(elems.begin(), elems.end(), m) != elems.end();
}

bool is_lower_set(const std::vector<Monomial>& elems) {
    if (elems.empty()) return true;
    const std::size_t n = elems[0].arity();
    std::set<std::vector<std::uint32_t>> have;
    for (const auto& m : elems) {
        if (m.arity() != n) return false;
        have.insert(m.exps());
    }
    // closure under decrementing any single coordinate
    for (const auto& m : elems) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            auto below = m.exps();
            --below[i];
            if (!have.count(below)) return false;
        }
    }
    return true;
}

std::size_t Problem::constraint_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes) n += node.mult.size();
    return n;
}

bool Problem::is_cauchy() const {
    for (const auto& node : nodes)
        if (node.mult.size() != 1 || !node.mult.elems[0].is_constant()) return false;
    return true;
}

void Problem::validate() const {
    if (varnames.empty()) throw ProblemError("no variables declared");
    const std::size_t n = arity();
    if (ord.varorder.size() != n) throw ProblemError("varorder length mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t v : ord.varorder) {
        if (v >= n || seen[v]) throw ProblemError("varorder is not a permutation");
        seen[v] = true;
    }
    for (const auto& node : nodes) {
        if (node.point.size() != n) throw ProblemError("node point arity mismatch");
        for (const auto& c : node.point)
            if (c.mode() != mode) throw ProblemError("node coordinate mode mismatch");
        if (node.mult.elems.empty()) throw ProblemError("node with empty lower set");
        if (!is_lower_set(node.mult.elems)) {
            std::string alphas;
            for (const auto& m : node.mult.elems) {
                alphas += " (";
                for (std::size_t i = 0; i < m.arity(); ++i)
                    alphas += (i ? "," : "") + std::to_string(m[i]);
                alphas += ")";
            }
            throw ProblemError("multiplicity set is not a lower set:" + alphas);
        }
        if (node.data.size() != node.mult.size()) throw ProblemError("data/multiplicity size mismatch");
        for (const auto& m : node.mult.elems) {
            if (m.arity() != n) throw ProblemError("alpha arity mismatch");
            auto it = node.data.find(m);
            if (it == node.data.end())
                throw ProblemError("missing data value for a multiplicity alpha");
            if (it->second.mode() != mode) throw ProblemError("node value mode mismatch");
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            bool equal = true;
            for (std::size_t c = 0; c < n; ++c)
                if (!(nodes[i].point[c] == nodes[j].point[c])) {
                    equal = false;
                    break;
                }
            if (equal)
                throw ProblemError("duplicate interpolation points (multiplicity must use lower sets)");
        }
    if (evaluate_at) {
        if (evaluate_at->size() != n) throw ProblemError("evaluate_at arity mismatch");
        for (const auto& c : *evaluate_at)
            if (c.mode() != mode) throw ProblemError("evaluate_at coordinate mode mismatch");
    }
}

std::vector<Monomial> chain(const LowerSet& A, const OrderXi& ord) {
    if (!is_lower_set(A.elems)) throw ProblemError("chain() requires a lower set");
    std::vector<Monomial> out = A.elems;
    // degree ascending; ties by lex with dominance reversed from the module
    // order, so the earliest varorder entry is most significant here
    std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (std::size_t v : ord.varorder)
            if (a[v] != b[v]) return a[v] < b[v];
        return false;
    });
    return out;
}

Poly build_h(const Node& node, std::size_t arity, FieldMode mode) {
    Poly h(arity, mode);
    for (const auto& m : node.mult.elems) {
        Poly t = Poly::constant(arity, node.data.at(m));
        for (std::size_t i = 0; i < arity; ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e)
                t = t * Poly::linear(arity, i, -node.point[i]);
        h = h + t;
    }
    return h;
}

std::vector<Constraint> constraints(const Problem& p) {
    std::vector<Constraint> out;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        LowerSet prefix;
        for (const auto& alpha : chain(p.nodes[i].mult, p.ord)) {
            prefix.elems.push_back(alpha);
            out.push_back({i, alpha, prefix});
        }
    }
    return out;
}

}  // namespace ratint
