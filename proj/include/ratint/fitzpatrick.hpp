#ifndef RATINT_FITZPATRICK_HPP
#define RATINT_FITZPATRICK_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ratint/problem.hpp"

namespace ratint {

/// Minimal Groebner basis of the module of weak interpolations for the
/// constraints consumed so far, kept sorted ascending by leading term with
/// pairwise non-divisible leading terms.
struct BasisState {
    std::vector<PairElement> basis;
    std::size_t consumed = 0;
    OrderXi ord;
    FieldMode mode = FieldMode::Exact;
    ZeroTest zt;
    int conditioning_warnings = 0;
};

/// {(1,0), (0,1)} — the basis before any constraint.
BasisState initial_state(const Problem& p, const ZeroTest& zt = {});

/// nu = taylor coefficient of b*h - a at the node's point, order c.alpha.
/// For elements satisfying the constraints before c this is exactly the
/// congruence residue.
Scalar residue(const PairElement& e, const Node& node, const Constraint& c, const Poly& h);

/// One incremental step: eliminate against the least-leading-term element
/// with nonvanishing residue, spawn its n variable multiples, minimalize.
void update_basis(BasisState& st, const Node& node, const Constraint& c, const Poly& h);

using StepObserver = std::function<void(const BasisState&, const Constraint&)>;

/// Folds update_basis over constraints(p) starting from {(1,0),(0,1)}.
BasisState solve(const Problem& p, const ZeroTest& zt = {}, const StepObserver& observe = {});

/// True iff every prescribed Taylor coefficient of b*h_i - a vanishes at
/// every node (per the mode's zero test).
bool verify_weak(const PairElement& e, const Problem& p, const ZeroTest& zt = {});

struct Representative {
    PairElement pair;
    std::vector<std::size_t> combo;  // basis indices summed (size 1 or 2)
};

/// First basis element (ascending by LT) whose b avoids zero at every node
/// (and at y0 if given); failing that, the first pairwise sum that does.
/// nullopt when the search is exhausted — the parametric family stands.
std::optional<Representative> pick_representative(const BasisState& st, const Problem& p,
                                                  const std::optional<Point>& y0);

}  // namespace ratint

#endif
