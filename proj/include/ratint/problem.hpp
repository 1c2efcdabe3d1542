#ifndef RATINT_PROBLEM_HPP
#define RATINT_PROBLEM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratint/pairmod.hpp"
#include "ratint/poly.hpp"

namespace ratint {

struct ProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite subset of N^n closed under the componentwise division order.
struct LowerSet {
    std::vector<Monomial> elems;  // kept in storage order, no duplicates

    std::size_t size() const { return elems.size(); }
    bool contains(const Monomial& m) const;
};

bool is_lower_set(const std::vector<Monomial>& elems);

/// An interpolation node: point, derivative multiplicity as a lower set, and
/// the prescribed normalized derivative value for each of its elements.
struct Node {
    Point point;
    LowerSet mult;
    std::map<Monomial, Scalar> data;
};

struct Problem {
    std::vector<std::string> varnames;
    FieldMode mode = FieldMode::Exact;
    std::vector<Node> nodes;
    OrderXi ord;
    std::optional<Point> evaluate_at;

    std::size_t arity() const { return varnames.size(); }
    std::size_t constraint_count() const;
    bool is_cauchy() const;  // every node carries value-only data

    /// Checks arities, distinct points, lower-set closure, data/mult
    /// agreement, and the varorder permutation. Throws ProblemError.
    void validate() const;
};

/// One congruence: the alpha freshly appended at node_index, together with
/// the lower-set prefix it completes.
struct Constraint {
    std::size_t node_index;  // 0-based
    Monomial alpha;
    LowerSet prefix;
};

/// Enumeration order for a node's lower set: total degree ascending, ties by
/// lex with dominance reversed from the module order (so with y < x the
/// x-derivative precedes the y-derivative). Every prefix is a lower set.
std::vector<Monomial> chain(const LowerSet& A, const OrderXi& ord);

/// h_i = sum over alpha in the lower set of f^(alpha) * (X - Y_i)^alpha,
/// expanded. Its Taylor coefficients at Y_i reproduce the node data.
Poly build_h(const Node& node, std::size_t arity, FieldMode mode);

/// All N constraints: nodes in input order, each node's alphas in chain
/// order. Establishes the k <-> (i, j) correspondence.
std::vector<Constraint> constraints(const Problem& p);

}  // namespace ratint

#endif
