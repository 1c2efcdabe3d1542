#ifndef RATINT_PAIRMOD_HPP
#define RATINT_PAIRMOD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ratint/poly.hpp"

namespace ratint {

enum class Component : std::uint8_t { First = 0, Second = 1 };

/// A term of the rank-2 free module: monomial times a component basis vector.
struct ModTerm {
    Monomial mono;
    Component comp;

    bool operator==(const ModTerm& o) const { return comp == o.comp && mono == o.mono; }
};

/// Parameters of the module term order: the degree shift xi between
/// components, and the lex variable order. `varorder` lists variable indices
/// ascending — varorder.front() is the lex-smallest variable.
struct OrderXi {
    int xi = 0;
    std::vector<std::size_t> varorder;

    static OrderXi with_arity(std::size_t n, int xi = 0) {
        OrderXi o;
        o.xi = xi;
        for (std::size_t i = 0; i < n; ++i) o.varorder.push_back(i);
        return o;
    }
};

enum class Ordering : int { Less = -1, Equal = 0, Greater = 1 };

/// Graded lex within one component: total degree first, then lex with the
/// varorder's last entry most significant.
Ordering cmp_mono_graded(const Monomial& a, const Monomial& b, const OrderXi& ord);

/// The module order: within a component, graded lex; across components,
/// X^a*e1 precedes X^b*e2 iff |a| <= |b| + xi.
Ordering cmp_modterm(const ModTerm& s, const ModTerm& t, const OrderXi& ord);

inline bool modterm_less(const ModTerm& s, const ModTerm& t, const OrderXi& ord) {
    return cmp_modterm(s, t, ord) == Ordering::Less;
}

/// Same component and componentwise divisibility of the monomials.
bool modterm_divides(const ModTerm& s, const ModTerm& t);

/// An element (a, b) of P^2.
struct PairElement {
    Poly a;
    Poly b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    PairElement operator+(const PairElement& o) const { return {a + o.a, b + o.b}; }
    PairElement operator-(const PairElement& o) const { return {a - o.a, b - o.b}; }
    PairElement scaled(const Scalar& c) const { return {a.scaled(c), b.scaled(c)}; }
    /// Componentwise product with a polynomial.
    PairElement times(const Poly& p) const { return {a * p, b * p}; }

    bool operator==(const PairElement& o) const { return a == o.a && b == o.b; }
};

/// Leading term and coefficient of a nonzero element under ord.
std::pair<ModTerm, Scalar> leading(const PairElement& e, const OrderXi& ord);

/// Sorts ascending by leading term and drops every element whose LT is
/// divisible by a distinct retained element's LT; among equal LTs the
/// earliest in the input survives. Leading coefficients are not rescaled.
std::vector<PairElement> minimalize(std::vector<PairElement> basis, const OrderXi& ord);

std::string modterm_str(const ModTerm& t, const std::vector<std::string>& varnames);

}  // namespace ratint

#endif
