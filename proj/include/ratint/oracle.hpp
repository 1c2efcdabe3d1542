#ifndef RATINT_ORACLE_HPP
#define RATINT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ratint/fitzpatrick.hpp"
#include "ratint/problem.hpp"

namespace ratint {

/// Degree bounds for the brute-force coefficient space. Kept small enough
/// for dense exact elimination.
struct DegreeBox {
    std::uint32_t max_deg_a = 0;
    std::uint32_t max_deg_b = 0;
};

/// All monomials of arity n with total degree <= d, in storage order.
std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t d);

/// Solves the interpolation conditions as a dense homogeneous linear system
/// over the unknown coefficients of (a, b) inside the box, by exact Gaussian
/// elimination. Returns a linear basis of the solution space. Exact mode
/// only; throws ProblemError on float mode or boxes past 200 unknowns.
std::vector<PairElement> brute_solutions(const Problem& p, const DegreeBox& box);

/// True iff the span of the monomial multiples of st.basis inside the box
/// has the same dimension as the brute-force solution space, and every such
/// multiple satisfies the constraint system.
bool dims_match(const Problem& p, const BasisState& st, const DegreeBox& box);

}  // namespace ratint

#endif
