#ifndef RATINT_NEVILLE_HPP
#define RATINT_NEVILLE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ratint/pairmod.hpp"
#include "ratint/problem.hpp"

namespace ratint {

struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row of the W matrix: the residues (b*h_j - a)|_{Y_j} for every node,
/// the evaluation pair (a(Y0), b(Y0)), and the leading term of the basis
/// element the row stands for.
struct WRow {
    std::vector<Scalar> residues;
    Scalar a0;
    Scalar b0;
    ModTerm lt;

    double residue_scale() const;  // max |residues|, float mode
};

struct NevilleState {
    std::vector<WRow> rows;  // sorted ascending by lt, pairwise non-divisible
    std::size_t k = 0;       // points consumed
    std::vector<Point> points;
    std::vector<Scalar> values;
    Point y0;
    OrderXi ord;
    FieldMode mode = FieldMode::Float64;
    ZeroTest zt;
    int conditioning_warnings = 0;
};

/// Rows for the basis {(1,0),(0,1)}: residues (-1,...,-1) and (f_1,...,f_L),
/// evaluation pairs (1,0) and (0,1). Simple (value-only) data: h_j = f_j.
NevilleState init_state(std::vector<Point> points, std::vector<Scalar> values, Point y0,
                        const OrderXi& ord, FieldMode mode, const ZeroTest& zt = {});

/// Consumes point k+1: eliminate below the pivot row across all residue
/// columns and the evaluation pair, spawn one replacement row per variable,
/// drop the pivot, prune by leading-term divisibility, re-sort.
void step(NevilleState& st);

struct Estimate {
    struct RowEval {
        Scalar a;
        Scalar b;
        std::optional<Scalar> ratio;  // present when b passes the nonzero test
    };
    Scalar value;
    std::vector<RowEval> per_row;
};

/// Sign-weighted combination of the evaluation pairs over all current rows:
/// sum s_i*a_i / sum s_i*b_i with s_i = +1 iff b_i > 0, else -1 (rows with a
/// vanishing denominator evaluation subtract their numerator). Throws
/// DegenerateDenominator when the summed denominator fails the nonzero test.
Estimate estimate(const NevilleState& st);

using NevilleObserver = std::function<void(const NevilleState&)>;

/// init_state + L steps, returning the estimate after each step.
std::vector<Estimate> run(std::vector<Point> points, std::vector<Scalar> values, Point y0,
                          const OrderXi& ord, FieldMode mode, const ZeroTest& zt = {},
                          const NevilleObserver& observe = {});

/// Problem-level entry: requires simple data at every node.
NevilleState init_state(const Problem& p, const Point& y0, const ZeroTest& zt = {});

}  // namespace ratint

#endif
