#ifndef RATINT_RENDER_HPP
#define RATINT_RENDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratint/fitzpatrick.hpp"
#include "ratint/neville.hpp"

namespace ratint {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);  // throws ProblemError

/// solve output: basis sorted ascending by LT, the parametric family, and
/// the representative when one exists. `monic` rescales elements by their
/// leading coefficient for display only.
std::string render_solve(const Problem& p, const BasisState& st,
                         const std::optional<Representative>& rep, OutputFormat fmt,
                         bool monic);

/// eval output: one row per consumed point (index, point, data value,
/// running estimate) plus the final value. CSV is exactly L rows.
struct EvalRow {
    std::size_t index;  // 1-based
    Point point;
    Scalar value;
    Scalar estimate;
};

std::string render_eval(const Problem& p, const Point& y0, const std::vector<EvalRow>& rows,
                        const Scalar& final_value, OutputFormat fmt);

}  // namespace ratint

#endif
