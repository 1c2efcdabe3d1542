#ifndef RATINT_JSON_IO_HPP
#define RATINT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ratint/problem.hpp"

namespace ratint {

/// Problem file schema:
/// {
///   "variables": ["x","y"],
///   "field": "rational" | "float64",
///   "xi": 0,
///   "varorder": ["y","x"],              // ascending: first entry is lex-smallest; optional
///   "nodes": [
///     { "point": ["-1","2"],
///       "data": [ { "alpha": [0,0], "value": "2" }, ... ] },
///     ...
///   ],
///   "evaluate_at": ["2","2"]            // optional
/// }
/// Numeric literals are strings parsed per field mode ("3/4" allowed in
/// rational mode).
Problem problem_from_json(const nlohmann::json& j);
Problem problem_from_file(const std::string& path);
nlohmann::json problem_to_json(const Problem& p);

/// Pair file schema: { "a": [ { "alpha": [...], "coef": "..." } ], "b": [...] }
PairElement pair_from_json(const nlohmann::json& j, std::size_t arity, FieldMode mode);
PairElement pair_from_file(const std::string& path, std::size_t arity, FieldMode mode);
nlohmann::json pair_to_json(const PairElement& e);

}  // namespace ratint

#endif
