#include "ratint/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace ratint {

using nlohmann::json;

namespace {

FieldMode parse_field(const std::string& s) {
    if (s == "rational") return FieldMode::Exact;
    if (s == "float64") return FieldMode::Float64;
    throw ProblemError("unknown field '" + s + "' (expected \"rational\" or \"float64\")");
}

Monomial parse_alpha(const json& j, std::size_t arity) {
    if (!j.is_array() || j.size() != arity) throw ProblemError("alpha must be an array of length n");
    std::vector<std::uint32_t> e;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0)
            throw ProblemError("alpha entries must be nonnegative integers");
        e.push_back(static_cast<std::uint32_t>(v.get<long>()));
    }
    return Monomial(std::move(e));
}

Point parse_point(const json& j, std::size_t arity, FieldMode mode, const char* what) {
    if (!j.is_array() || j.size() != arity)
        throw ProblemError(std::string(what) + " must be an array of n numeric strings");
    Point p;
    for (const auto& v : j) {
        if (!v.is_string()) throw ProblemError(std::string(what) + " entries must be strings");
        p.push_back(Scalar::parse(v.get<std::string>(), mode));
    }
    return p;
}

Poly parse_poly_terms(const json& j, std::size_t arity, FieldMode mode) {
    Poly p(arity, mode);
    if (!j.is_array()) throw ProblemError("polynomial must be an array of terms");
    for (const auto& t : j) {
        if (!t.contains("alpha") || !t.contains("coef"))
            throw ProblemError("polynomial term needs \"alpha\" and \"coef\"");
        p.add_term(parse_alpha(t.at("alpha"), arity),
                   Scalar::parse(t.at("coef").get<std::string>(), mode));
    }
    return p;
}

json poly_to_terms(const Poly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["alpha"] = m.exps();
        t["coef"] = c.str();
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Problem problem_from_json(const json& j) {
    Problem p;
    try {
        if (!j.contains("variables")) throw ProblemError("missing \"variables\"");
        for (const auto& v : j.at("variables")) p.varnames.push_back(v.get<std::string>());
        const std::size_t n = p.varnames.size();
        p.mode = parse_field(j.value("field", std::string("rational")));

        p.ord.xi = j.value("xi", 0);
        if (j.contains("varorder")) {
            for (const auto& v : j.at("varorder")) {
                const std::string name = v.get<std::string>();
                auto it = std::find(p.varnames.begin(), p.varnames.end(), name);
                if (it == p.varnames.end())
                    throw ProblemError("varorder names unknown variable '" + name + "'");
                p.ord.varorder.push_back(static_cast<std::size_t>(it - p.varnames.begin()));
            }
        } else {
            p.ord = OrderXi::with_arity(n, p.ord.xi);
        }

        if (!j.contains("nodes")) throw ProblemError("missing \"nodes\"");
        for (const auto& nj : j.at("nodes")) {
            Node node;
            node.point = parse_point(nj.at("point"), n, p.mode, "point");
            if (!nj.contains("data")) throw ProblemError("node missing \"data\"");
            for (const auto& dj : nj.at("data")) {
                Monomial alpha = parse_alpha(dj.at("alpha"), n);
                Scalar value = Scalar::parse(dj.at("value").get<std::string>(), p.mode);
                if (node.data.count(alpha)) throw ProblemError("duplicate alpha in node data");
                node.mult.elems.push_back(alpha);
                node.data.emplace(std::move(alpha), std::move(value));
            }
            p.nodes.push_back(std::move(node));
        }

        if (j.contains("evaluate_at"))
            p.evaluate_at = parse_point(j.at("evaluate_at"), n, p.mode, "evaluate_at");
    } catch (const json::exception& e) {
        throw ProblemError(std::string("malformed problem file: ") + e.what());
    }
    p.validate();
    return p;
}

Problem problem_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ProblemError(std::string("invalid JSON: ") + e.what());
    }
    return problem_from_json(j);
}

json problem_to_json(const Problem& p) {
    json j;
    j["variables"] = p.varnames;
    j["field"] = p.mode == FieldMode::Exact ? "rational" : "float64";
    j["xi"] = p.ord.xi;
    json vo = json::array();
    for (std::size_t v : p.ord.varorder) vo.push_back(p.varnames[v]);
    j["varorder"] = vo;
    j["nodes"] = json::array();
    for (const auto& node : p.nodes) {
        json nj;
        nj["point"] = json::array();
        for (const auto& c : node.point) nj["point"].push_back(c.str());
        nj["data"] = json::array();
        for (const auto& alpha : node.mult.elems) {
            json dj;
            dj["alpha"] = alpha.exps();
            dj["value"] = node.data.at(alpha).str();
            nj["data"].push_back(std::move(dj));
        }
        j["nodes"].push_back(std::move(nj));
    }
    if (p.evaluate_at) {
        json e = json::array();
        for (const auto& c : *p.evaluate_at) e.push_back(c.str());
        j["evaluate_at"] = e;
    }
    return j;
}

PairElement pair_from_json(const json& j, std::size_t arity, FieldMode mode) {
    try {
        return {parse_poly_terms(j.at("a"), arity, mode), parse_poly_terms(j.at("b"), arity, mode)};
    } catch (const json::exception& e) {
        throw ProblemError(std::string("malformed pair: ") + e.what());
    }
}

PairElement pair_from_file(const std::string& path, std::size_t arity, FieldMode mode) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ProblemError(std::string("invalid JSON: ") + e.what());
    }
    return pair_from_json(j, arity, mode);
}

json pair_to_json(const PairElement& e) {
    json j;
    j["a"] = poly_to_terms(e.a);
    j["b"] = poly_to_terms(e.b);
    return j;
}

}  // namespace ratint
