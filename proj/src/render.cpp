#include "ratint/render.hpp"

#include <sstream>

#include <json.hpp>

#include "ratint/json_io.hpp"

namespace ratint {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ProblemError("unknown format '" + name + "' (expected text, json, or csv)");
}

namespace {

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
    return s + ")";
}

PairElement display_element(const PairElement& e, const OrderXi& ord, bool monic) {
    if (!monic || e.is_zero()) return e;
    Scalar lc = leading(e, ord).second;
    return e.scaled(Scalar::one(lc.mode()) / lc);
}

}  // namespace

std::string render_solve(const Problem& p, const BasisState& st,
                         const std::optional<Representative>& rep, OutputFormat fmt, bool monic) {
    if (fmt == OutputFormat::Csv) throw ProblemError("csv output is for eval; use text or json");

    std::vector<PairElement> shown;
    for (const auto& e : st.basis) shown.push_back(display_element(e, st.ord, monic));

    if (fmt == OutputFormat::Json) {
        json j;
        j["constraints"] = st.consumed;
        j["basis"] = json::array();
        for (std::size_t i = 0; i < shown.size(); ++i) {
            json e = pair_to_json(shown[i]);
            e["lt"] = modterm_str(leading(st.basis[i], st.ord).first, p.varnames);
            j["basis"].push_back(std::move(e));
        }
        if (rep) {
            json r = pair_to_json(display_element(rep->pair, st.ord, monic));
            r["combo"] = rep->combo;
            j["representative"] = std::move(r);
        } else {
            j["representative"] = nullptr;
        }
        j["conditioning_warnings"] = st.conditioning_warnings;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "minimal Groebner basis after " << st.consumed << " constraints (" << shown.size()
        << " elements, ascending by leading term):\n";
    for (std::size_t i = 0; i < shown.size(); ++i) {
        out << "  [" << i + 1 << "] LT = " << modterm_str(leading(st.basis[i], st.ord).first, p.varnames)
            << "\n"
            << "      a = " << shown[i].a.str(p.varnames) << "\n"
            << "      b = " << shown[i].b.str(p.varnames) << "\n";
    }
    out << "every weak interpolation has the form c_1*(a_1,b_1) + ... + c_" << shown.size() << "*(a_"
        << shown.size() << ",b_" << shown.size() << ") with polynomial coefficients c_j\n";
    if (rep) {
        PairElement r = display_element(rep->pair, st.ord, monic);
        out << "representative (denominator nonzero at every node";
        if (p.evaluate_at) out << " and the query point";
        out << "):\n";
        out << "  from basis element(s):";
        for (std::size_t i : rep->combo) out << " [" << i + 1 << "]";
        out << "\n  a = " << r.a.str(p.varnames) << "\n  b = " << r.b.str(p.varnames) << "\n";
    } else {
        out << "no representative found among single elements and pairwise sums; "
               "the parametric family above stands\n";
    }
    if (st.conditioning_warnings > 0)
        out << "conditioning warnings: " << st.conditioning_warnings << "\n";
    return out.str();
}

std::string render_eval(const Problem& p, const Point& y0, const std::vector<EvalRow>& rows,
                        const Scalar& final_value, OutputFormat fmt) {
    (void)p;
    if (fmt == OutputFormat::Csv) {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << r.index;
            for (const auto& c : r.point) out << "," << c.str();
            out << "," << r.value.str() << "," << r.estimate.str() << "\n";
        }
        return out.str();
    }
    if (fmt == OutputFormat::Json) {
        json j;
        j["steps"] = json::array();
        for (const auto& r : rows) {
            json s;
            s["index"] = r.index;
            s["point"] = json::array();
            for (const auto& c : r.point) s["point"].push_back(c.str());
            s["value"] = r.value.str();
            s["estimate"] = r.estimate.str();
            j["steps"].push_back(std::move(s));
        }
        j["final"] = final_value.str();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "  i  point / data value -> running estimate\n";
    for (const auto& r : rows) {
        out << "  " << r.index << "  " << point_str(r.point) << "  " << r.value.str() << "  ->  "
            << r.estimate.str() << "\n";
    }
    out << "final estimate at " << point_str(y0) << ": " << final_value.str() << "\n";
    return out.str();
}

}  // namespace ratint
