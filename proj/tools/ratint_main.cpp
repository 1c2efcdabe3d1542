#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratint/fitzpatrick.hpp"
#include "ratint/json_io.hpp"
#include "ratint/neville.hpp"
#include "ratint/render.hpp"

namespace {

using namespace ratint;

struct CommonOpts {
    std::string input;
    std::string format = "text";
    std::optional<int> xi;
    std::optional<std::string> varorder;  // comma list, ascending (first = lex-smallest)
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "problem file (JSON)")->required();
    cmd->add_option("--format", o.format, "output format: text|json|csv");
    cmd->add_option("--xi", o.xi, "override the order parameter xi");
    cmd->add_option("--varorder", o.varorder,
                    "comma-separated variables, ascending (first = lex-smallest)");
    cmd->add_option("--abs-tol", o.abs_tol, "float-mode absolute zero threshold");
    cmd->add_option("--rel-tol", o.rel_tol, "float-mode relative zero threshold");
}

Problem load_problem(const CommonOpts& o) {
    Problem p = problem_from_file(o.input);
    if (o.xi) p.ord.xi = *o.xi;  // flag wins over the file
    if (o.varorder) {
        std::vector<std::size_t> order;
        std::stringstream ss(*o.varorder);
        std::string name;
        while (std::getline(ss, name, ',')) {
            auto it = std::find(p.varnames.begin(), p.varnames.end(), name);
            if (it == p.varnames.end()) throw ProblemError("--varorder names unknown variable '" + name + "'");
            order.push_back(static_cast<std::size_t>(it - p.varnames.begin()));
        }
        p.ord.varorder = std::move(order);
        p.validate();
    }
    return p;
}

ZeroTest make_zt(const CommonOpts& o) {
    ZeroTest zt;
    if (o.abs_tol) zt.abs_tol = *o.abs_tol;
    if (o.rel_tol) zt.rel_tol = *o.rel_tol;
    return zt;
}

Point parse_at(const std::string& at, const Problem& p) {
    Point y0;
    std::stringstream ss(at);
    std::string coord;
    while (std::getline(ss, coord, ',')) y0.push_back(Scalar::parse(coord, p.mode));
    if (y0.size() != p.arity()) throw ProblemError("--at needs one coordinate per variable");
    return y0;
}

int run_solve(const CommonOpts& o, bool monic) {
    Problem p = load_problem(o);
    ZeroTest zt = make_zt(o);
    BasisState st = solve(p, zt);
    auto rep = pick_representative(st, p, p.evaluate_at);
    std::cout << render_solve(p, st, rep, parse_format(o.format), monic);
    if (st.conditioning_warnings > 0)
        std::cerr << "warning: " << st.conditioning_warnings
                  << " residue(s) were close to the zero threshold\n";
    return rep ? 0 : 2;
}

int run_eval(const CommonOpts& o, const std::string& at) {
    Problem p = load_problem(o);
    ZeroTest zt = make_zt(o);
    Point y0;
    if (!at.empty())
        y0 = parse_at(at, p);
    else if (p.evaluate_at)
        y0 = *p.evaluate_at;
    else
        throw ProblemError("eval needs \"evaluate_at\" in the problem file or --at");

    NevilleState st = init_state(p, y0, zt);
    std::vector<EvalRow> rows;
    Scalar final_value = Scalar::zero(p.mode);
    const std::size_t L = st.points.size();
    for (std::size_t k = 0; k < L; ++k) {
        step(st);
        Estimate est = estimate(st);
        rows.push_back({k + 1, st.points[k], st.values[k], est.value});
        final_value = est.value;
    }
    std::cout << render_eval(p, y0, rows, final_value, parse_format(o.format));
    if (st.conditioning_warnings > 0)
        std::cerr << "warning: " << st.conditioning_warnings
                  << " residue(s) were close to the zero threshold\n";
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& pair_path) {
    Problem p = load_problem(o);
    ZeroTest zt = make_zt(o);
    PairElement e = pair_from_file(pair_path, p.arity(), p.mode);
    bool ok = verify_weak(e, p, zt);
    std::cout << (ok ? "weak interpolation: true\n" : "weak interpolation: false\n");
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multivariate osculatory rational interpolation "
                 "(module Groebner bases + Neville-like evaluation)"};
    app.require_subcommand(1);

    CommonOpts solve_opts, eval_opts, verify_opts;
    bool monic = false;
    std::string at, pair_path;

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute the weak-interpolation basis");
    add_common(solve_cmd, solve_opts);
    solve_cmd->add_flag("--monic", monic, "rescale displayed elements by their leading coefficient");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the interpolant at a point");
    add_common(eval_cmd, eval_opts);
    eval_cmd->add_option("--at", at, "query point, comma-separated coordinates");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a pair against the problem");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--pair", pair_path, "pair file (JSON with \"a\" and \"b\" term lists)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts, monic);
        if (eval_cmd->parsed()) return run_eval(eval_opts, at);
        return run_verify(verify_opts, pair_path);
    } catch (const DegenerateDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
