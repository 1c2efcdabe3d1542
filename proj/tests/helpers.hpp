#ifndef RATINT_TESTS_HELPERS_HPP
#define RATINT_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ratint/fitzpatrick.hpp"
#include "ratint/problem.hpp"

namespace ratint::testing {

inline Scalar q(const std::string& s) { return Scalar::parse(s, FieldMode::Exact); }
inline Scalar q(long n, long d = 1) { return Scalar::exact(n, d); }

struct Term {
    std::uint32_t ex;
    std::uint32_t ey;
    const char* coef;
};

inline Poly poly2(std::initializer_list<Term> terms, FieldMode mode = FieldMode::Exact) {
    Poly p(2, mode);
    for (const auto& t : terms) p.add_term(Monomial{t.ex, t.ey}, Scalar::parse(t.coef, mode));
    return p;
}

inline Poly poly1(std::initializer_list<std::pair<std::uint32_t, const char*>> terms,
                  FieldMode mode = FieldMode::Exact) {
    Poly p(1, mode);
    for (const auto& [e, c] : terms) p.add_term(Monomial{e}, Scalar::parse(c, mode));
    return p;
}

inline Point pt(std::initializer_list<const char*> coords, FieldMode mode = FieldMode::Exact) {
    Point y;
    for (const char* c : coords) y.push_back(Scalar::parse(c, mode));
    return y;
}

/// e1 == lambda * e2 for one nonzero scalar lambda (exact mode).
inline bool scalar_equivalent(const PairElement& e1, const PairElement& e2) {
    if (e1.a.terms().size() != e2.a.terms().size() || e1.b.terms().size() != e2.b.terms().size())
        return false;
    bool have = false;
    Scalar lambda = Scalar::exact(0);
    auto component = [&](const Poly& p1, const Poly& p2) {
        for (const auto& [m, c1] : p1.terms()) {
            Scalar c2 = p2.coeff(m);
            if (c2.is_zero()) return false;
            Scalar r = c1 / c2;
            if (!have) {
                lambda = r;
                have = true;
            } else if (!(lambda == r)) {
                return false;
            }
        }
        return true;
    };
    return component(e1.a, e2.a) && component(e1.b, e2.b) && have && !lambda.is_zero();
}

inline Monomial rand_mono(std::mt19937& rng, std::size_t arity, std::uint32_t max_deg) {
    std::uniform_int_distribution<std::uint32_t> d(0, max_deg);
    std::vector<std::uint32_t> e(arity);
    for (auto& x : e) x = d(rng);
    return Monomial(std::move(e));
}

inline Scalar rand_rat(std::mt19937& rng, long num_range = 5, long den_max = 3) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_max);
    return Scalar::exact(num(rng), den(rng));
}

inline Scalar rand_rat_nonzero(std::mt19937& rng, long num_range = 5, long den_max = 3) {
    for (;;) {
        Scalar s = rand_rat(rng, num_range, den_max);
        if (!s.is_zero()) return s;
    }
}

inline Poly rand_poly(std::mt19937& rng, std::size_t arity, std::uint32_t max_deg,
                      std::size_t max_terms, FieldMode mode = FieldMode::Exact) {
    Poly p(arity, mode);
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    const std::size_t n = nterms(rng);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar c = rand_rat(rng);
        if (mode == FieldMode::Float64) c = Scalar::fp(c.to_double());
        Monomial m = rand_mono(rng, arity, max_deg);
        if (m.deg() > max_deg) continue;
        p.add_term(m, c);
    }
    return p;
}

inline std::vector<LowerSet> lower_set_catalog_2d() {
    auto ls = [](std::initializer_list<Monomial> ms) {
        LowerSet s;
        for (const auto& m : ms) s.elems.push_back(m);
        return s;
    };
    return {
        ls({Monomial{0, 0}}),
        ls({Monomial{0, 0}, Monomial{1, 0}}),
        ls({Monomial{0, 0}, Monomial{0, 1}}),
        ls({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}}),
        ls({Monomial{0, 0}, Monomial{1, 0}, Monomial{2, 0}}),
        ls({Monomial{0, 0}, Monomial{0, 1}, Monomial{0, 2}}),
    };
}

/// Random exact 2-variable osculatory problem with distinct small points.
inline Problem rand_problem(std::mt19937& rng, std::size_t max_nodes = 4,
                            bool cauchy_only = false, std::size_t min_nodes = 1) {
    Problem p;
    p.varnames = {"x", "y"};
    p.mode = FieldMode::Exact;
    p.ord.xi = 0;
    p.ord.varorder = {1, 0};  // y < x
    std::uniform_int_distribution<std::size_t> nnodes(min_nodes, max_nodes);
    auto catalog = lower_set_catalog_2d();
    std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
    std::uniform_int_distribution<long> coord(-3, 3);
    const std::size_t L = nnodes(rng);
    std::vector<std::pair<long, long>> used;
    for (std::size_t i = 0; i < L; ++i) {
        std::pair<long, long> c;
        do {
            c = {coord(rng), coord(rng)};
        } while (std::find(used.begin(), used.end(), c) != used.end());
        used.push_back(c);
        Node node;
        node.point = {Scalar::exact(c.first), Scalar::exact(c.second)};
        node.mult = cauchy_only ? catalog[0] : catalog[pick(rng)];
        for (const auto& alpha : node.mult.elems) node.data.emplace(alpha, rand_rat(rng));
        p.nodes.push_back(std::move(node));
    }
    p.validate();
    return p;
}

inline Problem to_float(const Problem& exact) {
    Problem p;
    p.varnames = exact.varnames;
    p.mode = FieldMode::Float64;
    p.ord = exact.ord;
    for (const auto& node : exact.nodes) {
        Node fn;
        for (const auto& c : node.point) fn.point.push_back(Scalar::fp(c.to_double()));
        fn.mult = node.mult;
        for (const auto& [m, v] : node.data) fn.data.emplace(m, Scalar::fp(v.to_double()));
        p.nodes.push_back(std::move(fn));
    }
    if (exact.evaluate_at) {
        Point y;
        for (const auto& c : *exact.evaluate_at) y.push_back(Scalar::fp(c.to_double()));
        p.evaluate_at = y;
    }
    return p;
}

}  // namespace ratint::testing

#endif
