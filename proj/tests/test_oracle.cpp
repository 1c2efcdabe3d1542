#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "reference_data.hpp"
#include "ratint/oracle.hpp"

using namespace ratint;
using namespace ratint::testing;

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(2, 0).size() == 1);
    CHECK(monomials_up_to(2, 1).size() == 3);
    CHECK(monomials_up_to(2, 4).size() == 15);
    CHECK(monomials_up_to(1, 3).size() == 4);
}

TEST_CASE("empty problem spans the whole coefficient box") {
    Problem p;
    p.varnames = {"x", "y"};
    p.mode = FieldMode::Exact;
    p.ord = order_y_before_x();
    auto sols = brute_solutions(p, {1, 1});
    CHECK(sols.size() == 6);  // 3 monomials for a + 3 for b
}

TEST_CASE("single node cuts one dimension") {
    Problem p;
    p.varnames = {"x", "y"};
    p.mode = FieldMode::Exact;
    p.ord = order_y_before_x();
    Node n;
    n.point = pt({"0", "0"});
    n.mult.elems = {Monomial{0, 0}};
    n.data.emplace(Monomial{0, 0}, q(5));
    p.nodes.push_back(n);
    p.validate();

    auto sols = brute_solutions(p, {1, 0});  // unknowns: 3 for a, 1 for b
    CHECK(sols.size() == 3);
    for (const auto& e : sols) CHECK(verify_weak(e, p));
    // the expected spanning elements are all weak interpolations
    CHECK(verify_weak({Poly::constant(2, q(5)), Poly::constant(2, q(1))}, p));
    CHECK(verify_weak({Poly::var(2, 0, p.mode), Poly::zero(2, p.mode)}, p));
    CHECK(verify_weak({Poly::var(2, 1, p.mode), Poly::zero(2, p.mode)}, p));
}

TEST_CASE("four-node problem: basis multiples fill the brute space") {
    Problem p = four_node_problem();
    BasisState st = solve(p);
    CHECK(dims_match(p, st, {3, 2}));
    CHECK(dims_match(p, st, {4, 4}));

    // negative control: perturbing one coefficient breaks the match
    BasisState broken = st;
    PairElement& e = broken.basis[0];
    e.a.add_term(Monomial{0, 0}, q(1, 7));
    CHECK_FALSE(dims_match(p, broken, {3, 2}));
}

TEST_CASE("brute solutions always verify weakly") {
    std::mt19937 rng(67);
    for (int i = 0; i < 20; ++i) {
        Problem p = rand_problem(rng, 3);
        for (const auto& e : brute_solutions(p, {3, 3}))
            CHECK(verify_weak(e, p));
    }
}

TEST_CASE("solution dimension never grows as constraints accumulate") {
    std::mt19937 rng(71);
    for (int i = 0; i < 10; ++i) {
        Problem p = rand_problem(rng, 4);
        DegreeBox box{4, 4};
        std::size_t prev = brute_solutions(Problem{p.varnames, p.mode, {}, p.ord, {}}, box).size();
        Problem partial{p.varnames, p.mode, {}, p.ord, {}};
        for (const auto& node : p.nodes) {
            partial.nodes.push_back(node);
            std::size_t dim = brute_solutions(partial, box).size();
            CHECK(dim <= prev);
            prev = dim;
        }
    }
}

TEST_CASE("random problems: oracle dimension equals basis-multiple span") {
    std::mt19937 rng(73);
    for (int i = 0; i < 40; ++i) {
        Problem p = rand_problem(rng, 4);
        BasisState st = solve(p);
        CHECK(dims_match(p, st, {4, 4}));
    }
}

TEST_CASE("guards") {
    Problem p;
    p.varnames = {"x", "y"};
    p.mode = FieldMode::Float64;
    p.ord = order_y_before_x();
    CHECK_THROWS_AS(brute_solutions(p, {1, 1}), ProblemError);

    Problem big;
    big.varnames = {"x", "y"};
    big.mode = FieldMode::Exact;
    big.ord = order_y_before_x();
    CHECK_THROWS_AS(brute_solutions(big, {20, 20}), ProblemError);
}
