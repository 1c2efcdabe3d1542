#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "reference_data.hpp"
#include "ratint/json_io.hpp"
#include "ratint/problem.hpp"

using namespace ratint;
using namespace ratint::testing;

TEST_CASE("lower set recognition") {
    CHECK(is_lower_set({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}}));
    CHECK_FALSE(is_lower_set({Monomial{0, 0}, Monomial{1, 1}}));
    CHECK(is_lower_set({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 1}}));
    CHECK(is_lower_set({}));
    CHECK_FALSE(is_lower_set({Monomial{1, 0}}));
}

TEST_CASE("chain enumerates by degree with the value/x/y/xy reading order") {
    OrderXi ord = order_y_before_x();
    LowerSet single{{Monomial{0, 0}}};
    CHECK(chain(single, ord) == std::vector<Monomial>{Monomial{0, 0}});

    LowerSet full{{Monomial{1, 1}, Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}}};
    CHECK(chain(full, ord) ==
          std::vector<Monomial>{Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 1}});

    LowerSet bad{{Monomial{0, 0}, Monomial{2, 0}}};
    CHECK_THROWS_AS(chain(bad, ord), ProblemError);
}

TEST_CASE("every chain prefix is a lower set and divisors come first") {
    std::mt19937 rng(37);
    OrderXi ord = order_y_before_x();
    for (const auto& ls : lower_set_catalog_2d()) {
        auto seq = chain(ls, ord);
        std::vector<Monomial> prefix;
        for (const auto& alpha : seq) {
            prefix.push_back(alpha);
            CHECK(is_lower_set(prefix));
        }
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j) CHECK_FALSE(seq[j].divides(seq[i]));
    }
    (void)rng;
}

TEST_CASE("build_h reproduces the prescribed data") {
    Problem p = four_node_problem();
    // node (2,1): 4 + 5(x-2) + 2(y-1) = 5x + 2y - 8
    Poly h3 = build_h(p.nodes[2], 2, FieldMode::Exact);
    CHECK(h3 == poly2({{1, 0, "5"}, {0, 1, "2"}, {0, 0, "-8"}}));
    // node (-1,2): constant 2
    Poly h1 = build_h(p.nodes[0], 2, FieldMode::Exact);
    CHECK(h1 == poly2({{0, 0, "2"}}));

    for (const auto& node : p.nodes) {
        Poly h = build_h(node, 2, FieldMode::Exact);
        for (const auto& alpha : node.mult.elems)
            CHECK(h.taylor_coeff(node.point, alpha) == node.data.at(alpha));
    }
}

TEST_CASE("build_h degree is bounded by the lower set") {
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        Problem p = rand_problem(rng);
        for (const auto& node : p.nodes) {
            std::uint32_t maxdeg = 0;
            for (const auto& m : node.mult.elems) maxdeg = std::max(maxdeg, m.deg());
            Poly h = build_h(node, p.arity(), p.mode);
            CHECK(h.total_deg() <= static_cast<int>(maxdeg));
            for (const auto& alpha : node.mult.elems)
                CHECK(h.taylor_coeff(node.point, alpha) == node.data.at(alpha));
        }
    }
}

TEST_CASE("constraint stream") {
    Problem p = four_node_problem();
    auto cs = constraints(p);
    CHECK(cs.size() == 9);
    CHECK(p.constraint_count() == 9);
    // node grouping in input order, prefix sizes growing within a node
    std::size_t expect_node[] = {0, 1, 2, 2, 2, 3, 3, 3, 3};
    for (std::size_t k = 0; k < cs.size(); ++k) {
        CHECK(cs[k].node_index == expect_node[k]);
        CHECK(cs[k].prefix.contains(cs[k].alpha));
        CHECK(is_lower_set(cs[k].prefix.elems));
        // dropping the newest alpha keeps a lower set
        std::vector<Monomial> without;
        for (const auto& m : cs[k].prefix.elems)
            if (!(m == cs[k].alpha)) without.push_back(m);
        CHECK(is_lower_set(without));
    }

    Problem single;
    single.varnames = {"x", "y"};
    single.ord = OrderXi::with_arity(2);
    Node n;
    n.point = pt({"1", "2"});
    n.mult.elems = {Monomial{0, 0}};
    n.data.emplace(Monomial{0, 0}, q(5));
    single.nodes.push_back(n);
    auto cs1 = constraints(single);
    REQUIRE(cs1.size() == 1);
    CHECK(cs1[0].alpha == Monomial{0, 0});
}

TEST_CASE("validation rejects duplicate points") {
    Problem p;
    p.varnames = {"x"};
    p.ord = OrderXi::with_arity(1);
    for (int i = 0; i < 2; ++i) {
        Node n;
        n.point = pt({"3"});
        n.mult.elems = {Monomial{0}};
        n.data.emplace(Monomial{0}, q(i + 1));
        p.nodes.push_back(n);
    }
    CHECK_THROWS_AS(p.validate(), ProblemError);
}

TEST_CASE("problem files parse per the schema") {
    std::stringstream file(R"({
      "variables": ["x","y"], "field": "rational", "xi": 0,
      "varorder": ["y","x"],
      "nodes": [
        { "point": ["-1","2"], "data": [ { "alpha": [0,0], "value": "2" } ] },
        { "point": ["2","1"],
          "data": [ { "alpha": [0,0], "value": "4" },
                    { "alpha": [1,0], "value": "5" },
                    { "alpha": [0,1], "value": "2" } ] }
      ],
      "evaluate_at": ["2","2"] })");
    nlohmann::json j;
    file >> j;
    Problem p = problem_from_json(j);
    CHECK(p.varnames == std::vector<std::string>{"x", "y"});
    CHECK(p.mode == FieldMode::Exact);
    CHECK(p.ord.xi == 0);
    CHECK(p.ord.varorder == std::vector<std::size_t>{1, 0});
    CHECK(p.nodes.size() == 2);
    CHECK(p.nodes[1].data.at(Monomial{1, 0}) == q(5));
    REQUIRE(p.evaluate_at.has_value());
    CHECK((*p.evaluate_at)[0] == q(2));

    // round-trip through the schema
    Problem p2 = problem_from_json(problem_to_json(p));
    CHECK(problem_to_json(p2) == problem_to_json(p));
}

TEST_CASE("malformed lower set is reported with the offending alphas") {
    nlohmann::json j = nlohmann::json::parse(R"({
      "variables": ["x","y"], "field": "rational",
      "nodes": [ { "point": ["0","0"],
                   "data": [ { "alpha": [0,0], "value": "1" },
                             { "alpha": [1,1], "value": "2" } ] } ] })");
    try {
        problem_from_json(j);
        FAIL("expected ProblemError");
    } catch (const ProblemError& e) {
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("schema validation errors") {
    CHECK_THROWS_AS(problem_from_json(nlohmann::json::parse(
                        R"({"variables":["x"],"field":"complex","nodes":[]})")),
                    ProblemError);
    CHECK_THROWS_AS(problem_from_json(nlohmann::json::parse(
                        R"({"variables":["x","y"],"varorder":["x","x"],"nodes":[]})")),
                    ProblemError);
    CHECK_THROWS_AS(problem_from_json(nlohmann::json::parse(
                        R"({"variables":["x","y"],"varorder":["x","z"],"nodes":[]})")),
                    ProblemError);
    CHECK_THROWS_AS(problem_from_json(nlohmann::json::parse(
                        R"({"variables":["x"],"nodes":[{"point":["1","2"],
                            "data":[{"alpha":[0],"value":"1"}]}]})")),
                    ProblemError);
    CHECK_THROWS_AS(problem_from_json(nlohmann::json::parse(R"({"nodes":[]})")), ProblemError);
}

TEST_CASE("float-mode files parse decimal coordinates") {
    nlohmann::json j = nlohmann::json::parse(R"({
      "variables": ["x","y"], "field": "float64",
      "nodes": [ { "point": ["1.75","1.75"], "data": [ { "alpha": [0,0], "value": "1.8123786765066033" } ] } ],
      "evaluate_at": ["2","2"] })");
    Problem p = problem_from_json(j);
    CHECK(p.mode == FieldMode::Float64);
    CHECK(p.nodes[0].point[0].to_double() == 1.75);
}
